#include "morlicz/objectives.hpp"

#include <cmath>

namespace morlicz {

namespace {
double param_or(const std::vector<double>& params, std::size_t i, double fallback) {
    return i < params.size() ? params[i] : fallback;
}
} // namespace

Objective make_objective(const std::string& name, const std::vector<double>& params,
                         std::size_t dim, const MusielakFamily& fam) {
    if (name == "quadratic") {
        double c = param_or(params, 0, 0.2);
        std::vector<double> center(dim), weight(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            center[i] = c * (i % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(i + 2);
            weight[i] = 1.0 + 0.1 * static_cast<double>(i);
        }
        return [center, weight](const FiniteVector& x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) {
                double d = x[i] - (i < center.size() ? center[i] : 0.0);
                s += (i < weight.size() ? weight[i] : 1.0) * d * d;
            }
            return s;
        };
    }
    if (name == "two_well") {
        // Wells with different coordinate magnitudes: a symmetric pair would
        // be tied under every even perturbation, which defeats the point of
        // tie-breaking experiments.
        double sep = param_or(params, 0, 0.3);
        std::vector<double> c1(dim), c2(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            c1[i] = sep / static_cast<double>(i + 1);
            c2[i] = -sep / static_cast<double>(i + 2);
        }
        return [c1, c2](const FiniteVector& x) {
            double s1 = 0.0, s2 = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) {
                double a = i < c1.size() ? c1[i] : 0.0;
                double b = i < c2.size() ? c2[i] : 0.0;
                s1 += (x[i] - a) * (x[i] - a);
                s2 += (x[i] - b) * (x[i] - b);
            }
            return std::min(s1, s2);
        };
    }
    if (name == "linear") {
        double g = param_or(params, 0, 1.0);
        std::vector<double> grad(dim);
        for (std::size_t i = 0; i < dim; ++i)
            grad[i] = g * (i % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(i + 1);
        return [grad](const FiniteVector& x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.dim() && i < grad.size(); ++i) s += grad[i] * x[i];
            return s;
        };
    }
    if (name == "modular_self") {
        return [fam](const FiniteVector& x) { return modular(fam, x); };
    }
    if (name == "polynomial") {
        double c = param_or(params, 0, 0.1);
        return [c](const FiniteVector& x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) {
                double d = x[i] - c;
                s += d * d * d * d + 0.5 * x[i] * x[i];
            }
            return s;
        };
    }
    throw ConstructionError("unknown objective name: " + name);
}

const std::vector<std::string>& objective_names() {
    static const std::vector<std::string> names = {"quadratic", "two_well", "linear",
                                                   "modular_self", "polynomial"};
    return names;
}

} // namespace morlicz
