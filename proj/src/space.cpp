#include "morlicz/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morlicz/rng.hpp"

namespace morlicz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MusielakFamily MusielakFamily::constant(OrliczFunction m) {
    MusielakFamily f;
    f.gen_ = [m](std::size_t) { return m; };
    f.catalog_ = Catalog::Constant;
    f.label_ = "constant";
    f.base_ = std::move(m);
    return f;
}

MusielakFamily MusielakFamily::weighted(OrliczFunction m, WeightSequence w) {
    MusielakFamily f;
    f.gen_ = [m, w](std::size_t i) { return OrliczFunction::weighted_log(m, w.log_weight(i)); };
    f.catalog_ = Catalog::Weighted;
    f.label_ = "weighted:" + w.label();
    f.base_ = std::move(m);
    f.weights_ = std::move(w);
    return f;
}

MusielakFamily MusielakFamily::nakano(std::vector<double> p_seq) {
    if (p_seq.empty()) throw ConstructionError("nakano family needs at least one exponent");
    for (double p : p_seq)
        if (!(p >= 1.0)) throw ConstructionError("nakano exponents must satisfy p_i >= 1");
    MusielakFamily f;
    auto ps = p_seq;
    f.gen_ = [ps](std::size_t i) {
        return OrliczFunction::nakano_exponent(ps[std::min(i, ps.size()) - 1]);
    };
    f.catalog_ = Catalog::Nakano;
    f.label_ = "nakano";
    f.p_seq_ = std::move(p_seq);
    return f;
}

MusielakFamily MusielakFamily::custom(std::function<OrliczFunction(std::size_t)> gen,
                                      std::string label) {
    MusielakFamily f;
    f.gen_ = std::move(gen);
    f.catalog_ = Catalog::Custom;
    f.label_ = std::move(label);
    return f;
}

OrliczFunction MusielakFamily::at(std::size_t i) const {
    if (i == 0) throw RangeError("family indices are 1-based");
    return gen_(i);
}

std::vector<OrliczFunction> MusielakFamily::materialize(std::size_t dim) const {
    std::vector<OrliczFunction> out;
    out.reserve(dim);
    for (std::size_t i = 1; i <= dim; ++i) out.push_back(at(i));
    return out;
}

bool MusielakFamily::non_degenerate(std::size_t probe_dim) const {
    for (std::size_t i = 1; i <= probe_dim; ++i)
        if (!at(i).non_degenerate()) return false;
    return true;
}

BoundedDomain::BoundedDomain(std::size_t dim, double norm_radius, bool positive,
                             std::vector<std::pair<double, double>> boxes)
    : dim_(dim), radius_(norm_radius), positive_(positive), boxes_(std::move(boxes)) {
    if (dim_ == 0) throw ConstructionError("domain dimension must be positive");
    if (!(radius_ > 0.0)) throw ConstructionError("domain norm radius must be positive");
    if (!boxes_.empty() && boxes_.size() != dim_)
        throw ConstructionError("per-coordinate boxes must match the dimension");
    for (const auto& [lo, hi] : boxes_) {
        if (!(lo <= hi)) throw ConstructionError("box bounds must satisfy lo <= hi");
        if (!(hi >= 0.0) || (!positive_ && !(lo <= 0.0)))
            throw ConstructionError("boxes must contain the origin");
    }
}

bool BoundedDomain::contains(const MusielakFamily& fam, const FiniteVector& x, double tol) const {
    if (x.dim() > dim_) {
        for (std::size_t i = dim_; i < x.dim(); ++i)
            if (x[i] != 0.0) return false;
    }
    for (std::size_t i = 0; i < std::min(x.dim(), dim_); ++i) {
        if (positive_ && x[i] < -tol) return false;
        if (!boxes_.empty() && (x[i] < boxes_[i].first - tol || x[i] > boxes_[i].second + tol))
            return false;
    }
    return luxemburg_norm(fam, x) <= radius_ + tol;
}

FiniteVector BoundedDomain::project(const MusielakFamily& fam, const FiniteVector& x) const {
    FiniteVector y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        double v = i < x.dim() ? x[i] : 0.0;
        if (positive_) v = std::max(v, 0.0);
        if (!boxes_.empty()) v = std::clamp(v, boxes_[i].first, boxes_[i].second);
        y[i] = v;
    }
    double nrm = luxemburg_norm(fam, y);
    if (nrm > radius_) {
        double s = radius_ / nrm * (1.0 - 1e-12);
        for (std::size_t i = 0; i < dim_; ++i) y[i] *= s;
    }
    return y;
}

FiniteVector BoundedDomain::sample(const MusielakFamily& fam, Rng& rng) const {
    FiniteVector y(dim_);
    auto fns = fam.materialize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        double cap;
        try {
            cap = radius_ * inverse(fns[i], 1.0);
        } catch (const RangeError&) {
            cap = radius_;
        }
        double lo = positive_ ? 0.0 : -cap, hi = cap;
        if (!boxes_.empty()) {
            lo = std::max(lo, boxes_[i].first);
            hi = std::min(hi, boxes_[i].second);
        }
        y[i] = rng.uniform(lo, hi);
    }
    return project(fam, y);
}

double modular(const MusielakFamily& fam, const FiniteVector& x) {
    auto fns = fam.materialize(x.dim());
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        try {
            s += fns[i].value(x[i]);
        } catch (const RangeError& e) {
            throw RangeError(std::string(e.what()) + " (coordinate " + std::to_string(i + 1) + ")");
        }
    }
    return s;
}

double weighted_modular(const MusielakFamily& fam, const FiniteVector& a, const FiniteVector& x) {
    auto fns = fam.materialize(x.dim());
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        double ai = i < a.dim() ? a[i] : 0.0;
        if (ai == 0.0) continue;
        try {
            s += ai * fns[i].value(x[i]);
        } catch (const RangeError& e) {
            throw RangeError(std::string(e.what()) + " (coordinate " + std::to_string(i + 1) + ")");
        }
    }
    return s;
}

double luxemburg_norm(const MusielakFamily& fam, const FiniteVector& x) {
    double maxabs = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) maxabs = std::max(maxabs, std::abs(x[i]));
    if (maxabs == 0.0) return 0.0;
    auto fns = fam.materialize(x.dim());
    auto mod = [&](double r) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) {
            if (x[i] == 0.0) continue;
            double t = std::abs(x[i]) / r;
            if (t > fns[i].eval_domain_hint()) return kInf;
            s += fns[i].value(t);
            if (s > 1e30) return s;
        }
        return s;
    };
    double lo, hi;
    if (mod(maxabs) > 1.0) {
        lo = maxabs;
        hi = 2.0 * maxabs;
        int guard = 0;
        while (mod(hi) > 1.0) {
            lo = hi;
            hi *= 2.0;
            if (++guard > 2000) throw RangeError("norm bracketing failed to terminate");
        }
    } else {
        hi = maxabs;
        lo = 0.5 * maxabs;
        int guard = 0;
        while (mod(lo) <= 1.0) {
            hi = lo;
            lo *= 0.5;
            if (++guard > 2000) return 0.0; // only degenerate coordinates carry the support
        }
    }
    while (hi - lo > 1e-12 * hi) {
        double mid = 0.5 * (lo + hi);
        (mod(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

MusielakFamily normalize_family(const MusielakFamily& fam) {
    auto gen = [fam](std::size_t i) {
        OrliczFunction phi = fam.at(i);
        double a = inverse(phi, 1.0);
        return OrliczFunction::weighted_log(OrliczFunction::arg_scaled(phi, a),
                                            -phi.log_value(a));
    };
    return MusielakFamily::custom(gen, "normalized:" + fam.label());
}

FiniteVector t_map(const MusielakFamily& fam, const FiniteVector& x) {
    auto fns = fam.materialize(x.dim());
    FiniteVector y(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] < 0.0) throw RangeError("the coordinate map is defined on the positive cone");
        y[i] = fns[i].value(x[i]);
    }
    return y;
}

FiniteVector t_inverse(const MusielakFamily& fam, const FiniteVector& y) {
    auto fns = fam.materialize(y.dim());
    FiniteVector x(y.dim());
    for (std::size_t i = 0; i < y.dim(); ++i) {
        if (y[i] < 0.0) throw RangeError("the coordinate map is defined on the positive cone");
        x[i] = inverse(fns[i], y[i]);
    }
    return x;
}

NuEstimate nu_estimate(const MusielakFamily& fam, double t, std::size_t dim, int samples,
                       std::uint64_t seed) {
    NuEstimate out;
    if (t == 0.0) return out;
    if (!(t > 0.0)) throw ConstructionError("nu is defined for t >= 0");
    auto fns = fam.materialize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!fns[i].non_degenerate()) continue;
        double u = inverse(fns[i], 1.0);
        try {
            out.coordinate_value = std::max(out.coordinate_value, fns[i].value(t * u));
        } catch (const RangeError&) {
            out.coordinate_value = kInf;
        }
    }
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        FiniteVector d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = rng.normal();
        double nrm = luxemburg_norm(fam, d);
        if (nrm == 0.0) continue;
        for (std::size_t i = 0; i < dim; ++i) d[i] *= t / nrm;
        try {
            out.sampled_value = std::max(out.sampled_value, modular(fam, d));
        } catch (const RangeError&) {
            out.sampled_value = kInf;
        }
    }
    out.value = std::max(out.coordinate_value, out.sampled_value);
    return out;
}

double modular_level_diameter(const MusielakFamily& fam, double t, std::size_t dim, int samples,
                              std::uint64_t seed) {
    if (t == 0.0) return 0.0;
    if (!(t > 0.0)) throw ConstructionError("level diameter is defined for t >= 0");
    auto fns = fam.materialize(dim);
    double best = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!fns[i].non_degenerate()) return kInf; // unbounded ray in that coordinate
        double s;
        try {
            s = inverse(fns[i], t);
        } catch (const UnbracketableError&) {
            return kInf;
        }
        best = std::max(best, s / inverse(fns[i], 1.0));
    }
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
        FiniteVector d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = rng.normal();
        // Scale the direction so its modular hits t (monotone in the scale).
        double lo = 0.0, hi = 1.0;
        auto md = [&](double c) {
            FiniteVector y(dim);
            for (std::size_t i = 0; i < dim; ++i) y[i] = c * d[i];
            try {
                return modular(fam, y);
            } catch (const RangeError&) {
                return kInf;
            }
        };
        int guard = 0;
        while (md(hi) < t) {
            lo = hi;
            hi *= 2.0;
            if (++guard > 600) break;
        }
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            (md(mid) < t ? lo : hi) = mid;
        }
        FiniteVector y(dim);
        for (std::size_t i = 0; i < dim; ++i) y[i] = lo * d[i];
        best = std::max(best, luxemburg_norm(fam, y));
    }
    return 2.0 * best;
}

StrongMinReport strong_min_check(const MusielakFamily& fam, const std::vector<double>& t_grid,
                                 std::size_t dim, std::uint64_t seed) {
    if (t_grid.size() < 2) throw ConstructionError("strong-minimum check needs a decreasing grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] < t_grid[i - 1])) throw ConstructionError("t grid must decrease");
    StrongMinReport rep;
    for (double t : t_grid)
        rep.trace.emplace_back(t, modular_level_diameter(fam, t, dim, 32, seed));
    bool finite = true, nonincreasing = true;
    for (std::size_t i = 0; i < rep.trace.size(); ++i) {
        if (!std::isfinite(rep.trace[i].second)) finite = false;
        if (i > 0 && rep.trace[i].second > rep.trace[i - 1].second + 1e-9) nonincreasing = false;
    }
    double first = rep.trace.front().second, last = rep.trace.back().second;
    rep.strong = finite && nonincreasing && (last <= 0.5 * first || last <= 1e-6);
    return rep;
}

Delta2FamilyReport delta2_family_check(const MusielakFamily& fam, double beta,
                                       std::size_t n_begin, std::size_t n_end) {
    if (!(beta > 0.0)) throw ConstructionError("doubling check needs beta > 0");
    if (n_begin == 0 || n_end < n_begin + 1)
        throw ConstructionError("doubling check needs an index range of length >= 2");
    const double log_beta = std::log(beta);
    const int t_points = 160;
    Delta2FamilyReport rep;
    for (double K : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0}) {
        double sum_first = 0.0, sum_second = 0.0;
        std::size_t mid = n_begin + (n_end - n_begin) / 2;
        bool usable = true;
        for (std::size_t n = n_begin; n <= n_end; ++n) {
            OrliczFunction phi = fam.at(n);
            double cap;
            try {
                cap = inverse_log(phi, log_beta);
            } catch (const UnbracketableError&) {
                usable = false;
                break;
            }
            double c_n = 0.0;
            for (int j = 0; j < t_points; ++j) {
                double t = cap * std::exp(-13.8 * (1.0 - static_cast<double>(j) / (t_points - 1)));
                double gap = phi.value(2.0 * t) - K * phi.value(t);
                c_n = std::max(c_n, gap);
            }
            (n <= mid ? sum_first : sum_second) += c_n;
        }
        if (!usable) continue;
        if (sum_second <= 0.5 * sum_first + 1e-9) {
            rep.holds = true;
            rep.k_est = K;
            rep.c_partial = sum_first + sum_second;
            return rep;
        }
        if (rep.k_est == 0.0) {
            rep.k_est = K;
            rep.c_partial = sum_first + sum_second;
        }
    }
    return rep;
}

} // namespace morlicz
