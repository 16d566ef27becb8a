#include "morlicz/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace morlicz {

WeightSequence WeightSequence::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw ConstructionError("constant weight must be positive");
    double lc = std::log(c);
    return WeightSequence([lc](std::size_t) { return lc; }, ClassTag::Unclassified, 1000000,
                          "constant");
}

WeightSequence WeightSequence::harmonic() {
    return WeightSequence([](std::size_t i) { return -std::log(static_cast<double>(i)); },
                          ClassTag::Lambda, 1000000, "harmonic");
}

WeightSequence WeightSequence::section6(int depth) {
    if (depth < 1 || depth > 64) throw ConstructionError("weight depth must be in [1, 64]");
    // log w_k = -log N(a_k) = 1/(2 a_k) - 2 log a_k, with a_k = k^{-2k}.
    std::vector<double> lw(depth);
    for (int k = 1; k <= depth; ++k) {
        double a = std::pow(static_cast<double>(k), -2.0 * k);
        lw[k - 1] = 0.5 / a - 2.0 * std::log(a);
    }
    auto gen = [lw = std::move(lw)](std::size_t i) {
        return lw[std::min(i, lw.size()) - 1];
    };
    return WeightSequence(std::move(gen), ClassTag::LambdaInfinity,
                          static_cast<std::size_t>(depth), "section6");
}

WeightSequence WeightSequence::from_values(std::vector<double> w) {
    std::vector<double> lw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0.0) || !std::isfinite(w[i]))
            throw ConstructionError("weights must be positive and finite");
        lw[i] = std::log(w[i]);
    }
    return from_log_values(std::move(lw));
}

WeightSequence WeightSequence::from_log_values(std::vector<double> log_w) {
    if (log_w.empty()) throw ConstructionError("weight list must be nonempty");
    for (double lw : log_w)
        if (std::isnan(lw)) throw ConstructionError("weights must not be NaN");
    std::size_t limit = log_w.size();
    auto gen = [lw = std::move(log_w)](std::size_t i) {
        return lw[std::min(i, lw.size()) - 1];
    };
    return WeightSequence(std::move(gen), ClassTag::Unclassified, limit, "list");
}

double WeightSequence::log_weight(std::size_t i) const {
    if (i == 0) throw RangeError("weight indices are 1-based");
    return gen_(i);
}

double WeightSequence::weight(std::size_t i) const { return std::exp(log_weight(i)); }

WeightClassReport classify_weights(const WeightSequence& w, std::size_t horizon) {
    std::size_t n = std::min(horizon, std::max<std::size_t>(w.probe_limit(), 2));
    WeightClassReport rep;
    rep.monotone_up = rep.monotone_down = true;
    double prev = w.log_weight(1);
    double sum_half = 0.0, sum_full = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double lw = w.log_weight(i);
        if (lw > prev + 1e-12) rep.monotone_down = false;
        if (lw < prev - 1e-12) rep.monotone_up = false;
        prev = lw;
        double v = lw < 700.0 ? std::exp(lw) : std::numeric_limits<double>::infinity();
        sum_full += v;
        if (i <= n / 2) sum_half = sum_full;
    }
    double last = w.log_weight(n);
    rep.diverging = last > std::log(1e6);
    rep.vanishing = last < std::log(1e-2);
    // Divergence proxy: the second half of the horizon still contributes a
    // nonvanishing share of the partial sum.
    rep.divergent_sum = sum_full - sum_half > 0.05 * std::max(1.0, sum_half);
    switch (w.class_tag()) {
        case WeightSequence::ClassTag::LambdaInfinity:
            rep.tag_consistent = rep.monotone_up && rep.diverging;
            break;
        case WeightSequence::ClassTag::Lambda:
            rep.tag_consistent = rep.vanishing && rep.divergent_sum;
            break;
        case WeightSequence::ClassTag::Unclassified:
            rep.tag_consistent = true;
            break;
    }
    return rep;
}

} // namespace morlicz
