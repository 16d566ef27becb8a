#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "morlicz/errors.hpp"

namespace morlicz {

/// A positive weight sequence accessed in log space (the sequences of
/// interest overflow double precision within a handful of indices).
class WeightSequence {
public:
    enum class ClassTag { LambdaInfinity, Lambda, Unclassified };

    /// w_i = c for all i.
    static WeightSequence constant(double c);
    /// w_i = 1/i; tagged Lambda (vanishing terms, divergent partial sums).
    static WeightSequence harmonic();
    /// w_k = 1/N(a_k) with N(t) = t^2 exp(-1/(2t)) and a_k = k^{-2k};
    /// tagged LambdaInfinity. Indices above depth keep the last value.
    static WeightSequence section6(int depth = 20);
    static WeightSequence from_values(std::vector<double> w);
    static WeightSequence from_log_values(std::vector<double> log_w);

    double log_weight(std::size_t i) const; ///< 1-based index
    double weight(std::size_t i) const;     ///< may overflow to +inf
    ClassTag class_tag() const { return tag_; }
    /// Largest index the sequence is meant to be probed at (finite lists
    /// extend past it by their final value).
    std::size_t probe_limit() const { return limit_; }
    const std::string& label() const { return label_; }

private:
    WeightSequence(std::function<double(std::size_t)> gen, ClassTag tag, std::size_t limit,
                   std::string label)
        : gen_(std::move(gen)), tag_(tag), limit_(limit), label_(std::move(label)) {}
    std::function<double(std::size_t)> gen_; // returns log w_i
    ClassTag tag_;
    std::size_t limit_;
    std::string label_;
};

struct WeightClassReport {
    bool monotone_up = false;   ///< nondecreasing over the probed range
    bool monotone_down = false; ///< nonincreasing over the probed range
    bool diverging = false;     ///< terms grow past the probe threshold
    bool vanishing = false;     ///< terms fall below the probe threshold
    bool divergent_sum = false; ///< partial sums keep growing between horizons
    bool tag_consistent = false;
};

/// Samples the sequence up to its probe limit (capped by horizon) and checks
/// whether the declared class tag is consistent with the observations.
WeightClassReport classify_weights(const WeightSequence& w, std::size_t horizon = 100000);

} // namespace morlicz
