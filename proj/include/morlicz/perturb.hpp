#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morlicz/space.hpp"

namespace morlicz {

using Objective = std::function<double(const FiniteVector&)>;

/// A minimization instance: proper lower-semicontinuous objective, bounded
/// below on a bounded domain.
struct Problem {
    Objective f;
    BoundedDomain S;
    std::optional<double> f_inf_hint;
    std::string name = "problem";
};

struct EpsArgminSet {
    double epsilon = 0.0;
    std::vector<FiniteVector> points;
    double inf_est = 0.0;
    std::string method_tag = "multistart";
};

/// Output bundle of the strong-perturbation construction, with the three
/// postcondition measurements recomputed from the assembled data.
struct PerturbationCertificate {
    FiniteVector a_bar;   ///< theta on 1..N, epsilon beyond (up to the truncation)
    double theta = 0.0;
    std::size_t tail_start = 0; ///< N: indices above carry epsilon
    double delta = 0.0;
    double k_n = 0.0;
    double epsilon = 0.0;
    int n = 0;
    // measured postconditions
    double p_norm = 0.0;   ///< sup-norm of the weight sequence (tail included)
    double g_at_x = 0.0;   ///< weighted modular at the pinned point
    double tail_diam = 0.0; ///< max tail norm over sampled sublevel points
    // bookkeeping for the admissible-range flag K_n in (0, 6C)
    double c_est = 0.0;
    bool k_in_range = false;
    std::uint64_t seed = 0;
};

struct SolveResult {
    FiniteVector x_star;
    double value = 0.0;
    /// rows: (iteration, objective value, step size)
    std::vector<std::array<double, 3>> trace;
    bool certified = false; ///< descent converged before the budget ran out
};

struct WpmcReport {
    double wpmc_score = 0.0; ///< sup over trials of terminal distance to the near-best set
    std::vector<std::pair<double, double>> dist_trace; ///< (level, diameter proxy)
    int cluster_count = 0;
    double cluster_radius = 0.0;
    int converged_trials = 0; ///< descents that certified; only these are scored
    std::vector<FiniteVector> terminals;
};

/// Best value over a quasi-random sample of S refined by coordinate descent
/// from the best seeds; deterministic under a fixed seed.
double estimate_infimum(const Problem& p, const MusielakFamily& fam, int budget,
                        std::uint64_t seed);

/// Sampled members of {x in S : f(x) <= inf + epsilon}; every stored point is
/// certified by direct evaluation.
EpsArgminSet eps_argmin(const Problem& p, const MusielakFamily& fam, double epsilon, int budget,
                        std::uint64_t seed);

/// Max Luxemburg norm of the coordinate tail beyond head_dim over the sample;
/// an upper bound for the sample's distance to its head projection.
double noncompactness_proxy(const MusielakFamily& fam, const std::vector<FiniteVector>& points,
                            std::size_t head_dim);

/// The constructive strong-perturbation recipe: K_n from a descending dyadic
/// grid with level diameter below 1/n at 3K_n, then delta = K_n * epsilon,
/// theta small against nu, and the tail cut N from the modular tail of x.
PerturbationCertificate construct_strong_perturbation(const MusielakFamily& fam,
                                                      const BoundedDomain& S,
                                                      const FiniteVector& x, double epsilon,
                                                      int n, std::uint64_t seed);

/// Minimizes f + weighted modular by multi-start projected pattern descent;
/// the trace records the nonincreasing best value per iteration block.
SolveResult minimize_perturbed(const Problem& p, const MusielakFamily& fam, const FiniteVector& a,
                               int budget, std::uint64_t seed, int starts = 8);

/// Randomized minimizing-sequence diagnostic for the perturbed problem
/// f + weighted modular: independent descents, terminal distances to the
/// near-best set, sublevel diameter trace, and clustering of terminals.
WpmcReport wpmc_diagnostic(const Problem& p, const MusielakFamily& fam, const FiniteVector& a,
                           const SolveResult& solve, int trials, std::uint64_t seed,
                           int per_trial_budget = 6000);

/// f + (1/n) * modular on the same domain.
Problem coercive_lift(const Problem& p, int n, const MusielakFamily& fam);

} // namespace morlicz
