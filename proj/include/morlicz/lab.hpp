#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "morlicz/perturb.hpp"

namespace morlicz {

struct GenericityReport {
    int trials = 0;
    int success_count = 0;
    int inconclusive = 0;
    struct Failure {
        std::uint64_t seed = 0;
        FiniteVector a;
        double wpmc_score = 0.0;
        int cluster_count = 0;
        double cluster_radius = 0.0;
    };
    std::vector<Failure> failures;
    std::string sampler_spec;
};

/// Samples weight vectors a uniformly in [0, a_cap]^dim, solves f + weighted
/// modular for each, and scores well-posedness; success means the randomized
/// minimizing-sequence diagnostic sees one tight cluster (score and radius
/// below 1e-3, the resolution of a certified descent on the catalog). Trials
/// with no converged diagnostic descent count as inconclusive, not failed.
/// Trials run independently under derived seeds; aggregation is
/// order-independent.
GenericityReport empirical_genericity(const Problem& p, const MusielakFamily& fam, double a_cap,
                                      int trials, std::uint64_t seed, int solver_budget = 10000,
                                      int diag_trials = 4, int diag_budget = 6000);

struct StegallRecord {
    FiniteVector a;      ///< perturbation weights, componentwise <= 0
    FiniteVector x0;     ///< certified minimizer of f + weighted modular
    FiniteVector x_star; ///< linear functional coefficients
    double residual_linear = 0.0;  ///< min over samples of f(x)-f(x0)-<x*,x-x0>
    double residual_modular = 0.0; ///< min over samples of the modular-difference chain
    double dual_norm_est = 0.0;
    double norm_bound = 0.0; ///< sup|a| * nu(K+1)
    bool certified = false;
};

/// Builds the linear functional from the modular subgradient at the solved
/// minimizer and verifies both inequality chains on sampled domain points.
StegallRecord stegall_linear(const Problem& p, const MusielakFamily& fam, const FiniteVector& a,
                             int sample_budget, std::uint64_t seed);

struct NegativePerturbationResult {
    FiniteVector a;
    bool attained = false;
    FiniteVector x_min;
    double value = 0.0;
};

/// Searches weights in [delta, epsilon]^dim such that f minus the weighted
/// modular attains a certified interior minimum on the truncation.
NegativePerturbationResult negative_perturbation(const Problem& p, const MusielakFamily& fam,
                                                 double delta, double epsilon, int budget,
                                                 std::uint64_t seed);

struct MonotonicityResult {
    double min_inner_product = 0.0;
    int certified_pairs = 0;
    int skipped_pairs = 0;
};

/// For sampled weight pairs, maps the two solved minimizers through the
/// coordinate transform and checks the monotonicity inner product of the
/// solution map (domain must sit in the positive cone).
MonotonicityResult monotonicity_check(const Problem& p, const MusielakFamily& fam, int pairs,
                                      double a_cap, int budget, std::uint64_t seed);

struct ObstructionWitness {
    double p = 0.0;
    std::vector<std::size_t> k_indices;
    std::vector<double> t_values;
    std::vector<double> log_ratios; ///< log(Phi_k(t) / t^p), one per n
    double c_est = 0.0;             ///< sup over probed i of 1 / Phi_i^{-1}(1)
};

struct ObstructionResult {
    std::optional<ObstructionWitness> witness;
    double max_log_ratio = 0.0; ///< bounding envelope when no witness exists
};

/// Greedy deterministic search for indices k_n and scales t_n decreasing to
/// zero with Phi_k(t_n) / t_n^p > n for every n <= n_max; ratios are carried
/// in log space.
ObstructionResult bump_obstruction_search(const MusielakFamily& fam, double p, int n_max,
                                          const std::vector<double>& t_grid,
                                          const std::vector<std::size_t>& k_grid);

struct BlockAggregate {
    MusielakFamily family;
    /// (first index, last index, block weight sum) per block k.
    std::vector<std::tuple<std::size_t, std::size_t, double>> blocks;
};

/// Greedy block cuts with partial weight sums in [1 - 1/(k+1), 1); a block
/// attempt that overshoots restarts one index later.
BlockAggregate lambda_block_aggregate(const OrliczFunction& m, const WeightSequence& w,
                                      std::size_t block_count);

struct Section6Report {
    int depth = 0;
    double p = 0.0;
    double b1_over_a1 = 0.0;
    double b2_over_a2 = 0.0;
    std::vector<double> ba_ratio;        ///< b_k / a_k
    std::vector<double> ratio_decay;     ///< successive quotients of ba_ratio
    double sum_ba = 0.0;                 ///< partial sum of b_k / a_k
    double sum_nb_na = 0.0;              ///< partial sum of N(b_k) / N(a_k)
    double sum_w_ratio = 0.0;            ///< partial sum of w_k / w_{k+1}
    double q_ba = 0.0, q_nb = 0.0, q_w = 0.0; ///< worst successive term ratios
    bool geometric_ba = false, geometric_nb = false, geometric_w = false;
    std::vector<double> beta_n;          ///< solves w_n M(beta_n) = beta
    std::vector<double> log_w_prime;     ///< log(w_n / beta_n^p)
    std::vector<double> log_divergence;  ///< log(C_q (a_k/b_k)^{q-1}) at q = 1.5, k = 1..8
    bool divergence_exceeds_1e6_by_k5 = false;
    bool delta2_fails = false;
    double alpha_s = 0.0;                ///< index estimate of t^p M(t)
    double alpha_target = 0.0;           ///< 1 + p
};

/// Computes the worked-example report: ratio series with geometric-decay
/// certification, the doubling failure of the chord function, the divergence
/// rate at the fixed exponent 1.5, and the shifted growth index of t^p M(t)
/// for a scale exponent p in (0, 1).
Section6Report section6_verify(int depth, double p, double beta = 0.4);

} // namespace morlicz
