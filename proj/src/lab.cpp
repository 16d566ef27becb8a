#include "morlicz/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morlicz/rng.hpp"

namespace morlicz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GenericityReport empirical_genericity(const Problem& p, const MusielakFamily& fam, double a_cap,
                                      int trials, std::uint64_t seed, int solver_budget,
                                      int diag_trials, int diag_budget) {
    if (!(a_cap > 0.0)) throw ConstructionError("sampler cap must be positive");
    if (trials < 0) throw ConstructionError("trial count must be nonnegative");
    GenericityReport rep;
    rep.trials = trials;
    rep.sampler_spec = "uniform[0," + std::to_string(a_cap) + "]^dim";
    if (trials == 0) return rep;

    struct TrialOut {
        int status = 0; // 0 success, 1 failure, 2 inconclusive
        GenericityReport::Failure failure;
    };
    std::vector<TrialOut> outs(static_cast<std::size_t>(trials));
    const std::size_t dim = p.S.dim();

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = Rng::derive(seed, static_cast<std::uint64_t>(t));
        TrialOut out;
        try {
            Rng rng(trial_seed);
            FiniteVector a(dim);
            for (std::size_t i = 0; i < dim; ++i) a[i] = rng.uniform(0.0, a_cap);
            SolveResult solve =
                minimize_perturbed(p, fam, a, solver_budget, Rng::derive(trial_seed, 1), 3);
            if (!solve.certified) {
                out.status = 2;
            } else {
                WpmcReport w = wpmc_diagnostic(p, fam, a, solve, diag_trials,
                                               Rng::derive(trial_seed, 2), diag_budget);
                if (w.converged_trials == 0) {
                    out.status = 2; // no complete minimizing sequence to judge
                    outs[static_cast<std::size_t>(t)] = std::move(out);
                    continue;
                }
                bool ok = w.wpmc_score < 1e-3 && w.cluster_count == 1 && w.cluster_radius < 1e-3;
                if (ok) {
                    out.status = 0;
                } else {
                    out.status = 1;
                    out.failure = {trial_seed, a, w.wpmc_score, w.cluster_count, w.cluster_radius};
                }
            }
        } catch (const std::exception&) {
            out.status = 2;
        }
        outs[static_cast<std::size_t>(t)] = std::move(out);
    }
    for (auto& o : outs) {
        if (o.status == 0) ++rep.success_count;
        else if (o.status == 1) rep.failures.push_back(std::move(o.failure));
        else ++rep.inconclusive;
    }
    return rep;
}

StegallRecord stegall_linear(const Problem& p, const MusielakFamily& fam, const FiniteVector& a,
                             int sample_budget, std::uint64_t seed) {
    const std::size_t dim = p.S.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] > 0.0)
            throw ConstructionError("perturbation weights must be <= 0 componentwise");
    StegallRecord rec;
    rec.a = a;
    auto fns = fam.materialize(dim);
    SolveResult solve = minimize_perturbed(p, fam, a, 12000, Rng::derive(seed, 1), 4);
    rec.certified = solve.certified;
    rec.x0 = solve.x_star;

    rec.x_star = FiniteVector(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double ai = i < a.dim() ? a[i] : 0.0;
        if (ai == 0.0) continue;
        double t = std::abs(rec.x0[i]);
        double sgn = rec.x0[i] < 0.0 ? -1.0 : 1.0;
        double d;
        if (fns[i].derivative_available()) {
            d = fns[i].derivative(t);
        } else {
            double h = 1e-7 * (1.0 + t);
            d = (fns[i].value(t + h) - fns[i].value(std::max(t - h, 0.0))) /
                (h + std::min(h, t));
        }
        rec.x_star[i] = -ai * d * sgn;
    }

    auto neg_mod = [&](const FiniteVector& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim && i < a.dim(); ++i)
            if (a[i] != 0.0) s += -a[i] * fns[i].value(x[i]);
        return s;
    };
    double f0 = p.f(rec.x0);
    double m0 = neg_mod(rec.x0);
    rec.residual_linear = kInf;
    rec.residual_modular = kInf;
    Rng rng(Rng::derive(seed, 2));
    for (int s = 0; s < sample_budget; ++s) {
        FiniteVector x = p.S.sample(fam, rng);
        double df = p.f(x) - f0;
        double lin = 0.0;
        for (std::size_t i = 0; i < dim; ++i) lin += rec.x_star[i] * (x[i] - rec.x0[i]);
        rec.residual_linear = std::min(rec.residual_linear, df - lin);
        rec.residual_modular = std::min(rec.residual_modular, df - (neg_mod(x) - m0));
    }

    // Dual-norm lower estimate: coordinate rays plus random directions on
    // the unit sphere of the space.
    for (std::size_t i = 0; i < dim; ++i)
        if (rec.x_star[i] != 0.0)
            rec.dual_norm_est =
                std::max(rec.dual_norm_est, std::abs(rec.x_star[i]) * inverse(fns[i], 1.0));
    for (int s = 0; s < 64; ++s) {
        FiniteVector d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = rng.normal();
        double nrm = luxemburg_norm(fam, d);
        if (nrm == 0.0) continue;
        double ip = 0.0;
        for (std::size_t i = 0; i < dim; ++i) ip += rec.x_star[i] * d[i];
        rec.dual_norm_est = std::max(rec.dual_norm_est, std::abs(ip) / nrm);
    }
    double a_sup = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) a_sup = std::max(a_sup, std::abs(a[i]));
    rec.norm_bound =
        a_sup * nu_estimate(fam, p.S.norm_radius() + 1.0, dim, 48, Rng::derive(seed, 3)).value;
    return rec;
}

NegativePerturbationResult negative_perturbation(const Problem& p, const MusielakFamily& fam,
                                                 double delta, double epsilon, int budget,
                                                 std::uint64_t seed) {
    if (!(delta > 0.0 && delta < epsilon))
        throw RangeError("negative perturbation needs 0 < delta < epsilon");
    const std::size_t dim = p.S.dim();
    NegativePerturbationResult res;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
        FiniteVector a(dim), neg(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            a[i] = rng.uniform(delta, epsilon);
            neg[i] = -a[i];
        }
        res.a = a;
        SolveResult solve;
        try {
            solve = minimize_perturbed(p, fam, neg, budget, Rng::derive(seed, 100 + attempt));
        } catch (const PropernessError&) {
            continue;
        }
        res.x_min = solve.x_star;
        res.value = solve.value;
        bool interior = luxemburg_norm(fam, solve.x_star) < p.S.norm_radius() * (1.0 - 1e-6);
        if (!p.S.boxes().empty()) {
            for (std::size_t i = 0; i < dim; ++i) {
                auto [lo, hi] = p.S.boxes()[i];
                double span = std::max(hi - lo, 1e-12);
                if (solve.x_star[i] < lo + 1e-9 * span || solve.x_star[i] > hi - 1e-9 * span)
                    interior = false;
            }
        }
        if (solve.certified && interior) {
            res.attained = true;
            return res;
        }
    }
    res.attained = false;
    return res;
}

MonotonicityResult monotonicity_check(const Problem& p, const MusielakFamily& fam, int pairs,
                                      double a_cap, int budget, std::uint64_t seed) {
    if (!p.S.positive())
        throw ConstructionError("the solution-map transform needs a positive-cone domain");
    MonotonicityResult res;
    res.min_inner_product = kInf;
    const std::size_t dim = p.S.dim();
    for (int k = 0; k < pairs; ++k) {
        std::uint64_t s = Rng::derive(seed, static_cast<std::uint64_t>(k));
        Rng rng(s);
        FiniteVector a1(dim), a2(dim);
        for (std::size_t i = 0; i < dim; ++i) a1[i] = rng.uniform(0.0, a_cap);
        for (std::size_t i = 0; i < dim; ++i) a2[i] = rng.uniform(0.0, a_cap);
        SolveResult s1 = minimize_perturbed(p, fam, a1, budget, Rng::derive(s, 1));
        SolveResult s2 = minimize_perturbed(p, fam, a2, budget, Rng::derive(s, 2));
        if (!s1.certified || !s2.certified) {
            ++res.skipped_pairs;
            continue;
        }
        FiniteVector y1 = t_map(fam, s1.x_star);
        FiniteVector y2 = t_map(fam, s2.x_star);
        double ip = 0.0;
        for (std::size_t i = 0; i < dim; ++i) ip += (a2[i] - a1[i]) * (y1[i] - y2[i]);
        res.min_inner_product = std::min(res.min_inner_product, ip);
        ++res.certified_pairs;
    }
    if (res.certified_pairs == 0) res.min_inner_product = 0.0;
    return res;
}

ObstructionResult bump_obstruction_search(const MusielakFamily& fam, double p, int n_max,
                                          const std::vector<double>& t_grid,
                                          const std::vector<std::size_t>& k_grid) {
    if (!(p > 1.0 && p <= 2.0)) throw ConstructionError("obstruction exponent must lie in (1, 2]");
    if (t_grid.empty() || k_grid.empty())
        throw ConstructionError("obstruction search needs nonempty grids");
    std::vector<double> ts = t_grid;
    std::sort(ts.begin(), ts.end(), std::greater<double>());
    ObstructionResult res;
    res.max_log_ratio = -kInf;
    ObstructionWitness wit;
    wit.p = p;
    for (std::size_t k : k_grid) {
        OrliczFunction phi = fam.at(k);
        wit.c_est = std::max(wit.c_est, 1.0 / inverse(phi, 1.0));
    }
    std::size_t pos = 0;
    bool ok = true;
    for (int n = 1; n <= n_max && ok; ++n) {
        bool found = false;
        for (std::size_t ti = pos; ti < ts.size() && !found; ++ti) {
            double t = ts[ti];
            for (std::size_t k : k_grid) {
                double lr = fam.at(k).log_value(t) - p * std::log(t);
                res.max_log_ratio = std::max(res.max_log_ratio, lr);
                if (lr > std::log(static_cast<double>(n))) {
                    wit.k_indices.push_back(k);
                    wit.t_values.push_back(t);
                    wit.log_ratios.push_back(lr);
                    pos = ti + 1; // keep t_n strictly decreasing
                    found = true;
                    break;
                }
            }
        }
        ok = found;
    }
    if (ok) res.witness = std::move(wit);
    else res.max_log_ratio = std::max(res.max_log_ratio, -kInf);
    return res;
}

BlockAggregate lambda_block_aggregate(const OrliczFunction& m, const WeightSequence& w,
                                      std::size_t block_count) {
    if (w.class_tag() != WeightSequence::ClassTag::Lambda)
        throw ConstructionError("block aggregation needs a weight sequence of the vanishing class");
    if (block_count == 0) throw ConstructionError("block count must be positive");
    BlockAggregate out{MusielakFamily::constant(m), {}};
    std::vector<double> sums;
    std::size_t pos = 1;
    const std::size_t limit = w.probe_limit();
    for (std::size_t k = 1; k <= block_count; ++k) {
        double band_lo = 1.0 - 1.0 / static_cast<double>(k + 1);
        std::size_t start = pos;
        for (;;) {
            if (start > limit)
                throw ConstructionError("weights exhausted before block " + std::to_string(k));
            double sum = 0.0;
            std::size_t i = start;
            bool accepted = false, overshot = false;
            for (; i <= limit; ++i) {
                sum += w.weight(i);
                if (sum >= 1.0) { overshot = true; break; }
                if (sum >= band_lo) { accepted = true; break; }
            }
            if (accepted) {
                out.blocks.emplace_back(start, i, sum);
                sums.push_back(sum);
                pos = i + 1;
                break;
            }
            if (overshot) {
                ++start; // the first index of the attempt is too heavy; skip it
                continue;
            }
            throw ConstructionError("weights exhausted before block " + std::to_string(k));
        }
    }
    out.family = MusielakFamily::weighted(m, WeightSequence::from_values(sums));
    return out;
}

Section6Report section6_verify(int depth, double p, double beta) {
    if (!(p > 0.0 && p < 1.0)) throw RangeError("scale exponent p must lie in (0, 1)");
    if (depth < 3 || depth > 25) throw RangeError("depth must lie in [3, 25]");
    Section6Report rep;
    rep.depth = depth;
    rep.p = p;
    OrliczFunction n_fn = OrliczFunction::exponential_example();
    OrliczFunction m = section6_piecewise(depth);

    std::vector<double> log_a(depth), log_b(depth), log_na(depth), log_nb(depth);
    for (int k = 1; k <= depth; ++k) {
        log_a[k - 1] = -2.0 * k * std::log(static_cast<double>(k));
        log_b[k - 1] = std::log(2.0) - 2.0 * (k + 1) * std::log(static_cast<double>(k + 1));
        log_na[k - 1] = n_fn.log_value(std::exp(log_a[k - 1]));
        log_nb[k - 1] = n_fn.log_value(std::exp(log_b[k - 1]));
    }

    // b_k / a_k: exact rational arithmetic while the powers are representable,
    // log-space beyond (the two agree to 1e-12 relative on the overlap).
    for (int k = 1; k <= depth; ++k) {
        double ratio;
        if (k <= 12) {
            ratio = 2.0 * std::pow(static_cast<double>(k), 2.0 * k) /
                    std::pow(static_cast<double>(k + 1), 2.0 * (k + 1));
        } else {
            ratio = std::exp(log_b[k - 1] - log_a[k - 1]);
        }
        rep.ba_ratio.push_back(ratio);
    }
    rep.b1_over_a1 = rep.ba_ratio[0];
    rep.b2_over_a2 = rep.ba_ratio[1];
    for (std::size_t k = 0; k + 1 < rep.ba_ratio.size(); ++k)
        rep.ratio_decay.push_back(rep.ba_ratio[k + 1] / rep.ba_ratio[k]);

    auto series_scan = [](const std::vector<double>& log_terms, double& sum, double& q) {
        sum = 0.0;
        q = 0.0;
        for (std::size_t k = 0; k < log_terms.size(); ++k) {
            sum += std::exp(log_terms[k]);
            if (k > 0) q = std::max(q, std::exp(log_terms[k] - log_terms[k - 1]));
        }
    };
    std::vector<double> lt_ba(depth), lt_nb(depth), lt_w(depth > 1 ? depth - 1 : 0);
    for (int k = 0; k < depth; ++k) {
        lt_ba[k] = log_b[k] - log_a[k];
        lt_nb[k] = log_nb[k] - log_na[k];
        // w_k / w_{k+1} = N(a_{k+1}) / N(a_k)
        if (k + 1 < depth) lt_w[k] = log_na[k + 1] - log_na[k];
    }
    series_scan(lt_ba, rep.sum_ba, rep.q_ba);
    series_scan(lt_nb, rep.sum_nb_na, rep.q_nb);
    series_scan(lt_w, rep.sum_w_ratio, rep.q_w);
    rep.geometric_ba = rep.q_ba < 1.0;
    rep.geometric_nb = rep.q_nb < 1.0;
    rep.geometric_w = rep.q_w < 1.0;

    // beta_n solving w_n M(beta_n) = beta, i.e. M(beta_n) = beta N(a_n).
    const double log_beta = std::log(beta);
    for (int n = 1; n <= depth; ++n) {
        double bn = inverse_log(m, log_beta + log_na[n - 1]);
        rep.beta_n.push_back(bn);
        double log_w = -log_na[n - 1];
        rep.log_w_prime.push_back(log_w - p * std::log(bn));
    }

    // Divergence rate at the fixed exponent 1.5: C_q (a_k/b_k)^{q-1} with
    // C_q = (q-1)^{q-1} q^{-q}.
    const double q = 1.5;
    double log_cq = (q - 1.0) * std::log(q - 1.0) - q * std::log(q);
    for (int k = 1; k <= std::min(depth, 8); ++k)
        rep.log_divergence.push_back(log_cq + (q - 1.0) * (log_a[k - 1] - log_b[k - 1]));
    if (rep.log_divergence.size() >= 5)
        rep.divergence_exceeds_1e6_by_k5 = rep.log_divergence[4] > std::log(1e6);

    rep.delta2_fails = !delta2_check(m, 0.5).holds;
    rep.alpha_s = matuszewska_indices(OrliczFunction::power_scaled(m, p)).alpha;
    rep.alpha_target = 1.0 + p;
    return rep;
}

} // namespace morlicz
