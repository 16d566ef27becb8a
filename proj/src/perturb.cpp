#include "morlicz/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "morlicz/rng.hpp"

namespace morlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Cheap projection: clamp first, enter the norm bisection only when the
/// single-modular membership test fails.
FiniteVector project_fast(const MusielakFamily& fam, const std::vector<OrliczFunction>& fns,
                          const BoundedDomain& S, FiniteVector y) {
    for (std::size_t i = 0; i < S.dim(); ++i) {
        if (S.positive()) y[i] = std::max(y[i], 0.0);
        if (!S.boxes().empty()) y[i] = std::clamp(y[i], S.boxes()[i].first, S.boxes()[i].second);
    }
    double r = S.norm_radius();
    double s = 0.0;
    bool in_ball = true;
    for (std::size_t i = 0; i < S.dim(); ++i) {
        double t = std::abs(y[i]) / r;
        if (t > fns[i].eval_domain_hint()) { in_ball = false; break; }
        s += fns[i].value(t);
        if (s > 1.0) { in_ball = false; break; }
    }
    if (in_ball) return y;
    double nrm = luxemburg_norm(fam, y);
    if (nrm > r) {
        double c = r / nrm * (1.0 - 1e-12);
        for (std::size_t i = 0; i < S.dim(); ++i) y[i] *= c;
    }
    return y;
}

struct DescentOut {
    FiniteVector x;
    double value = kInf;
    int evals = 0;
    bool converged = false;
    std::vector<std::array<double, 3>> trace;
};

DescentOut pattern_descent(const Objective& obj, const MusielakFamily& fam,
                           const std::vector<OrliczFunction>& fns, const BoundedDomain& S,
                           FiniteVector x0, int budget, bool record_trace, Rng* shuffle_rng) {
    DescentOut out;
    out.x = project_fast(fam, fns, S, std::move(x0));
    out.value = obj(out.x);
    out.evals = 1;
    double step = 0.25 * std::max(1.0, S.norm_radius());
    std::vector<std::size_t> order(S.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (record_trace) out.trace.push_back({0.0, out.value, step});
    double iter = 0.0;
    while (step > 1e-11 && out.evals < budget) {
        if (shuffle_rng) {
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[shuffle_rng->below(i)]);
        }
        bool improved = false;
        for (std::size_t idx : order) {
            if (out.evals >= budget) break;
            for (double sgn : {1.0, -1.0}) {
                FiniteVector y = out.x;
                y[idx] += sgn * step;
                y = project_fast(fam, fns, S, std::move(y));
                double fy = obj(y);
                ++out.evals;
                if (fy < out.value - 1e-16 * (1.0 + std::abs(out.value))) {
                    out.x = std::move(y);
                    out.value = fy;
                    improved = true;
                    break;
                }
            }
        }
        iter += 1.0;
        if (record_trace) out.trace.push_back({iter, out.value, step});
        if (!improved) step *= 0.5;
    }
    out.converged = step <= 1e-9;
    return out;
}

Objective perturbed_objective(const Problem& p, const std::vector<OrliczFunction>& fns,
                              const FiniteVector& a) {
    auto f = p.f;
    auto aw = a;
    return [f, aw, &fns](const FiniteVector& x) {
        double s = f(x);
        for (std::size_t i = 0; i < x.dim() && i < aw.dim(); ++i)
            if (aw[i] != 0.0) s += aw[i] * fns[i].value(x[i]);
        return s;
    };
}

} // namespace

double estimate_infimum(const Problem& p, const MusielakFamily& fam, int budget,
                        std::uint64_t seed) {
    if (budget < 8) throw ConstructionError("infimum estimation needs a budget of at least 8");
    auto fns = fam.materialize(p.S.dim());
    Rng rng(seed);
    int n_sample = budget / 2;
    std::vector<std::pair<double, FiniteVector>> seeds;
    FiniteVector origin = p.S.project(fam, FiniteVector(p.S.dim()));
    double f0 = p.f(origin);
    if (std::isfinite(f0)) seeds.emplace_back(f0, origin);
    bool any_finite = std::isfinite(f0);
    for (int k = 1; k < n_sample; ++k) {
        FiniteVector x = p.S.sample(fam, rng);
        double v = p.f(x);
        if (std::isfinite(v)) {
            any_finite = true;
            seeds.emplace_back(v, std::move(x));
        }
    }
    if (!any_finite) throw PropernessError("objective is infinite on every sampled point");
    std::sort(seeds.begin(), seeds.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t keep = std::min<std::size_t>(seeds.size(), 4);
    double best = seeds.front().first;
    int descent_budget = (budget - n_sample) / static_cast<int>(keep);
    for (std::size_t k = 0; k < keep; ++k) {
        auto d = pattern_descent(p.f, fam, fns, p.S, seeds[k].second,
                                 std::max(descent_budget, 8), false, nullptr);
        best = std::min(best, d.value);
    }
    return best;
}

EpsArgminSet eps_argmin(const Problem& p, const MusielakFamily& fam, double epsilon, int budget,
                        std::uint64_t seed) {
    if (!(epsilon >= 0.0)) throw ConstructionError("epsilon must be nonnegative");
    EpsArgminSet out;
    out.epsilon = epsilon;
    out.inf_est = estimate_infimum(p, fam, budget, seed);
    Rng rng(Rng::derive(seed, 1));
    auto fns = fam.materialize(p.S.dim());
    double tol = 1e-9 * (1.0 + std::abs(out.inf_est));
    // A descent terminal is always a member at epsilon = 0.
    auto d = pattern_descent(p.f, fam, fns, p.S, p.S.project(fam, FiniteVector(p.S.dim())),
                             budget / 2, false, nullptr);
    if (d.value <= out.inf_est + epsilon + tol) out.points.push_back(d.x);
    for (int k = 0; k < budget / 2 && out.points.size() < 256; ++k) {
        FiniteVector x = p.S.sample(fam, rng);
        double v = p.f(x);
        if (std::isfinite(v) && v <= out.inf_est + epsilon + tol) out.points.push_back(std::move(x));
    }
    return out;
}

double noncompactness_proxy(const MusielakFamily& fam, const std::vector<FiniteVector>& points,
                            std::size_t head_dim) {
    if (points.empty()) throw ConstructionError("noncompactness proxy needs a nonempty sample");
    double worst = 0.0;
    for (const auto& x : points) {
        if (x.dim() <= head_dim) continue;
        FiniteVector tail(x.dim());
        for (std::size_t i = head_dim; i < x.dim(); ++i) tail[i] = x[i];
        worst = std::max(worst, luxemburg_norm(fam, tail));
    }
    return worst;
}

PerturbationCertificate construct_strong_perturbation(const MusielakFamily& fam,
                                                      const BoundedDomain& S,
                                                      const FiniteVector& x, double epsilon,
                                                      int n, std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw ConstructionError("epsilon must be positive");
    if (n < 1) throw ConstructionError("n must be a positive integer");
    const std::size_t dim = S.dim();
    auto fns = fam.materialize(dim);
    PerturbationCertificate cert;
    cert.epsilon = epsilon;
    cert.n = n;
    cert.seed = seed;

    // Descending dyadic grid: the first K with small sublevel diameter at 3K.
    // The 0.8 margin absorbs the sampled lower-bound character of the
    // diameter estimate.
    double k_n = 0.0;
    std::vector<std::pair<double, double>> phi_trace;
    for (int j = 0; j <= 60; ++j) {
        double cand = std::ldexp(1.0, -j);
        double phi = modular_level_diameter(fam, 3.0 * cand, dim, 32, Rng::derive(seed, 17));
        phi_trace.emplace_back(cand, phi);
        if (phi < 0.8 / n) {
            k_n = cand;
            break;
        }
    }
    if (k_n == 0.0) {
        std::string msg = "no admissible K on the dyadic grid; diameter trace:";
        for (auto& [k, d] : phi_trace) msg += " (" + std::to_string(k) + "," + std::to_string(d) + ")";
        throw RangeError(msg);
    }
    cert.k_n = k_n;
    cert.delta = k_n * epsilon;

    double nu = nu_estimate(fam, S.norm_radius(), dim, 48, Rng::derive(seed, 23)).value;
    cert.c_est = nu;
    cert.k_in_range = k_n > 0.0 && k_n < 6.0 * nu;
    double theta = std::min(0.5 * epsilon, cert.delta / (4.0 * nu + 1e-12));

    // Tail cut: smallest N with epsilon * (modular of the tail) < delta / 2.
    std::vector<double> vals(dim, 0.0);
    for (std::size_t i = 0; i < dim && i < x.dim(); ++i) vals[i] = fns[i].value(x[i]);
    double total = std::accumulate(vals.begin(), vals.end(), 0.0);
    std::size_t N = 0;
    double head = 0.0;
    while (N < dim && epsilon * (total - head) >= 0.5 * cert.delta) {
        head += vals[N];
        ++N;
    }
    // Enforce the pinned-point bound directly; shrinking theta only helps.
    while (theta * head >= 0.495 * cert.delta) theta *= 0.5;
    cert.theta = theta;
    cert.tail_start = N;

    cert.a_bar = FiniteVector(dim);
    for (std::size_t i = 0; i < dim; ++i) cert.a_bar[i] = i < N ? theta : epsilon;
    // The weight sequence continues with epsilon beyond the truncation, so
    // its sup norm is epsilon even when N reaches dim.
    double stored_max = 0.0;
    for (std::size_t i = 0; i < dim; ++i) stored_max = std::max(stored_max, cert.a_bar[i]);
    cert.p_norm = std::max(stored_max, epsilon);
    cert.g_at_x = weighted_modular(fam, cert.a_bar, x);

    // Sample the sublevel set of the perturbation at 3*delta: random domain
    // points with their tails shrunk until they qualify, plus x itself.
    std::vector<FiniteVector> pts;
    pts.push_back(x);
    Rng rng(Rng::derive(seed, 31));
    auto g_of = [&](const FiniteVector& y) { return weighted_modular(fam, cert.a_bar, y); };
    for (int s = 0; s < 24; ++s) {
        FiniteVector y = S.sample(fam, rng);
        if (g_of(y) > 2.5 * cert.delta) {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 60; ++it) {
                double c = 0.5 * (lo + hi);
                FiniteVector z = y;
                for (std::size_t i = 0; i < dim; ++i) z[i] *= c;
                (g_of(z) > 2.5 * cert.delta ? hi : lo) = c;
            }
            for (std::size_t i = 0; i < dim; ++i) y[i] *= lo;
        }
        pts.push_back(std::move(y));
    }
    cert.tail_diam = noncompactness_proxy(fam, pts, N);
    return cert;
}

SolveResult minimize_perturbed(const Problem& p, const MusielakFamily& fam, const FiniteVector& a,
                               int budget, std::uint64_t seed, int starts) {
    if (starts < 1) throw ConstructionError("solver needs at least one start");
    auto fns = fam.materialize(p.S.dim());
    Objective obj = perturbed_objective(p, fns, a);
    Rng rng(seed);
    int per_start = std::max(budget / starts, 16);
    SolveResult best;
    best.value = kInf;
    bool any_finite = false;
    for (int s = 0; s < starts; ++s) {
        FiniteVector x0(p.S.dim());
        if (s > 0)
            x0 = p.S.sample(fam, rng);
        auto d = pattern_descent(obj, fam, fns, p.S, std::move(x0), per_start, true, nullptr);
        if (std::isfinite(d.value)) any_finite = true;
        if (d.value < best.value) {
            best.x_star = std::move(d.x);
            best.value = d.value;
            best.trace = std::move(d.trace);
            best.certified = d.converged;
        }
    }
    if (!any_finite) throw PropernessError("perturbed objective is infinite on every start");
    return best;
}

WpmcReport wpmc_diagnostic(const Problem& p, const MusielakFamily& fam, const FiniteVector& a,
                           const SolveResult& solve, int trials, std::uint64_t seed,
                           int per_trial_budget) {
    auto fns = fam.materialize(p.S.dim());
    Objective obj = perturbed_objective(p, fns, a);
    WpmcReport rep;
    std::vector<double> values;
    std::vector<bool> converged;
    for (int t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        FiniteVector x0 = p.S.sample(fam, rng);
        auto d = pattern_descent(obj, fam, fns, p.S, std::move(x0), per_trial_budget, false, &rng);
        rep.terminals.push_back(std::move(d.x));
        values.push_back(d.value);
        converged.push_back(d.converged);
        if (d.converged) ++rep.converged_trials;
    }
    double best = solve.value;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (converged[i]) best = std::min(best, values[i]);
    double tol_v = 1e-8 * (1.0 + std::abs(best));

    // Near-best set: the solver point plus every terminal achieving the best
    // value; the score is the worst terminal distance to that set.
    // The solver point joins only when it actually achieves the best value;
    // a budget-truncated solve sitting above it would fake a second cluster.
    std::vector<const FiniteVector*> near_best;
    if (solve.value <= best + tol_v || values.empty()) near_best.push_back(&solve.x_star);
    std::vector<bool> is_near(values.size(), false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (converged[i] && values[i] <= best + tol_v) {
            near_best.push_back(&rep.terminals[i]);
            is_near[i] = true;
        }
    }
    auto dist = [&](const FiniteVector& u, const FiniteVector& v) {
        FiniteVector d(u.dim());
        for (std::size_t i = 0; i < u.dim(); ++i) d[i] = u[i] - v[i];
        return luxemburg_norm(fam, d);
    };
    // Only converged minimizing trials count toward the score: a descent
    // stuck on a strictly worse local value, or cut off by its budget, is not
    // a minimizing sequence and says nothing about well-posedness of the
    // infimum.
    double minimizing_tol = 1e-6 * (1.0 + std::abs(best));
    for (std::size_t i = 0; i < rep.terminals.size(); ++i) {
        if (is_near[i]) continue; // member of the set itself
        if (!converged[i] || values[i] > best + minimizing_tol) continue;
        double dmin = kInf;
        for (const FiniteVector* q : near_best) dmin = std::min(dmin, dist(rep.terminals[i], *q));
        rep.wpmc_score = std::max(rep.wpmc_score, dmin);
    }

    // Cluster the near-best set, solver point included (union-find, link
    // below 1e-4); a well-posed instance shows exactly one tight cluster.
    // The link scale sits well above the terminal resolution of a certified
    // descent on a weakly conditioned coordinate, and well below any genuine
    // multi-minimizer separation in the catalog.
    std::vector<std::size_t> parent(near_best.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < near_best.size(); ++i)
        for (std::size_t j = i + 1; j < near_best.size(); ++j)
            if (dist(*near_best[i], *near_best[j]) < 1e-4) parent[find(i)] = find(j);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < near_best.size(); ++i) {
        std::size_t r = find(i);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    rep.cluster_count = static_cast<int>(roots.size());
    for (std::size_t i = 0; i < near_best.size(); ++i)
        for (std::size_t j = i + 1; j < near_best.size(); ++j)
            if (find(i) == find(j))
                rep.cluster_radius =
                    std::max(rep.cluster_radius, dist(*near_best[i], *near_best[j]));

    // Sublevel diameter trace over shrinking levels above the best value.
    double worst = best;
    for (double v : values) worst = std::max(worst, v);
    double span = std::max(worst - best, 1e-12);
    for (int k = 0; k <= 10; ++k) {
        double level = span * std::ldexp(1.0, -k);
        double diam = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (values[i] <= best + level && values[j] <= best + level)
                    diam = std::max(diam, dist(rep.terminals[i], rep.terminals[j]));
        rep.dist_trace.emplace_back(level, diam);
    }
    return rep;
}

Problem coercive_lift(const Problem& p, int n, const MusielakFamily& fam) {
    if (n < 1) throw ConstructionError("lift index must be a positive integer");
    Problem out = p;
    auto f = p.f;
    double inv_n = 1.0 / n;
    out.f = [f, inv_n, fam](const FiniteVector& x) { return f(x) + inv_n * modular(fam, x); };
    out.name = p.name + "+lift";
    return out;
}

} // namespace morlicz
