// Acceptance gate: thirteen certified checks, one summary line each.
// Exit status is the number of failed checks; details accompany each line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "morlicz/lab.hpp"
#include "morlicz/objectives.hpp"
#include "morlicz/rng.hpp"
#include "morlicz/serialize.hpp"

using namespace morlicz;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
Outcome run_c1(std::uint64_t seed) {
    double t_start = now_seconds();
    Rng rng(seed);
    double worst = 0.0;
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        MusielakFamily fam = MusielakFamily::constant(OrliczFunction::power(p));
        for (int rep = 0; rep < 100; ++rep) {
            std::size_t dim = 2 + rng.below(999); // <= 1000
            FiniteVector x(dim);
            for (std::size_t i = 0; i < dim; ++i) x[i] = rng.uniform(-1.0, 1.0);
            double lp = 0.0;
            for (std::size_t i = 0; i < dim; ++i) lp += std::pow(std::abs(x[i]), p);
            lp = std::pow(lp, 1.0 / p);
            double got = luxemburg_norm(fam, x);
            worst = std::max(worst, std::abs(got - lp) / lp);
        }
    }
    double elapsed = now_seconds() - t_start;
    std::ostringstream os;
    os << "max rel err " << format_sig(worst) << ", " << format_sig(elapsed) << " s";
    return {worst <= 1e-10 && elapsed < 5.0, os.str()};
}

// ---------------------------------------------------------------- criterion 2
Outcome run_c2(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> exps;
    for (int k = 1; k <= 64; ++k) exps.push_back(1.5 + 1.0 / k);
    std::vector<MusielakFamily> fams = {
        MusielakFamily::weighted(OrliczFunction::power(2.0), WeightSequence::harmonic()),
        MusielakFamily::nakano(exps)};
    double worst = 0.0;
    for (const auto& fam : fams) {
        for (int rep = 0; rep < 100; ++rep) {
            std::size_t k = 1 + rng.below(50);
            double t = rng.uniform(0.1, 3.0);
            FiniteVector x(k);
            x[k - 1] = t;
            double want = t / inverse(fam.at(k), 1.0);
            double got = luxemburg_norm(fam, x);
            worst = std::max(worst, std::abs(got - want) / want);
        }
    }
    return {worst <= 1e-9, "max rel err " + format_sig(worst)};
}

// ---------------------------------------------------------------- criterion 3
Outcome run_c3(std::uint64_t) {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 3.0}) {
        double q = p / (p - 1.0);
        OrliczFunction m = OrliczFunction::weighted(OrliczFunction::power(p), 1.0 / p);
        for (double s : {0.05, 0.2, 0.5, 1.0, 2.0, 4.0}) {
            double want = std::pow(s, q) / q;
            worst = std::max(worst, std::abs(conjugate(m, s) - want) / want);
        }
    }
    return {worst <= 1e-6, "max rel err " + format_sig(worst)};
}

// ---------------------------------------------------------------- criterion 4
Outcome run_c4(std::uint64_t) {
    std::ostringstream os;
    bool ok = true;
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        IndexEstimate est = matuszewska_indices(OrliczFunction::power(p));
        ok = ok && std::abs(est.alpha - p) <= 0.05 && std::abs(est.beta - p) <= 0.05;
    }
    IndexEstimate m_est = matuszewska_indices(section6_piecewise(20));
    ok = ok && std::abs(m_est.alpha - 1.0) <= 0.1;
    double q = 0.5;
    IndexEstimate s_est =
        matuszewska_indices(OrliczFunction::power_scaled(section6_piecewise(20), q));
    ok = ok && std::abs(s_est.alpha - (1.0 + q)) <= 0.1;
    os << "chord alpha " << format_sig(m_est.alpha) << ", scaled alpha "
       << format_sig(s_est.alpha);
    return {ok, os.str()};
}

// ---------------------------------------------------------------- criterion 5
Outcome run_c5(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<OrliczFunction> cat = {
        OrliczFunction::power(1.5), OrliczFunction::power(2.0), OrliczFunction::power(4.0),
        OrliczFunction::exponential_example(),
        OrliczFunction::weighted(OrliczFunction::power(2.0), 0.5)};
    double worst_super = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i) {
        const OrliczFunction& m = cat[i % cat.size()];
        double x2 = rng.uniform(0.0, 2.0);
        double x1 = rng.uniform(0.0, x2);
        worst_super = std::min(worst_super, (m.value(x2) - m.value(x1)) - m.value(x2 - x1));
    }
    std::vector<double> exps;
    for (int k = 1; k <= 16; ++k) exps.push_back(1.5 + 1.0 / k);
    std::vector<MusielakFamily> fams = {
        MusielakFamily::constant(OrliczFunction::power(2.0)), MusielakFamily::nakano(exps)};
    double worst_norm = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i) {
        const MusielakFamily& fam = fams[i % fams.size()];
        std::size_t dim = 2 + rng.below(10);
        FiniteVector x(dim);
        for (std::size_t j = 0; j < dim; ++j) x[j] = rng.uniform(0.0, 1.0);
        double norm = luxemburg_norm(fam, x);
        if (norm > 1.0) { // rescale into the unit ball where the bound applies
            double s = rng.uniform(0.0, 1.0) / norm;
            for (std::size_t j = 0; j < dim; ++j) x[j] *= s;
            norm = luxemburg_norm(fam, x);
        }
        double l1 = 0.0;
        for (double v : t_map(fam, x).coords()) l1 += v;
        worst_norm = std::min(worst_norm, norm - l1);
    }
    std::ostringstream os;
    os << "min slacks " << format_sig(worst_super) << " / " << format_sig(worst_norm);
    return {worst_super >= -1e-12 && worst_norm >= -1e-12, os.str()};
}

// ---------------------------------------------------------------- criterion 6
Outcome run_c6(std::uint64_t seed) {
    Rng rng(seed);
    int qualifying = 0, violations = 0;
    for (int inst = 0; inst < 120 && qualifying < 80; ++inst) {
        std::size_t dim = 1 + rng.below(3);
        // quadratics with dyadic-friendly random centers inside the lattice
        std::vector<double> cf(dim), cg(dim), af(dim), ag(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            cf[i] = (static_cast<double>(rng.below(17)) - 8.0) / 16.0;
            cg[i] = (static_cast<double>(rng.below(17)) - 8.0) / 16.0;
            af[i] = rng.uniform(0.5, 2.0);
            ag[i] = rng.uniform(0.5, 2.0);
        }
        auto eval = [dim](const std::vector<double>& a, const std::vector<double>& c,
                          const std::vector<double>& x) {
            double s = 0.0;
            for (std::size_t i = 0; i < dim; ++i) s += a[i] * (x[i] - c[i]) * (x[i] - c[i]);
            return s;
        };
        // enumerate the dyadic lattice [-1, 1]^dim with step 1/16
        std::vector<std::vector<double>> grid;
        std::vector<int> idx(dim, 0);
        const int side = 33;
        std::size_t total = 1;
        for (std::size_t i = 0; i < dim; ++i) total *= side;
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t r = flat;
            std::vector<double> x(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                x[i] = (static_cast<double>(r % side) - 16.0) / 16.0;
                r /= side;
            }
            grid.push_back(std::move(x));
        }
        double mf = std::numeric_limits<double>::infinity();
        double mg = mf, mfg = mf;
        std::vector<double> vf(grid.size()), vg(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
            vf[j] = eval(af, cf, grid[j]);
            vg[j] = eval(ag, cg, grid[j]);
            mf = std::min(mf, vf[j]);
            mg = std::min(mg, vg[j]);
            mfg = std::min(mfg, vf[j] + vg[j]);
        }
        double delta = std::vector<double>{0.25, 0.5, 1.0}[inst % 3];
        bool meet = false;
        for (std::size_t j = 0; j < grid.size(); ++j)
            if (vf[j] <= mf + delta && vg[j] <= mg + delta) meet = true;
        if (!meet) continue;
        ++qualifying;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            if (vf[j] + vg[j] <= mfg + delta) {
                if (!(vf[j] <= mf + 3 * delta && vg[j] <= mg + 3 * delta)) ++violations;
            }
        }
    }
    std::ostringstream os;
    os << qualifying << " qualifying instances, " << violations << " violations";
    return {qualifying >= 50 && violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 7
Outcome run_c7(std::uint64_t seed) {
    double t_start = now_seconds();
    MusielakFamily fam = MusielakFamily::constant(OrliczFunction::power(2.0));
    Rng rng(seed);
    int bad = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t dim = 5 + rng.below(46);
        double eps = std::exp(rng.uniform(std::log(1e-3), 0.0));
        int n = std::vector<int>{2, 5, 10}[rep % 3];
        BoundedDomain S(dim, 1.0);
        FiniteVector x = S.sample(fam, rng);
        PerturbationCertificate cert =
            construct_strong_perturbation(fam, S, x, eps, n, seed * 1000 + rep);
        bool ok = std::abs(cert.p_norm - eps) <= 1e-12 * eps && cert.g_at_x < cert.delta &&
                  cert.tail_diam <= 1.0 / n + 1e-12;
        if (!ok) ++bad;
    }
    double elapsed = now_seconds() - t_start;
    std::ostringstream os;
    os << bad << "/100 bad certificates, " << format_sig(elapsed) << " s";
    return {bad == 0 && elapsed < 30.0, os.str()};
}

// ------------------------------------------------------- criteria 8 and 9
std::vector<StegallRecord> stegall_instances(std::uint64_t seed, bool smooth_only) {
    std::vector<double> exps;
    for (int k = 1; k <= 32; ++k) exps.push_back(2.0 + 1.0 / k);
    std::vector<MusielakFamily> fams = {
        MusielakFamily::constant(OrliczFunction::power(2.0)),
        MusielakFamily::constant(OrliczFunction::power(4.0)),
        MusielakFamily::nakano(exps),
        MusielakFamily::weighted(OrliczFunction::power(2.0), WeightSequence::harmonic())};
    if (!smooth_only) fams.push_back(MusielakFamily::constant(OrliczFunction::power(1.5)));
    std::vector<StegallRecord> out;
    Rng rng(seed);
    int count = smooth_only ? 8 : 20;
    for (int inst = 0; inst < count; ++inst) {
        const MusielakFamily& fam = fams[inst % fams.size()];
        std::size_t dim = 3 + rng.below(6);
        BoundedDomain S(dim, 1.0);
        Objective f = make_objective("quadratic", {0.2}, dim, fam);
        Problem p{f, S, std::nullopt, "quadratic"};
        FiniteVector a(dim);
        for (std::size_t i = 0; i < dim; ++i) a[i] = -rng.uniform(0.0, 0.5);
        out.push_back(stegall_linear(p, fam, a, 10000, seed + 31 * inst));
    }
    return out;
}

Outcome run_c8(std::uint64_t seed) {
    double worst_res = std::numeric_limits<double>::infinity();
    double worst_gap = -std::numeric_limits<double>::infinity();
    int uncertified = 0;
    for (const auto& rec : stegall_instances(seed, false)) {
        if (!rec.certified) ++uncertified;
        worst_res = std::min({worst_res, rec.residual_linear, rec.residual_modular});
        worst_gap = std::max(worst_gap, rec.dual_norm_est - rec.norm_bound);
    }
    std::ostringstream os;
    os << "min residual " << format_sig(worst_res) << ", max bound gap "
       << format_sig(worst_gap) << ", " << uncertified << " uncertified";
    return {worst_res >= -1e-9 && worst_gap <= 1e-6 && uncertified == 0, os.str()};
}

Outcome run_c9(std::uint64_t seed) {
    std::vector<double> exps;
    for (int k = 1; k <= 32; ++k) exps.push_back(2.0 + 1.0 / k);
    std::vector<MusielakFamily> fams = {
        MusielakFamily::constant(OrliczFunction::power(2.0)),
        MusielakFamily::constant(OrliczFunction::power(4.0)),
        MusielakFamily::nakano(exps),
        MusielakFamily::weighted(OrliczFunction::power(2.0), WeightSequence::harmonic())};
    Rng rng(seed);
    double worst = 0.0;
    const double h = 1e-6;
    for (int inst = 0; inst < 8; ++inst) {
        const MusielakFamily& fam = fams[inst % fams.size()];
        std::size_t dim = 3 + rng.below(6);
        BoundedDomain S(dim, 1.0);
        Objective f = make_objective("quadratic", {0.2}, dim, fam);
        Problem p{f, S, std::nullopt, "quadratic"};
        FiniteVector a(dim);
        for (std::size_t i = 0; i < dim; ++i) a[i] = -rng.uniform(0.0, 0.5);
        StegallRecord rec = stegall_linear(p, fam, a, 2000, seed + 31 * inst);
        for (std::size_t i = 0; i < dim; ++i) {
            auto g = [&](double xi) { return a[i] * fam.at(i + 1).value(std::abs(xi)); };
            double fd = (g(rec.x0[i] + h) - g(rec.x0[i] - h)) / (2 * h);
            worst = std::max(worst, std::abs(-rec.x_star[i] - fd));
        }
    }
    return {worst <= 1e-6, "max abs deviation " + format_sig(worst)};
}

// --------------------------------------------------------------- criterion 10
Outcome run_c10(std::uint64_t seed) {
    MusielakFamily fam = MusielakFamily::constant(OrliczFunction::power(2.0));
    std::size_t dim = 10;
    BoundedDomain S(dim, 1.0, true);
    // centers sit in the positive cone so minimizers are interior
    Problem p{[dim](const FiniteVector& x) {
                  double s = 0.0;
                  for (std::size_t i = 0; i < dim; ++i)
                      s += (1.0 + 0.1 * i) * (x[i] - 0.2) * (x[i] - 0.2);
                  return s;
              },
              S, std::nullopt, "quadratic-positive"};
    MonotonicityResult r = monotonicity_check(p, fam, 110, 0.5, 40000, seed);

    // exhaustive dim-2 oracle: grid minimizers, exact inner product sign
    Rng rng(seed + 1);
    double grid_min_ip = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 20; ++rep) {
        double a1 = rng.uniform(0.0, 0.5), a2 = rng.uniform(0.0, 0.5);
        double b1 = rng.uniform(0.0, 0.5), b2 = rng.uniform(0.0, 0.5);
        auto solve = [&](double wa, double wb, double& x0, double& x1) {
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i <= 50; ++i) {
                for (int j = 0; j <= 50; ++j) {
                    double u = i / 50.0, v = j / 50.0;
                    double val = (u - 0.3) * (u - 0.3) + 1.5 * (v - 0.4) * (v - 0.4) +
                                 wa * u * u + wb * v * v;
                    if (val < best) {
                        best = val;
                        x0 = u;
                        x1 = v;
                    }
                }
            }
        };
        double u1, v1, u2, v2;
        solve(a1, b1, u1, v1);
        solve(a2, b2, u2, v2);
        // inner product (a2 - a1, b2 - b1) . (t(x1) - t(x2)) with t(x) = x^2
        double ip = (a2 - a1) * (u1 * u1 - u2 * u2) + (b2 - b1) * (v1 * v1 - v2 * v2);
        grid_min_ip = std::min(grid_min_ip, ip);
    }
    std::ostringstream os;
    os << "min ip " << format_sig(r.min_inner_product) << " over " << r.certified_pairs
       << " certified pairs, grid oracle min ip " << format_sig(grid_min_ip);
    return {r.min_inner_product >= -1e-9 && r.certified_pairs >= 100 && grid_min_ip >= 0.0,
            os.str()};
}

// --------------------------------------------------------------- criterion 11
Outcome run_c11(std::uint64_t seed) {
    MusielakFamily fam = MusielakFamily::constant(OrliczFunction::power(2.0));
    std::size_t dim = 6;
    BoundedDomain S(dim, 1.0);
    std::ostringstream os;
    bool ok = true;
    for (const std::string& name : objective_names()) {
        Objective f = make_objective(name, {}, dim, fam);
        Problem p{f, S, std::nullopt, name};
        GenericityReport rep = empirical_genericity(p, fam, 0.5, 500, seed);
        int conclusive = rep.trials - rep.inconclusive;
        double frac = conclusive > 0 ? static_cast<double>(rep.success_count) / conclusive : 0.0;
        ok = ok && frac >= 0.99;
        os << name << " " << rep.success_count << "/" << conclusive << " ";
    }
    return {ok, os.str()};
}

// --------------------------------------------------------------- criterion 12
Outcome run_c12(std::uint64_t) {
    Section6Report rep = section6_verify(10, 0.5);
    bool exact_ratios = rep.b1_over_a1 == 0.125 && rep.b2_over_a2 == 32.0 / 729.0;
    bool decay_below_half = true;
    for (int k = 0; k < 8 && k < static_cast<int>(rep.ratio_decay.size()); ++k)
        if (!(rep.ratio_decay[k] < 0.5)) decay_below_half = false;
    bool geometric = rep.geometric_ba && rep.geometric_nb && rep.geometric_w;
    bool divergence = rep.divergence_exceeds_1e6_by_k5;
    std::ostringstream os;
    os << "exact ratios " << (exact_ratios ? "ok" : "BAD") << "; decay<0.5 for k<=8 "
       << (decay_below_half ? "ok" : "VIOLATED (observed max "
       + format_sig(*std::max_element(rep.ratio_decay.begin(), rep.ratio_decay.begin() + 8))
       + ")") << "; geometric sums " << (geometric ? "ok" : "BAD") << "; delta2 fails "
       << (rep.delta2_fails ? "ok" : "BAD") << "; divergence>1e6 by k=5 "
       << (divergence ? "ok" : "VIOLATED (observed "
       + format_sig(std::exp(rep.log_divergence[4])) + ")");
    return {exact_ratios && decay_below_half && geometric && rep.delta2_fails && divergence,
            os.str()};
}

struct Criterion {
    int id;
    std::string title;
    std::uint64_t seed;
    std::function<Outcome(std::uint64_t)> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Luxemburg norm matches closed-form lp norms", 1101, run_c1},
        {2, "unit-vector norm identity", 1102, run_c2},
        {3, "Hoelder-pair conjugacy", 1103, run_c3},
        {4, "growth-index estimates", 1104, run_c4},
        {5, "superadditivity and coordinate-map norm inequality", 1105, run_c5},
        {6, "sum-rule level-set containment on exhaustive grids", 1106, run_c6},
        {7, "strong-perturbation certificates", 1107, run_c7},
        {8, "linear-functional residual chains and dual bound", 1108, run_c8},
        {9, "subgradient matches central differences", 1109, run_c9},
        {10, "solution-map monotonicity", 1110, run_c10},
        {11, "empirical genericity fraction >= 0.99", 1111, run_c11},
        {12, "worked-example fixture quantities", 1112, run_c12},
    };

    int failed = 0;
    std::vector<Outcome> outcomes;
    for (const auto& c : criteria) {
        Outcome o = c.run(c.seed);
        outcomes.push_back(o);
        std::printf("criterion %d: %s - %s (%s; seed %llu)\n", c.id, o.pass ? "PASS" : "FAIL",
                    c.title.c_str(), o.detail.c_str(),
                    static_cast<unsigned long long>(c.seed));
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }

    // criterion 13: every failing criterion must replay bit-identically from
    // its recorded seed; with no failures, replay a randomized one anyway.
    bool replay_ok = true;
    int replayed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (outcomes[i].pass) continue;
        Outcome again = criteria[i].run(criteria[i].seed);
        replay_ok = replay_ok && again.detail == outcomes[i].detail &&
                    again.pass == outcomes[i].pass;
        ++replayed;
    }
    if (replayed == 0) {
        Outcome again = criteria[6].run(criteria[6].seed);
        replay_ok = again.detail == outcomes[6].detail;
        replayed = 1;
    }
    std::printf("criterion 13: %s - deterministic replay of %d criterion run(s)\n",
                replay_ok ? "PASS" : "FAIL", replayed);
    if (!replay_ok) ++failed;
    std::printf("summary: %d/13 passed\n", 13 - failed);
    return failed;
}
