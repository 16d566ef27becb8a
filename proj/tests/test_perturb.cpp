#include <doctest.h>

#include <cmath>

#include "morlicz/perturb.hpp"
#include "morlicz/rng.hpp"

using namespace morlicz;

namespace {

MusielakFamily sq_family() { return MusielakFamily::constant(OrliczFunction::power(2.0)); }

Problem quadratic_problem(std::size_t dim, double c) {
    BoundedDomain S(dim, 1.0);
    Objective f = [c](const FiniteVector& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) s += (x[i] - c) * (x[i] - c);
        return s;
    };
    return Problem{f, S, std::nullopt, "quadratic"};
}

} // namespace

TEST_CASE("infimum estimation on visible minima") {
    MusielakFamily fam = sq_family();
    // minimum 0 at the interior point (c, ..., c)
    CHECK(estimate_infimum(quadratic_problem(4, 0.2), fam, 4000, 1) ==
          doctest::Approx(0.0).epsilon(1e-6));
    BoundedDomain S(3, 1.0);
    Problem constant{[](const FiniteVector&) { return 7.0; }, S, std::nullopt, "const"};
    CHECK(estimate_infimum(constant, fam, 500, 1) == doctest::Approx(7.0));
    // Linear objective on a box: vertex oracle gives 0 at the origin corner.
    BoundedDomain box(4, 10.0, true, {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}});
    Problem lin{[](const FiniteVector& x) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i];
                    return s;
                },
                box, std::nullopt, "sum"};
    CHECK(estimate_infimum(lin, fam, 6000, 2) == doctest::Approx(0.0).epsilon(1e-6));
    Problem improper{[](const FiniteVector&) {
                         return std::numeric_limits<double>::infinity();
                     },
                     S, std::nullopt, "improper"};
    CHECK_THROWS_AS(estimate_infimum(improper, fam, 500, 1), PropernessError);
}

TEST_CASE("epsilon-argmin membership and nesting") {
    MusielakFamily fam = sq_family();
    // dim=1, f(x)=x^2 on [-1,1], eps=0.25: members lie in [-0.5, 0.5]
    BoundedDomain seg(1, 1.0);
    Problem p{[](const FiniteVector& x) { return x[0] * x[0]; }, seg, std::nullopt, "sq"};
    EpsArgminSet small = eps_argmin(p, fam, 0.25, 3000, 5);
    REQUIRE(!small.points.empty());
    for (const auto& x : small.points) CHECK(std::abs(x[0]) <= 0.5 + 1e-6);
    // nesting: every eps1-member is an eps2-member for eps1 <= eps2
    EpsArgminSet big = eps_argmin(p, fam, 1.0, 3000, 5);
    double tol = 1e-9 * (1.0 + std::abs(big.inf_est));
    for (const auto& x : small.points) CHECK(p.f(x) <= big.inf_est + 1.0 + tol);
}

TEST_CASE("noncompactness proxy hand values") {
    MusielakFamily fam = sq_family();
    std::vector<FiniteVector> head = {FiniteVector({1.0, 2.0, 0.0, 0.0})};
    CHECK(noncompactness_proxy(fam, head, 2) == 0.0);
    FiniteVector tail(4);
    tail[3] = 0.7;
    CHECK(noncompactness_proxy(fam, {tail}, 3) == doctest::Approx(0.7).epsilon(1e-9));
    CHECK_THROWS_AS(noncompactness_proxy(fam, {}, 1), ConstructionError);
}

TEST_CASE("strong-perturbation certificates satisfy the three postconditions") {
    MusielakFamily fam = sq_family();
    Rng rng(42);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t dim = 5 + rng.below(20);
        double eps = rng.uniform(1e-3, 1.0);
        int n = std::vector<int>{2, 5, 10}[rep % 3];
        BoundedDomain S(dim, 1.0);
        FiniteVector x = S.sample(fam, rng);
        PerturbationCertificate cert =
            construct_strong_perturbation(fam, S, x, eps, n, 1000 + rep);
        CHECK(cert.p_norm == doctest::Approx(eps).epsilon(1e-12));
        CHECK(cert.g_at_x < cert.delta);
        CHECK(cert.tail_diam <= 1.0 / n + 1e-9);
        CHECK(cert.theta > 0.0);
        CHECK(cert.theta < eps + 1e-18);
        CHECK(cert.delta == doctest::Approx(cert.k_n * eps));
    }
    // degenerate pin at the origin
    BoundedDomain S(6, 1.0);
    PerturbationCertificate zero_cert =
        construct_strong_perturbation(fam, S, FiniteVector(6), 0.5, 5, 7);
    CHECK(zero_cert.g_at_x == doctest::Approx(0.0));
}

TEST_CASE("certificates re-verify bit-identically under the same seed") {
    MusielakFamily fam = sq_family();
    BoundedDomain S(12, 1.0);
    Rng rng(9);
    FiniteVector x = S.sample(fam, rng);
    PerturbationCertificate a = construct_strong_perturbation(fam, S, x, 0.25, 5, 555);
    PerturbationCertificate b = construct_strong_perturbation(fam, S, x, 0.25, 5, 555);
    CHECK(a.p_norm == b.p_norm);
    CHECK(a.g_at_x == b.g_at_x);
    CHECK(a.tail_diam == b.tail_diam);
    CHECK(a.theta == b.theta);
    CHECK(a.tail_start == b.tail_start);
    CHECK(a.a_bar == b.a_bar);
}

TEST_CASE("perturbed solver elementary identities") {
    MusielakFamily fam = sq_family();
    // a = 0, strictly convex f: minimizer of f
    Problem p = quadratic_problem(3, 0.2);
    SolveResult r = minimize_perturbed(p, fam, FiniteVector(3), 6000, 3, 3);
    CHECK(r.certified);
    for (int j = 0; j < 3; ++j) CHECK(r.x_star[j] == doctest::Approx(0.2).epsilon(1e-6));
    // f = 0, a >= 0: minimum at the origin
    BoundedDomain S(3, 1.0);
    Problem flat{[](const FiniteVector&) { return 0.0; }, S, std::nullopt, "flat"};
    SolveResult rz = minimize_perturbed(flat, fam, FiniteVector({0.5, 0.5, 0.5}), 6000, 3, 3);
    CHECK(rz.value == doctest::Approx(0.0).epsilon(1e-12));
    for (int j = 0; j < 3; ++j) CHECK(std::abs(rz.x_star[j]) <= 1e-5);
}

TEST_CASE("solver matches an exhaustive grid oracle at dim 2") {
    MusielakFamily fam = sq_family();
    BoundedDomain S(2, 1.0);
    FiniteVector a({0.3, 0.7});
    Objective f = [](const FiniteVector& x) {
        return (x[0] - 0.4) * (x[0] - 0.4) + 0.5 * (x[1] + 0.2) * (x[1] + 0.2);
    };
    Problem p{f, S, std::nullopt, "grid"};
    SolveResult r = minimize_perturbed(p, fam, a, 8000, 11, 3);
    double oracle = std::numeric_limits<double>::infinity();
    const int g = 400;
    for (int i = -g; i <= g; ++i) {
        for (int j = -g; j <= g; ++j) {
            FiniteVector x({i / static_cast<double>(g), j / static_cast<double>(g)});
            if (!S.contains(fam, x, 1e-9)) continue;
            oracle = std::min(oracle, f(x) + weighted_modular(fam, a, x));
        }
    }
    CHECK(r.value <= oracle + 1e-4); // solver at least as good as the grid
    CHECK(r.value >= oracle - 1e-2); // and not below the true minimum by more
                                     // than the grid resolution allows
}

TEST_CASE("descent trace is monotone nonincreasing") {
    MusielakFamily fam = sq_family();
    Problem p = quadratic_problem(5, 0.3);
    SolveResult r = minimize_perturbed(p, fam, FiniteVector({0.1, 0.2, 0.3, 0.1, 0.2}), 5000, 21, 1);
    REQUIRE(r.trace.size() >= 2);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i][1] <= r.trace[i - 1][1] + 1e-15);
}

TEST_CASE("well-posedness diagnostic separates unique and tied minima") {
    MusielakFamily fam = sq_family();
    // strictly convex: a single tight cluster and near-zero score
    Problem p = quadratic_problem(4, 0.2);
    SolveResult solve = minimize_perturbed(p, fam, FiniteVector(4), 8000, 31, 3);
    WpmcReport good = wpmc_diagnostic(p, fam, FiniteVector(4), solve, 4, 77, 8000);
    CHECK(good.converged_trials == 4);
    CHECK(good.cluster_count == 1);
    CHECK(good.wpmc_score <= 1e-3);
    CHECK(good.cluster_radius <= 1e-3);

    // exact two-point tie: two clusters appear
    BoundedDomain S(2, 1.0);
    FiniteVector c1({0.4, 0.0}), c2({-0.4, 0.0});
    Objective tied = [c1, c2](const FiniteVector& x) {
        double d1 = 0.0, d2 = 0.0;
        for (int j = 0; j < 2; ++j) {
            d1 += (x[j] - c1[j]) * (x[j] - c1[j]);
            d2 += (x[j] - c2[j]) * (x[j] - c2[j]);
        }
        return std::min(d1, d2);
    };
    Problem tp{tied, S, std::nullopt, "tie"};
    SolveResult ts = minimize_perturbed(tp, fam, FiniteVector(2), 8000, 41, 6);
    WpmcReport bad = wpmc_diagnostic(tp, fam, FiniteVector(2), ts, 8, 78, 8000);
    CHECK(bad.cluster_count >= 2);
}

TEST_CASE("coercive lift identities on sampled points") {
    MusielakFamily fam = sq_family();
    Problem p = quadratic_problem(3, 0.1);
    Problem lifted = coercive_lift(p, 2, fam);
    Rng rng(51);
    for (int i = 0; i < 50; ++i) {
        FiniteVector x = p.S.sample(fam, rng);
        CHECK(lifted.f(x) == doctest::Approx(p.f(x) + 0.5 * modular(fam, x)).epsilon(1e-12));
        // shift identity: (f + (1/n) modular) + weighted_a = f + weighted_{a + 1/n}
        FiniteVector a({0.2, 0.3, 0.4});
        FiniteVector shifted({0.7, 0.8, 0.9});
        CHECK(lifted.f(x) + weighted_modular(fam, a, x) ==
              doctest::Approx(p.f(x) + weighted_modular(fam, shifted, x)).epsilon(1e-12));
    }
}
