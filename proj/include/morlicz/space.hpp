#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morlicz/orlicz.hpp"
#include "morlicz/weights.hpp"

namespace morlicz {

/// A finite-support real sequence with explicit truncation dimension; the
/// desk-scale stand-in for a sequence-space element. Storage is 0-based,
/// coordinate i of the sequence lives at coords()[i-1].
class FiniteVector {
public:
    FiniteVector() = default;
    explicit FiniteVector(std::size_t dim) : c_(dim, 0.0) {}
    explicit FiniteVector(std::vector<double> v) : c_(std::move(v)) {}
    std::size_t dim() const { return c_.size(); }
    double& operator[](std::size_t i) { return c_[i]; }
    double operator[](std::size_t i) const { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }
    std::vector<double>& coords() { return c_; }
    bool operator==(const FiniteVector& o) const { return c_ == o.c_; }

private:
    std::vector<double> c_;
};

/// An indexed family i -> Phi_i with lazy per-index access. Immutable and
/// shareable after construction; evaluation is pure.
class MusielakFamily {
public:
    enum class Catalog { Constant, Weighted, Nakano, Custom };

    static MusielakFamily constant(OrliczFunction m);
    static MusielakFamily weighted(OrliczFunction m, WeightSequence w);
    /// Phi_i(t) = t^{p_i}; exponents past the list reuse the last entry.
    static MusielakFamily nakano(std::vector<double> p_seq);
    static MusielakFamily custom(std::function<OrliczFunction(std::size_t)> gen, std::string label);

    OrliczFunction at(std::size_t i) const; ///< 1-based
    /// Materializes Phi_1..Phi_dim once for tight evaluation loops.
    std::vector<OrliczFunction> materialize(std::size_t dim) const;
    bool non_degenerate(std::size_t probe_dim = 16) const;
    Catalog catalog() const { return catalog_; }
    const std::string& label() const { return label_; }
    const OrliczFunction* base() const { return base_ ? &*base_ : nullptr; }
    const WeightSequence* weight_seq() const { return weights_ ? &*weights_ : nullptr; }
    const std::vector<double>* nakano_exponents() const {
        return p_seq_.empty() ? nullptr : &p_seq_;
    }

private:
    MusielakFamily() = default;
    std::function<OrliczFunction(std::size_t)> gen_;
    Catalog catalog_ = Catalog::Custom;
    std::string label_;
    std::optional<OrliczFunction> base_;
    std::optional<WeightSequence> weights_;
    std::vector<double> p_seq_;
};

/// Closed nonempty domain inside K * (Luxemburg unit ball), optionally cut
/// down to the positive cone and per-coordinate boxes.
class BoundedDomain {
public:
    BoundedDomain(std::size_t dim, double norm_radius, bool positive = false,
                  std::vector<std::pair<double, double>> boxes = {});
    std::size_t dim() const { return dim_; }
    double norm_radius() const { return radius_; }
    bool positive() const { return positive_; }
    const std::vector<std::pair<double, double>>& boxes() const { return boxes_; }

    bool contains(const MusielakFamily& fam, const FiniteVector& x, double tol = 1e-9) const;
    /// Clamp to boxes/positivity, then scale into the norm ball.
    FiniteVector project(const MusielakFamily& fam, const FiniteVector& x) const;
    FiniteVector sample(const MusielakFamily& fam, class Rng& rng) const;

private:
    std::size_t dim_;
    double radius_;
    bool positive_;
    std::vector<std::pair<double, double>> boxes_; // per coordinate, empty = unbounded box
};

double modular(const MusielakFamily& fam, const FiniteVector& x);
double weighted_modular(const MusielakFamily& fam, const FiniteVector& a, const FiniteVector& x);

/// inf{r > 0 : modular(x/r) <= 1} by doubling/halving bracket plus bisection
/// to 1e-12 relative; 0 for the zero vector.
double luxemburg_norm(const MusielakFamily& fam, const FiniteVector& x);

/// phi_i(t) = Phi_i(a_i t) / Phi_i(a_i) with a_i = Phi_i^{-1}(1); every
/// normalized member satisfies phi_i(1) = 1.
MusielakFamily normalize_family(const MusielakFamily& fam);

/// Componentwise (Phi_1(x_1), ..., Phi_dim(x_dim)) on the positive cone, and
/// its componentwise inverse.
FiniteVector t_map(const MusielakFamily& fam, const FiniteVector& x);
FiniteVector t_inverse(const MusielakFamily& fam, const FiniteVector& y);

struct NuEstimate {
    double coordinate_value = 0.0; ///< max_i Phi_i(t * Phi_i^{-1}(1))
    double sampled_value = 0.0;    ///< best random-direction / ascent value
    double value = 0.0;            ///< max of the two
};

/// Estimate of nu(t) = sup{ modular(x) : ||x|| <= t } at the truncation.
/// The coordinate value is exact for separable modulars whenever the sup
/// concentrates on a ray; both routes are reported.
NuEstimate nu_estimate(const MusielakFamily& fam, double t, std::size_t dim, int samples = 64,
                       std::uint64_t seed = 1);

/// diam{ x : modular(x) <= t } estimated as twice the largest norm over the
/// level set (symmetric set containing 0); +inf when a probed coordinate is
/// degenerate.
double modular_level_diameter(const MusielakFamily& fam, double t, std::size_t dim,
                              int samples = 64, std::uint64_t seed = 1);

struct StrongMinReport {
    bool strong = false;
    std::vector<std::pair<double, double>> trace; ///< (t, diameter)
};

/// Strong-minimum diagnostic: the level diameter must be finite,
/// nonincreasing along the decreasing grid, and at least halved from the
/// first grid point to the last (an absolute floor of 1e-6 also passes).
StrongMinReport strong_min_check(const MusielakFamily& fam, const std::vector<double>& t_grid,
                                 std::size_t dim, std::uint64_t seed = 1);

struct Delta2FamilyReport {
    bool holds = false;
    double k_est = 0.0;    ///< smallest accepted doubling constant
    double c_partial = 0.0; ///< partial sum of the additive slacks c_n
};

/// Family doubling condition with additive slack: searches candidate
/// constants K in {2, 4, ..., 256} for c_n(K) = max_t (Phi_n(2t) - K
/// Phi_n(t))^+ over t <= Phi_n^{-1}(beta); holds when the slack series is
/// dominated by its first half over the probed index range.
Delta2FamilyReport delta2_family_check(const MusielakFamily& fam, double beta,
                                       std::size_t n_begin, std::size_t n_end);

} // namespace morlicz
