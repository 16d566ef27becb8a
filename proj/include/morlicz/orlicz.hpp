#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morlicz/errors.hpp"

namespace morlicz {

/// One replaced segment of the piecewise construction: on [b_k, a_k] the
/// generating function N is replaced by the chord through (b_k, N(b_k)) and
/// (a_k, N(a_k)). Endpoint ordinates are kept in log space; N(a_k) underflows
/// double precision long before a_k does.
struct PiecewiseSegment {
    double a = 0.0;      ///< right endpoint (a_k, strictly decreasing in k)
    double b = 0.0;      ///< left endpoint (b_k < a_k)
    double log_na = 0.0; ///< log N(a_k)
    double log_nb = 0.0; ///< log N(b_k)
};

/// An evaluable Orlicz function: even, continuous, convex, M(0)=0,
/// nondecreasing on [0,inf). Immutable value type; copies share the
/// underlying definition and are safe to evaluate concurrently.
class OrliczFunction {
public:
    enum class Kind {
        Power, NakanoExponent, ExponentialExample, Piecewise, Weighted, PowerScaled, ArgScaled, Zero
    };

    /// M(t) = t^p, p >= 1.
    static OrliczFunction power(double p);
    /// Same algebra as power(p); tagged separately so Nakano families
    /// round-trip through descriptors with their role intact.
    static OrliczFunction nakano_exponent(double p);
    /// N(t) = t^2 exp(-1/(2t)), N(0) = 0.
    static OrliczFunction exponential_example();
    /// w * M(t) with the weight given in log space (weights of interest
    /// overflow double precision).
    static OrliczFunction weighted_log(OrliczFunction base, double log_w);
    static OrliczFunction weighted(OrliczFunction base, double w);
    /// t^q * M(t), q > 0.
    static OrliczFunction power_scaled(OrliczFunction base, double q);
    /// M(a t), a > 0; argument scaling used by family normalization.
    static OrliczFunction arg_scaled(OrliczFunction base, double a);
    /// Chord-replacement construction over a generating function.
    static OrliczFunction piecewise(OrliczFunction base, std::vector<PiecewiseSegment> table);
    /// Degenerate M == 0, admitted for diagnostics tests only.
    static OrliczFunction zero();

    double value(double t) const;      ///< M(|t|); throws RangeError past eval_domain_hint
    double log_value(double t) const;  ///< log M(|t|); -inf at t = 0
    bool derivative_available() const;
    double derivative(double t) const; ///< M'(|t|) for t in the smooth range
    double eval_domain_hint() const;
    bool non_degenerate() const;
    Kind kind() const;

    /// Parameters for serialization; meaning depends on kind.
    double param() const;                                   ///< p, q or log_w
    const OrliczFunction* base() const;                     ///< nested function, if any
    const std::vector<PiecewiseSegment>* segments() const;  ///< piecewise table, if any

    struct Impl; ///< implementation detail; definitions live in the source file

private:
    explicit OrliczFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Monotone inverse by bracketed geometric bisection: t with M(t) = y.
/// inverse(M, 0) = 0. Throws UnbracketableError when y > M(eval_domain_hint).
double inverse(const OrliczFunction& m, double y, double rel_tol = 1e-12);

/// Inverse against a log-space target; the worked-example weight family
/// needs targets far below the smallest positive double.
double inverse_log(const OrliczFunction& m, double log_y, double rel_tol = 1e-12);

/// M*(s) = sup_{u>=0} (s u - M(u)) by golden-section on the concave
/// objective, refined on the derivative when available. Throws
/// UnboundedConjugateError when the objective still climbs at the cap.
double conjugate(const OrliczFunction& m, double s, std::optional<double> s_max = std::nullopt);

struct IndexGridSpec {
    double u_min = 1e-6;
    int points = 200;
};

struct IndexEstimate {
    double alpha = 0.0;
    double beta = 0.0; ///< +inf when the estimate hits the search cap
    double u_min = 0.0;
    int grid_points = 0;
};

/// Matuszewska-type growth indices, estimated by bisection on p of the
/// boundedness (alpha) / positivity (beta) of M(uv) / (u^p M(v)) over a
/// log-spaced grid in (0,1]^2. All ratio work is done in log space.
IndexEstimate matuszewska_indices(const OrliczFunction& m, const IndexGridSpec& grid = {});

struct Delta2Report {
    bool holds = false;
    double constant_est = 0.0; ///< sup of M(2t)/M(t) on the probed grid
    std::optional<double> witness; ///< maximizing t, or divergence location on failure
};

/// Doubling condition near zero: sup over a log grid in (0, t0] of
/// M(2t)/M(t), declared to hold when the sup is stable under pushing the
/// grid four decades deeper.
Delta2Report delta2_check(const OrliczFunction& m, double t0, int grid_points = 400);

/// Rule producing b_k from (k, a_k, a_{k+1}); default is the geometric mean.
using BRule = std::function<double(int k, double a_k, double a_next)>;

/// Builds the chord-replacement function from a generating N and a strictly
/// decreasing a-sequence, validating ordering, endpoint continuity and
/// global convexity on a grid. a_seq holds a_1 > a_2 > ... (one more entry
/// than the number of segments is not required; b_k for the last k uses the
/// rule against an extrapolated a_{k+1} = a_k^2 guard).
OrliczFunction build_piecewise(const OrliczFunction& n, const std::vector<double>& a_seq,
                               const std::vector<double>& b_seq);
OrliczFunction build_piecewise(const OrliczFunction& n, const std::vector<double>& a_seq,
                               const BRule& b_rule);

/// Variant driven by a weight sequence: a_k = N^{-1}(1/w_k) for k up to the
/// sequence's probe limit. Checks N(t)/t -> 0 on a grid and that the weights
/// are nondecreasing from w_1; N(1) = 1 is reported via the returned flag
/// rather than enforced (the worked example violates it by a constant).
struct PiecewiseBuildResult {
    OrliczFunction m;
    bool unit_normalized = false; ///< N(1) == 1 within 1e-9
};
PiecewiseBuildResult build_piecewise(const OrliczFunction& n, const class WeightSequence& w,
                                     const BRule& b_rule);

/// Worked chord-construction fixture: generator N(t) = t^2 exp(-1/(2t)),
/// a_k = k^{-2k}, b_k = 2 (k+1)^{-2(k+1)} for k = 1..depth.
OrliczFunction section6_piecewise(int depth = 20);

/// psi(t) = int_0^t M(u)/u du, adaptive quadrature to 1e-10 absolute.
double smoothing_psi(const OrliczFunction& m, double t);
/// Psi(t) = int_0^t psi(u)/u exp(u/(u-t)) du; the u -> t endpoint takes the
/// forced zero limit.
double smoothing_Psi(const OrliczFunction& m, double t);

/// E(p): p-1 for integer p, floor(p) otherwise. Throws for p < 1.
int smooth_order(double p);

/// Grid validation used by constructors and tests: M(0)=0, nondecreasing,
/// midpoint convexity on log-spaced probe points.
bool check_orlicz_shape(const OrliczFunction& m, double t_max = 4.0, int points = 200);

} // namespace morlicz
