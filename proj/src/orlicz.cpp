#include "morlicz/orlicz.hpp"
#include "morlicz/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace morlicz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

struct OrliczFunction::Impl {
    virtual ~Impl() = default;
    virtual double value(double t) const = 0;     // t >= 0
    virtual double log_value(double t) const = 0; // t > 0
    virtual bool has_derivative() const { return false; }
    virtual double derivative(double) const {
        throw RangeError("derivative not available for this function kind");
    }
    virtual double hint() const = 0;
    virtual bool non_degenerate() const { return true; }
    virtual Kind kind() const = 0;
    virtual double param() const { return 0.0; }
    virtual const OrliczFunction* base() const { return nullptr; }
    virtual const std::vector<PiecewiseSegment>* segments() const { return nullptr; }
};

namespace {

struct PowerImpl final : OrliczFunction::Impl {
    double p;
    OrliczFunction::Kind tag;
    PowerImpl(double p_, OrliczFunction::Kind tag_) : p(p_), tag(tag_) {}
    double value(double t) const override { return std::pow(t, p); }
    double log_value(double t) const override { return p * std::log(t); }
    bool has_derivative() const override { return true; }
    double derivative(double t) const override {
        return t == 0.0 ? (p > 1.0 ? 0.0 : 1.0) : p * std::pow(t, p - 1.0);
    }
    double hint() const override { return std::pow(1e300, 1.0 / p); }
    OrliczFunction::Kind kind() const override { return tag; }
    double param() const override { return p; }
};

struct ExpExampleImpl final : OrliczFunction::Impl {
    // N(t) = t^2 exp(-1/(2t)); all derivatives vanish at 0.
    double value(double t) const override { return t == 0.0 ? 0.0 : t * t * std::exp(-0.5 / t); }
    double log_value(double t) const override { return 2.0 * std::log(t) - 0.5 / t; }
    bool has_derivative() const override { return true; }
    double derivative(double t) const override {
        return t == 0.0 ? 0.0 : std::exp(-0.5 / t) * (2.0 * t + 0.5);
    }
    double hint() const override { return 1e150; }
    OrliczFunction::Kind kind() const override { return OrliczFunction::Kind::ExponentialExample; }
};

struct WeightedImpl final : OrliczFunction::Impl {
    OrliczFunction base_fn;
    double log_w;
    double w_lin; // NaN when the weight is not representable in double
    WeightedImpl(OrliczFunction b, double lw)
        : base_fn(std::move(b)), log_w(lw),
          w_lin(std::abs(lw) < 600.0 ? std::exp(lw) : std::numeric_limits<double>::quiet_NaN()) {}
    double value(double t) const override {
        if (!std::isnan(w_lin)) return w_lin * base_fn.value(t);
        return t == 0.0 ? 0.0 : std::exp(log_w + base_fn.log_value(t));
    }
    double log_value(double t) const override { return log_w + base_fn.log_value(t); }
    bool has_derivative() const override { return base_fn.derivative_available(); }
    double derivative(double t) const override {
        if (!std::isnan(w_lin)) return w_lin * base_fn.derivative(t);
        double d = base_fn.derivative(t);
        return d == 0.0 ? 0.0 : std::exp(log_w + std::log(d));
    }
    double hint() const override { return base_fn.eval_domain_hint(); }
    bool non_degenerate() const override { return base_fn.non_degenerate(); }
    OrliczFunction::Kind kind() const override { return OrliczFunction::Kind::Weighted; }
    double param() const override { return log_w; }
    const OrliczFunction* base() const override { return &base_fn; }
};

struct PowerScaledImpl final : OrliczFunction::Impl {
    OrliczFunction base_fn;
    double q;
    PowerScaledImpl(OrliczFunction b, double q_) : base_fn(std::move(b)), q(q_) {}
    double value(double t) const override { return t == 0.0 ? 0.0 : std::pow(t, q) * base_fn.value(t); }
    double log_value(double t) const override { return q * std::log(t) + base_fn.log_value(t); }
    bool has_derivative() const override { return base_fn.derivative_available(); }
    double derivative(double t) const override {
        if (t == 0.0) return 0.0;
        return q * std::pow(t, q - 1.0) * base_fn.value(t) + std::pow(t, q) * base_fn.derivative(t);
    }
    double hint() const override {
        return std::min(base_fn.eval_domain_hint(), std::pow(1e300, 1.0 / q));
    }
    bool non_degenerate() const override { return base_fn.non_degenerate(); }
    OrliczFunction::Kind kind() const override { return OrliczFunction::Kind::PowerScaled; }
    double param() const override { return q; }
    const OrliczFunction* base() const override { return &base_fn; }
};

struct ArgScaledImpl final : OrliczFunction::Impl {
    OrliczFunction base_fn;
    double a;
    ArgScaledImpl(OrliczFunction b, double a_) : base_fn(std::move(b)), a(a_) {}
    double value(double t) const override { return base_fn.value(a * t); }
    double log_value(double t) const override { return base_fn.log_value(a * t); }
    bool has_derivative() const override { return base_fn.derivative_available(); }
    double derivative(double t) const override { return a * base_fn.derivative(a * t); }
    double hint() const override { return base_fn.eval_domain_hint() / a; }
    bool non_degenerate() const override { return base_fn.non_degenerate(); }
    OrliczFunction::Kind kind() const override { return OrliczFunction::Kind::ArgScaled; }
    double param() const override { return a; }
    const OrliczFunction* base() const override { return &base_fn; }
};

struct PiecewiseImpl final : OrliczFunction::Impl {
    OrliczFunction base_fn;
    std::vector<PiecewiseSegment> table; // a strictly decreasing with k
    PiecewiseImpl(OrliczFunction b, std::vector<PiecewiseSegment> t)
        : base_fn(std::move(b)), table(std::move(t)) {}

    const PiecewiseSegment* segment_of(double t) const {
        // Segments are disjoint and sorted by decreasing a; linear scan with
        // early exit (tables stay short, a few dozen entries at most).
        for (const auto& s : table) {
            if (t > s.a) return nullptr;
            if (t >= s.b) return &s;
        }
        return nullptr;
    }
    double log_value(double t) const override {
        const PiecewiseSegment* s = segment_of(t);
        if (!s) return base_fn.log_value(t);
        // Chord through (b, N(b)) and (a, N(a)) carried entirely in log
        // space: log l(t) = logsumexp(log N(a) + log(t-b),
        // log N(b) + log(a-t)) - log(a-b). Exact at both endpoints even when
        // N(b)/N(a) underflows (deep segments of the worked example).
        double la = t > s->b ? s->log_na + std::log(t - s->b) : -kInf;
        double lb = t < s->a ? s->log_nb + std::log(s->a - t) : -kInf;
        double hi = std::max(la, lb);
        if (hi == -kInf) return -kInf;
        return hi + std::log1p(std::exp(std::min(la, lb) - hi)) - std::log(s->a - s->b);
    }
    double value(double t) const override { return t == 0.0 ? 0.0 : std::exp(log_value(t)); }
    bool has_derivative() const override { return base_fn.derivative_available(); }
    double derivative(double t) const override {
        const PiecewiseSegment* s = segment_of(t);
        if (!s) return base_fn.derivative(t);
        double r = std::exp(s->log_nb - s->log_na);
        return std::exp(s->log_na - std::log(s->a - s->b)) * (1.0 - r);
    }
    double hint() const override { return base_fn.eval_domain_hint(); }
    bool non_degenerate() const override { return base_fn.non_degenerate(); }
    OrliczFunction::Kind kind() const override { return OrliczFunction::Kind::Piecewise; }
    const OrliczFunction* base() const override { return &base_fn; }
    const std::vector<PiecewiseSegment>* segments() const override { return &table; }
};

struct ZeroImpl final : OrliczFunction::Impl {
    double value(double) const override { return 0.0; }
    double log_value(double) const override { return -kInf; }
    bool has_derivative() const override { return true; }
    double derivative(double) const override { return 0.0; }
    double hint() const override { return kInf; }
    bool non_degenerate() const override { return false; }
    OrliczFunction::Kind kind() const override { return OrliczFunction::Kind::Zero; }
};

} // namespace

OrliczFunction OrliczFunction::power(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw ConstructionError("power exponent must satisfy p >= 1");
    return OrliczFunction(std::make_shared<PowerImpl>(p, Kind::Power));
}

OrliczFunction OrliczFunction::nakano_exponent(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw ConstructionError("nakano exponent must satisfy p >= 1");
    return OrliczFunction(std::make_shared<PowerImpl>(p, Kind::NakanoExponent));
}

OrliczFunction OrliczFunction::exponential_example() {
    return OrliczFunction(std::make_shared<ExpExampleImpl>());
}

OrliczFunction OrliczFunction::weighted_log(OrliczFunction base, double log_w) {
    if (std::isnan(log_w)) throw ConstructionError("weight must not be NaN");
    return OrliczFunction(std::make_shared<WeightedImpl>(std::move(base), log_w));
}

OrliczFunction OrliczFunction::weighted(OrliczFunction base, double w) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ConstructionError("weight must be positive and finite");
    return weighted_log(std::move(base), std::log(w));
}

OrliczFunction OrliczFunction::power_scaled(OrliczFunction base, double q) {
    if (!(q > 0.0) || !std::isfinite(q)) throw ConstructionError("scaling exponent must be positive");
    return OrliczFunction(std::make_shared<PowerScaledImpl>(std::move(base), q));
}

OrliczFunction OrliczFunction::arg_scaled(OrliczFunction base, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConstructionError("argument scale must be positive");
    return OrliczFunction(std::make_shared<ArgScaledImpl>(std::move(base), a));
}

OrliczFunction OrliczFunction::piecewise(OrliczFunction base, std::vector<PiecewiseSegment> table) {
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& s = table[k];
        if (!(s.b > 0.0 && s.b < s.a)) throw ConstructionError("segment endpoints must satisfy 0 < b < a");
        if (k > 0 && !(s.a < table[k - 1].b))
            throw ConstructionError("segments must be disjoint and ordered by decreasing a");
        if (!(s.log_nb <= s.log_na)) throw ConstructionError("segment ordinates must be nondecreasing in t");
    }
    return OrliczFunction(std::make_shared<PiecewiseImpl>(std::move(base), std::move(table)));
}

OrliczFunction OrliczFunction::zero() { return OrliczFunction(std::make_shared<ZeroImpl>()); }

double OrliczFunction::value(double t) const {
    t = std::abs(t);
    if (std::isnan(t)) throw RangeError("evaluation at NaN");
    if (t > impl_->hint()) throw RangeError("evaluation beyond reliable range");
    return impl_->value(t);
}

double OrliczFunction::log_value(double t) const {
    t = std::abs(t);
    if (std::isnan(t)) throw RangeError("evaluation at NaN");
    if (t == 0.0) return -kInf;
    if (t > impl_->hint()) throw RangeError("evaluation beyond reliable range");
    return impl_->log_value(t);
}

bool OrliczFunction::derivative_available() const { return impl_->has_derivative(); }

double OrliczFunction::derivative(double t) const {
    double sign = t < 0.0 ? -1.0 : 1.0;
    t = std::abs(t);
    if (t > impl_->hint()) throw RangeError("evaluation beyond reliable range");
    return sign * impl_->derivative(t);
}

double OrliczFunction::eval_domain_hint() const { return impl_->hint(); }
bool OrliczFunction::non_degenerate() const { return impl_->non_degenerate(); }
OrliczFunction::Kind OrliczFunction::kind() const { return impl_->kind(); }
double OrliczFunction::param() const { return impl_->param(); }
const OrliczFunction* OrliczFunction::base() const { return impl_->base(); }
const std::vector<PiecewiseSegment>* OrliczFunction::segments() const { return impl_->segments(); }

double inverse_log(const OrliczFunction& m, double log_y, double rel_tol) {
    if (std::isnan(log_y)) throw RangeError("inverse target is NaN");
    if (log_y == -kInf) return 0.0;
    if (!m.non_degenerate()) throw UnbracketableError("degenerate function has no inverse");
    const double hint = m.eval_domain_hint();
    double lo, hi;
    if (m.log_value(1.0) >= log_y) {
        hi = 1.0;
        lo = 0.5;
        while (m.log_value(lo) > log_y) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-308) throw UnbracketableError("inverse target below evaluable range");
        }
    } else {
        lo = 1.0;
        hi = 2.0;
        while (m.log_value(hi) < log_y) {
            lo = hi;
            hi *= 2.0;
            if (hi > hint) throw UnbracketableError("inverse target above evaluable range");
        }
    }
    for (int i = 0; i < 200 && hi - lo > rel_tol * hi; ++i) {
        double mid = std::sqrt(lo * hi);
        double lm = m.log_value(mid);
        if (std::abs(lm - log_y) < 1e-13) return mid;
        (lm < log_y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double inverse(const OrliczFunction& m, double y, double rel_tol) {
    if (std::isnan(y) || y < 0.0) throw RangeError("inverse target must be nonnegative");
    if (y == 0.0) return 0.0;
    return inverse_log(m, std::log(y), rel_tol);
}

double conjugate(const OrliczFunction& m, double s, std::optional<double> s_max) {
    s = std::abs(s);
    if (s == 0.0) return 0.0;
    if (!m.non_degenerate())
        throw UnboundedConjugateError("conjugate of the zero function is unbounded off the origin");
    const double hint = m.eval_domain_hint();
    double cap;
    if (s_max) {
        cap = *s_max;
        if (!(cap > 0.0)) throw ConstructionError("search cap must be positive");
    } else {
        cap = 1.0;
        auto secant = [&](double u) {
            double h = 0.01 * u;
            return (m.value(u + h) - m.value(u)) / h;
        };
        while (secant(cap) < s) {
            cap *= 2.0;
            if (cap > hint * 0.25)
                throw UnboundedConjugateError("growth never reaches the requested slope");
        }
        cap *= 2.0; // keep the maximizer strictly interior
    }
    auto g = [&](double u) { return s * u - m.value(u); };
    const double gr = 0.6180339887498949;
    double a = 0.0, b = cap;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double gc = g(c), gd = g(d);
    for (int i = 0; i < 300 && (b - a) > 1e-14 * cap; ++i) {
        if (gc >= gd) {
            b = d; d = c; gd = gc;
            c = b - gr * (b - a); gc = g(c);
        } else {
            a = c; c = d; gc = gd;
            d = a + gr * (b - a); gd = g(d);
        }
    }
    double u_star = 0.5 * (a + b);
    if (s_max && u_star > cap * (1.0 - 1e-6) && g(cap) > std::max(0.0, g(cap * 0.999)))
        throw UnboundedConjugateError("objective still increasing at the supplied cap");
    if (m.derivative_available()) {
        // Refine on m'(u) = s when a derivative bracket exists around u*.
        double lo = std::max(u_star * 0.5, 1e-300), hi2 = std::min(u_star * 2.0, cap);
        if (m.derivative(lo) <= s && m.derivative(hi2) >= s) {
            for (int i = 0; i < 100; ++i) {
                double mid = 0.5 * (lo + hi2);
                (m.derivative(mid) < s ? lo : hi2) = mid;
            }
            double u2 = 0.5 * (lo + hi2);
            if (g(u2) > g(u_star)) u_star = u2;
        }
    }
    return std::max(0.0, g(u_star));
}

IndexEstimate matuszewska_indices(const OrliczFunction& m, const IndexGridSpec& grid) {
    if (!m.non_degenerate()) throw RangeError("growth indices undefined for the zero function");
    if (grid.points < 2 || !(grid.u_min > 0.0 && grid.u_min < 0.5))
        throw ConstructionError("index grid requires points >= 2 and u_min in (0, 0.5)");
    const int n = grid.points;
    const double lu_lo = std::log(grid.u_min), lu_hi = std::log(0.5);
    const double lv_lo = std::log(grid.u_min), lv_hi = 0.0;
    double s_min = kInf, s_max = -kInf;
    std::vector<double> v(n), lmv(n);
    for (int j = 0; j < n; ++j) {
        v[j] = std::exp(lv_lo + (lv_hi - lv_lo) * j / (n - 1));
        lmv[j] = m.log_value(v[j]);
    }
    for (int i = 0; i < n; ++i) {
        double lu = lu_lo + (lu_hi - lu_lo) * i / (n - 1);
        double u = std::exp(lu);
        for (int j = 0; j < n; ++j) {
            double s = (m.log_value(u * v[j]) - lmv[j]) / lu;
            if (!std::isfinite(s)) throw RangeError("index grid hit a vanishing value; shrink the grid");
            s_min = std::min(s_min, s);
            s_max = std::max(s_max, s);
        }
    }
    IndexEstimate out;
    out.alpha = s_min;
    out.beta = s_max > 60.0 ? kInf : s_max;
    out.u_min = grid.u_min;
    out.grid_points = n;
    return out;
}

Delta2Report delta2_check(const OrliczFunction& m, double t0, int grid_points) {
    if (!(t0 > 0.0)) throw ConstructionError("doubling check needs t0 > 0");
    if (!m.non_degenerate()) {
        // M == 0 satisfies the doubling inequality vacuously.
        return {true, 1.0, std::nullopt};
    }
    const double lo_shallow = std::log(t0) + std::log(1e-4);
    const double lo_deep = std::log(t0) + std::log(1e-8);
    const double hi = std::log(t0);
    auto scan = [&](double la, double lb, double& arg) {
        double best = -kInf;
        for (int i = 0; i < grid_points; ++i) {
            double t = std::exp(la + (lb - la) * i / (grid_points - 1));
            double d = m.log_value(2.0 * t) - m.log_value(t);
            if (d > best) { best = d; arg = t; }
        }
        return best;
    };
    double arg_shallow = t0, arg_deep = t0;
    double sup_shallow = scan(lo_shallow, hi, arg_shallow);
    double sup_deep = scan(lo_deep, lo_shallow, arg_deep);
    Delta2Report rep;
    rep.holds = sup_deep <= sup_shallow + std::log(4.0);
    double sup = std::max(sup_shallow, sup_deep);
    rep.constant_est = std::exp(sup);
    rep.witness = rep.holds ? (sup_shallow >= sup_deep ? arg_shallow : arg_deep) : arg_deep;
    return rep;
}

OrliczFunction build_piecewise(const OrliczFunction& n, const std::vector<double>& a_seq,
                               const std::vector<double>& b_seq) {
    if (a_seq.empty() || a_seq.size() != b_seq.size())
        throw ConstructionError("piecewise build needs matching nonempty a and b sequences");
    std::vector<PiecewiseSegment> table(a_seq.size());
    for (std::size_t k = 0; k < a_seq.size(); ++k) {
        double a = a_seq[k], b = b_seq[k];
        if (!(a > 0.0) || !(b > 0.0) || !(b < a))
            throw ConstructionError("piecewise build needs 0 < b_k < a_k");
        if (k > 0 && !(a < b_seq[k - 1]))
            throw ConstructionError("piecewise build needs a_{k+1} < b_k (strictly decreasing scales)");
        table[k] = {a, b, n.log_value(a), n.log_value(b)};
    }
    OrliczFunction out = OrliczFunction::piecewise(n, std::move(table));
    // Endpoint continuity is structural in the chord formula; verify anyway
    // against the generator at both ends of every segment.
    for (std::size_t k = 0; k < a_seq.size(); ++k) {
        for (double t : {a_seq[k], b_seq[k]}) {
            double d = std::abs(out.log_value(t) - n.log_value(t));
            if (d > 1e-9 * std::max(1.0, std::abs(n.log_value(t))))
                throw ConstructionError("piecewise build failed endpoint continuity validation");
        }
    }
    if (!check_orlicz_shape(out, a_seq.front()))
        throw ConstructionError("piecewise build failed convexity validation");
    // The replaced-segment ratios must thin out: both b_k/a_k and
    // N(b_k)/N(a_k) decrease along k, which is what makes their series
    // summable on any probed range.
    for (std::size_t k = 1; k < a_seq.size(); ++k) {
        double lr_prev = std::log(b_seq[k - 1]) - std::log(a_seq[k - 1]);
        double lr_cur = std::log(b_seq[k]) - std::log(a_seq[k]);
        if (!(lr_cur < lr_prev))
            throw ConstructionError("piecewise build: b_k/a_k fails to decrease at k=" +
                                    std::to_string(k + 1));
        double ln_prev = n.log_value(b_seq[k - 1]) - n.log_value(a_seq[k - 1]);
        double ln_cur = n.log_value(b_seq[k]) - n.log_value(a_seq[k]);
        if (!(ln_cur < ln_prev))
            throw ConstructionError("piecewise build: N(b_k)/N(a_k) fails to decrease at k=" +
                                    std::to_string(k + 1));
    }
    return out;
}

OrliczFunction build_piecewise(const OrliczFunction& n, const std::vector<double>& a_seq,
                               const BRule& b_rule) {
    std::vector<double> b(a_seq.size());
    for (std::size_t k = 0; k < a_seq.size(); ++k) {
        double a_next = k + 1 < a_seq.size() ? a_seq[k + 1] : a_seq[k] * a_seq[k];
        b[k] = b_rule(static_cast<int>(k) + 1, a_seq[k], a_next);
    }
    return build_piecewise(n, a_seq, b);
}

PiecewiseBuildResult build_piecewise(const OrliczFunction& n, const WeightSequence& w,
                                     const BRule& b_rule) {
    // N(t)/t -> 0 near zero, probed on a decade grid.
    double prev = kInf;
    for (double t = 1.0; t > 1e-12; t *= 0.1) {
        double q = n.value(t) / t;
        if (!(q <= prev * (1.0 + 1e-12)))
            throw ConstructionError("generator fails N(t)/t -> 0 on the probe grid");
        prev = q;
    }
    if (!(n.value(1e-12) / 1e-12 < 1e-3 * std::max(1.0, n.value(1.0))))
        throw ConstructionError("generator fails N(t)/t -> 0 on the probe grid");
    std::size_t depth = w.probe_limit();
    std::vector<double> a(depth);
    double prev_lw = w.log_weight(1);
    for (std::size_t k = 1; k <= depth; ++k) {
        double lw = w.log_weight(k);
        if (lw < prev_lw - 1e-12)
            throw ConstructionError("piecewise weights must be nondecreasing");
        prev_lw = lw;
        a[k - 1] = inverse_log(n, -lw); // N(a_k) = 1/w_k
    }
    PiecewiseBuildResult out{build_piecewise(n, a, b_rule),
                             std::abs(n.value(1.0) - 1.0) < 1e-9};
    return out;
}

OrliczFunction section6_piecewise(int depth) {
    if (depth < 1 || depth > 64) throw ConstructionError("fixture depth must be in [1, 64]");
    std::vector<double> a(depth), b(depth);
    for (int k = 1; k <= depth; ++k) {
        a[k - 1] = std::pow(static_cast<double>(k), -2.0 * k);
        b[k - 1] = 2.0 * std::pow(static_cast<double>(k + 1), -2.0 * (k + 1));
    }
    return build_piecewise(OrliczFunction::exponential_example(), a, b);
}

namespace {

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
    double mid = 0.5 * (a + b);
    double lm = 0.5 * (a + mid), rm = 0.5 * (mid + b);
    double flm = f(lm), frm = f(rm);
    double left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_quad(f, a, mid, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_quad(f, mid, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_quad(f, a, b, fa, fm, fb, whole, tol, 40);
}

} // namespace

double smoothing_psi(const OrliczFunction& m, double t) {
    t = std::abs(t);
    if (t == 0.0) return 0.0;
    auto f = [&](double u) { return u <= 0.0 ? 0.0 : m.value(u) / u; };
    return integrate(f, 0.0, t, 1e-10);
}

double smoothing_Psi(const OrliczFunction& m, double t) {
    t = std::abs(t);
    if (t == 0.0) return 0.0;
    auto h = [&](double u) {
        if (u <= 0.0 || u >= t) return 0.0;
        return smoothing_psi(m, u) / u * std::exp(u / (u - t));
    };
    return integrate(h, 0.0, t, 1e-10);
}

int smooth_order(double p) {
    if (!(p >= 1.0)) throw ConstructionError("smoothing order is defined for p >= 1");
    double r = std::round(p);
    if (std::abs(p - r) < 1e-9) return static_cast<int>(r) - 1;
    return static_cast<int>(std::floor(p));
}

bool check_orlicz_shape(const OrliczFunction& m, double t_max, int points) {
    if (m.value(0.0) != 0.0) return false;
    std::vector<double> t(points), y(points);
    double llo = std::log(t_max) - 27.0 * std::log(10.0);
    double lhi = std::log(t_max);
    for (int i = 0; i < points; ++i) {
        t[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
        y[i] = m.value(t[i]);
        if (!(y[i] >= 0.0)) return false;
        if (i > 0 && y[i] < y[i - 1] * (1.0 - 1e-12)) return false;
    }
    for (int i = 1; i + 1 < points; ++i) {
        double lam = (t[i] - t[i - 1]) / (t[i + 1] - t[i - 1]);
        double chord = y[i - 1] + lam * (y[i + 1] - y[i - 1]);
        if (y[i] > chord + 1e-9 * std::max(1.0, chord)) return false;
    }
    return true;
}

} // namespace morlicz
