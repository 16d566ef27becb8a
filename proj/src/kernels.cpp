#include "morlicz/kernels.hpp"

#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morlicz::kernels {

namespace {
constexpr std::size_t kBlock = 1024;

// Both kernels accumulate per-block partials and then fold the blocks in
// index order, so serial and parallel results agree bit-for-bit.
double fold_blocks(const std::vector<double>& partial) {
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

double block_sum(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                 double scale, std::size_t begin, std::size_t end) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        if (x[i] == 0.0) continue;
        s += fns[i].value(x[i] * scale);
    }
    return s;
}
} // namespace

double modular_serial(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                      double scale) {
    std::size_t n = x.size();
    std::vector<double> partial((n + kBlock - 1) / kBlock, 0.0);
    for (std::size_t b = 0; b < partial.size(); ++b)
        partial[b] = block_sum(fns, x, scale, b * kBlock, std::min(n, (b + 1) * kBlock));
    return fold_blocks(partial);
}

double modular_omp(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                   double scale) {
    std::size_t n = x.size();
    std::vector<double> partial((n + kBlock - 1) / kBlock, 0.0);
    const long nb = static_cast<long>(partial.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long b = 0; b < nb; ++b)
        partial[b] = block_sum(fns, x, scale, static_cast<std::size_t>(b) * kBlock,
                               std::min(n, (static_cast<std::size_t>(b) + 1) * kBlock));
    return fold_blocks(partial);
}

double luxemburg_norm_with(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                           bool use_omp) {
    double maxabs = 0.0;
    for (double v : x) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs == 0.0) return 0.0;
    auto mod = [&](double r) {
        double inv = 1.0 / r;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (std::abs(x[i]) * inv > fns[i].eval_domain_hint())
                return std::numeric_limits<double>::infinity();
        return use_omp ? modular_omp(fns, x, inv) : modular_serial(fns, x, inv);
    };
    double lo, hi;
    if (mod(maxabs) > 1.0) {
        lo = maxabs;
        hi = 2.0 * maxabs;
        while (mod(hi) > 1.0) {
            lo = hi;
            hi *= 2.0;
        }
    } else {
        hi = maxabs;
        lo = 0.5 * maxabs;
        while (mod(lo) <= 1.0) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-300) return 0.0;
        }
    }
    while (hi - lo > 1e-12 * hi) {
        double mid = 0.5 * (lo + hi);
        (mod(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace morlicz::kernels
