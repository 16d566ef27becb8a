#pragma once

#include <cstddef>
#include <vector>

#include "morlicz/orlicz.hpp"
#include "morlicz/space.hpp"

namespace morlicz::kernels {

/// Reference serial modular kernel over materialized coordinate functions.
/// This is the library default: bit-deterministic summation order.
double modular_serial(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                      double scale = 1.0);

/// OpenMP variant (deterministic per thread count, ordered reduction over
/// fixed-size blocks so results match the serial kernel bit-for-bit).
double modular_omp(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                   double scale = 1.0);

/// Luxemburg norm over a materialized family using the given modular kernel.
double luxemburg_norm_with(const std::vector<OrliczFunction>& fns, const std::vector<double>& x,
                           bool use_omp);

} // namespace morlicz::kernels
