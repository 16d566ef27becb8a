#pragma once

#include <string>
#include <vector>

#include "morlicz/perturb.hpp"

namespace morlicz {

/// Registered objective catalog. Names and shapes:
///   quadratic    sum_i (1 + i/10) (x_i - c_i)^2, c_i = c (-1)^i / (i+1); params: [c], default 0.2
///   two_well     min(||x - c||^2, ||x + c||^2), c_i = s / (i+1); params: [s], default 0.3
///   linear       sum_i g (-1)^i x_i / (i+1); params: [g], default 1
///   modular_self the family modular itself; params: none
///   polynomial   sum_i ((x_i - c)^4 + x_i^2 / 2); params: [c], default 0.1
Objective make_objective(const std::string& name, const std::vector<double>& params,
                         std::size_t dim, const MusielakFamily& fam);

const std::vector<std::string>& objective_names();

} // namespace morlicz
