#pragma once

#include <vector>

#include "grasq/suites.hpp"

namespace grasq::detail {

void register_tessarine_cases(std::vector<SuiteCase>& out);
void register_symplectic_cases(std::vector<SuiteCase>& out);
void register_quantization_cases(std::vector<SuiteCase>& out);
void register_propagator_cases(std::vector<SuiteCase>& out);
void register_path_cases(std::vector<SuiteCase>& out);
void register_flat_cases(std::vector<SuiteCase>& out);
void register_sphere_cases(std::vector<SuiteCase>& out);
void register_hyperkahler_cases(std::vector<SuiteCase>& out);

/// Default (d, n) grids per suite.
const std::vector<std::pair<Index, Index>>& tessarine_pairs();
const std::vector<std::pair<Index, Index>>& symplectic_pairs();
const std::vector<std::pair<Index, Index>>& quantization_pairs();

}  // namespace grasq::detail
