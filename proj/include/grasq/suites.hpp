#pragma once

#include <functional>

#include "grasq/report.hpp"

namespace grasq {

struct CaseOutcome {
  double residual = 0.0;
  double bound = 0.0;
  std::string note;
};

struct SuiteCase {
  std::string suite;
  std::string name;
  std::string anchor;
  std::function<CaseOutcome(const SuiteConfig&)> run;
};

/// Every registered case, in deterministic order.
const std::vector<SuiteCase>& case_registry();

const std::vector<std::string>& known_suites();

/// The registry of claim identifiers cases may anchor to.
const std::vector<std::string>& anchor_registry();

/// Runs the named suite ("all" runs everything). Exceptions inside a case
/// become failed cases with a diagnostic note; the suite continues.
VerificationReport run_suite(const SuiteConfig& config);

/// Convergence study for the path geometries; returns a CSV with header
/// m,discrete_vs_ode,holonomy_phase.
std::string path_study_csv(const std::string& geometry,
                           const std::vector<int>& step_counts);

/// The closed-form example drivers behind `examples <flat|sphere>`.
VerificationReport run_flat_examples(double hbar, int quad_order);
VerificationReport run_sphere_examples(int quad_order);

/// Text table of the disk/sphere three-point product sweep.
std::string delta_product_sweep_table();

/// Seed for a named case derived from the run seed (stable FNV-1a hash).
std::uint64_t case_seed(std::uint64_t run_seed, const std::string& name);

}  // namespace grasq
