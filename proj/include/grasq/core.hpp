#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace grasq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr Complex kImag{0.0, 1.0};

/// Validation tolerances shared across the library. The defaults are the
/// fixed constants every construction/identity check uses; suites may pass
/// an overridden copy through their configuration.
struct Tolerances {
  double construction = 1e-10;  ///< manifold membership at construction
  double identity = 1e-12;      ///< algebraic identity checks
  double fd_step = 1e-4;        ///< central-difference step
  double fd_accept = 1e-6;      ///< finite-difference acceptance
  double mc_sigmas = 3.0;       ///< CLT acceptance multiplier
  double rank_cutoff = 1e-10;   ///< relative singular/pivot cutoff
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t;
  return t;
}

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RankDeficiencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConditioningError : std::runtime_error {
  ConditioningError(const std::string& what, double cond)
      : std::runtime_error(what), condition(cond) {}
  double condition;
};

struct StepSizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChartError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grasq
