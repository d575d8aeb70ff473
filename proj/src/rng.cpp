#include "grasq/rng.hpp"

#include <cmath>

#include "grasq/matrix_kernel.hpp"

namespace grasq {
namespace {

constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RngState RngState::for_worker(std::uint64_t seed, std::uint64_t worker) {
  return RngState(mix(seed ^ mix(worker + 0x517CC1B727220A95ull)));
}

std::uint64_t RngState::next_u64() {
  ++counter_;
  return mix(seed_ + kWeyl * counter_);
}

double RngState::uniform() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngState::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex RngState::complex_normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // sqrt(-2 ln u)/sqrt(2)
  return Complex(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
}

Matrix gaussian_matrix(RngState& rng, Index rows, Index cols) {
  Matrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = rng.complex_normal();
  return a;
}

Matrix gaussian_hermitian(RngState& rng, Index d) {
  const Matrix g = gaussian_matrix(rng, d, d);
  return 0.5 * (g + g.adjoint()).eval();
}

Matrix gaussian_skew_hermitian(RngState& rng, Index d) {
  const Matrix g = gaussian_matrix(rng, d, d);
  return 0.5 * (g - g.adjoint()).eval();
}

Matrix random_unitary(RngState& rng, Index d) {
  return orthonormal_frame(gaussian_matrix(rng, d, d), d);
}

Matrix random_gl(RngState& rng, Index d, double cond_max) {
  const Matrix g = gaussian_matrix(rng, d, d);
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd s = svd.singularValues();
  const double floor = s(0) / cond_max;
  for (Index i = 0; i < d; ++i) s(i) = std::max(s(i), floor);
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace grasq
