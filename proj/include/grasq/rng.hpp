#pragma once

#include <cstdint>

#include "grasq/core.hpp"

namespace grasq {

/// Counter-based generator: every output is a hash of (seed, counter), so a
/// stream is fully determined by that pair and worker streams obtained from
/// for_worker never collide. std::normal_distribution is not pinned down by
/// the standard, so the Gaussian transform is done here explicitly.
class RngState {
 public:
  explicit RngState(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  /// Worker streams for data-parallel loops: distinct per (seed, worker).
  static RngState for_worker(std::uint64_t seed, std::uint64_t worker);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();

  /// Uniform on (0,1]; never returns 0 so log() is always safe.
  double uniform();

  /// Standard real normal N(0,1). Consumes exactly two counter ticks.
  double normal();

  /// Standard complex normal: Re, Im independent N(0,1/2), E|z|^2 = 1.
  /// Consumes exactly two counter ticks.
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

/// d x n matrix of i.i.d. standard complex normal entries (Ginibre).
Matrix gaussian_matrix(RngState& rng, Index rows, Index cols);

/// Random Hermitian, skew-Hermitian and unitary matrices (test utilities).
Matrix gaussian_hermitian(RngState& rng, Index d);
Matrix gaussian_skew_hermitian(RngState& rng, Index d);
Matrix random_unitary(RngState& rng, Index d);

/// Random invertible matrix with condition number clamped to cond_max.
Matrix random_gl(RngState& rng, Index d, double cond_max);

}  // namespace grasq
