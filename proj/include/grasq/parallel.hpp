#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "grasq/core.hpp"
#include "grasq/rng.hpp"

namespace grasq {

/// Deterministic fan-out over [0, n). Worker w owns the contiguous chunk
/// [w*n/W, (w+1)*n/W) and an RngState derived from (seed, w); partials are
/// combined pairwise in a fixed tree order, so the result depends only on
/// (seed, workers), never on scheduling.
///
/// Acc needs: void combine(const Acc&). Body signature:
/// void body(Acc&, RngState&, std::int64_t index).
template <typename Acc, typename Body>
Acc parallel_accumulate(std::int64_t n, unsigned workers, std::uint64_t seed,
                        Acc init, Body body) {
  if (workers == 0) workers = 1;
  std::vector<Acc> partial(workers, init);
  auto run = [&](unsigned w) {
    RngState rng = RngState::for_worker(seed, w);
    const std::int64_t lo = n * w / workers;
    const std::int64_t hi = n * (w + 1) / workers;
    for (std::int64_t i = lo; i < hi; ++i) body(partial[w], rng, i);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  // Pairwise tree reduction.
  for (unsigned stride = 1; stride < workers; stride *= 2)
    for (unsigned w = 0; w + stride < workers; w += 2 * stride)
      partial[w].combine(partial[w + stride]);
  return partial[0];
}

/// Streaming first/second moments of a matrix-valued sample, enough for the
/// Monte Carlo mean and a CLT error bound on scaled means.
struct MatrixTally {
  Matrix sum;
  Eigen::MatrixXd sumsq;  // sum of |entry|^2
  std::int64_t count = 0;

  explicit MatrixTally(Index rows = 0, Index cols = 0)
      : sum(Matrix::Zero(rows, cols)), sumsq(Eigen::MatrixXd::Zero(rows, cols)) {}

  void add(const Matrix& x) {
    sum += x;
    sumsq += x.cwiseAbs2();
    ++count;
  }

  void combine(const MatrixTally& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    count += o.count;
  }

  Matrix mean() const { return sum / static_cast<double>(count); }

  /// sigmas * sqrt(sum of entrywise variances / count), scaled by `scale`:
  /// a CLT bound on ||scale * (mean - E)||_F.
  double clt_bound(double scale, double sigmas) const {
    const double n = static_cast<double>(count);
    const Eigen::MatrixXd var =
        (sumsq / n - (sum / n).cwiseAbs2()).cwiseMax(0.0);
    return sigmas * std::abs(scale) * std::sqrt(var.sum() / n);
  }
};

struct VectorTally {
  Vector sum;
  Eigen::VectorXd sumsq;
  std::int64_t count = 0;

  explicit VectorTally(Index size = 0)
      : sum(Vector::Zero(size)), sumsq(Eigen::VectorXd::Zero(size)) {}

  void add(const Vector& x) {
    sum += x;
    sumsq += x.cwiseAbs2();
    ++count;
  }

  void combine(const VectorTally& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    count += o.count;
  }

  Vector mean() const { return sum / static_cast<double>(count); }

  double clt_bound(double scale, double sigmas) const {
    const double n = static_cast<double>(count);
    const Eigen::VectorXd var =
        (sumsq / n - (sum / n).cwiseAbs2()).cwiseMax(0.0);
    return sigmas * std::abs(scale) * std::sqrt(var.sum() / n);
  }
};

struct ScalarTally {
  Complex sum{0.0, 0.0};
  double sumsq = 0.0;
  std::int64_t count = 0;

  void add(Complex x) {
    sum += x;
    sumsq += std::norm(x);
    ++count;
  }

  void combine(const ScalarTally& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    count += o.count;
  }

  Complex mean() const { return sum / static_cast<double>(count); }

  double clt_bound(double scale, double sigmas) const {
    const double n = static_cast<double>(count);
    const double var = std::max(0.0, sumsq / n - std::norm(sum / n));
    return sigmas * std::abs(scale) * std::sqrt(var / n);
  }
};

}  // namespace grasq
