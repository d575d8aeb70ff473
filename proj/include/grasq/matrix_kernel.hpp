#pragma once

#include "grasq/core.hpp"

namespace grasq {

/// Hilbert-Schmidt inner product Tr(A^dagger B).
template <typename DerivedA, typename DerivedB>
Complex hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: operands are " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  return a.conjugate().cwiseProduct(b).sum();
}

/// Matrix exponential, scaling-and-squaring with Pade approximants
/// (Eigen MatrixFunctions). Relative accuracy comfortably below 1e-12
/// for ||A|| <= 10 at the dimensions this library targets.
Matrix expm(const Matrix& a);

/// d x rank matrix V with V^dagger V = I whose columns span the leading
/// (pivoted) column span of A. Column-pivoted Householder QR with the phase
/// convention diag(R) > 0, so the output is deterministic in the input.
/// Throws RankDeficiencyError when a retained pivot falls below
/// rel_cutoff * |largest pivot|.
Matrix orthonormal_frame(const Matrix& a, Index rank,
                         double rel_cutoff = 1e-10);

/// Number of singular values above rel_cutoff * sigma_max.
Index numerical_rank(const Matrix& a, double rel_cutoff = 1e-10);

}  // namespace grasq
