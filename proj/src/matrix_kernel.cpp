#include "grasq/matrix_kernel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace grasq {

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionError("expm: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  return a.exp();
}

Matrix orthonormal_frame(const Matrix& a, Index rank, double rel_cutoff) {
  if (rank < 1 || rank > std::min(a.rows(), a.cols()))
    throw DimensionError("orthonormal_frame: requested rank " +
                         std::to_string(rank) + " out of range for " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  const Matrix& r = qr.matrixQR();
  const double pivot0 = std::abs(r(0, 0));
  const double smallest = std::abs(r(rank - 1, rank - 1));
  if (pivot0 == 0.0 || smallest < rel_cutoff * pivot0)
    throw RankDeficiencyError(
        "orthonormal_frame: numerical rank below requested " +
        std::to_string(rank) + " (pivot " + std::to_string(smallest) +
        " vs cutoff " + std::to_string(rel_cutoff * pivot0) + ")");
  Matrix v = qr.householderQ() * Matrix::Identity(a.rows(), rank);
  // Phase convention: scale each column so the corresponding diagonal of R
  // becomes real positive.
  for (Index k = 0; k < rank; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) v.col(k) *= d / std::abs(d);
  }
  return v;
}

Index numerical_rank(const Matrix& a, double rel_cutoff) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_cutoff * s(0)) ++rank;
  return rank;
}

}  // namespace grasq
