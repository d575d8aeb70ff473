#include "grasq/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace grasq {

namespace {

// Nodes are eigenvalues of the Jacobi matrix; weights come from the first
// components of its eigenvectors scaled by the zeroth moment.
Quadrature1D golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
  const int n = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = offdiag(i);
    jacobi(i + 1, i) = offdiag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  Quadrature1D q;
  q.nodes = eig.eigenvalues();
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    q.weights(i) = mu0 * v0 * v0;
  }
  return q;
}

}  // namespace

Quadrature1D gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order < 1");
  Eigen::VectorXd offdiag(order - 1);
  for (int i = 1; i < order; ++i) offdiag(i - 1) = std::sqrt(i / 2.0);
  return golub_welsch(offdiag, std::sqrt(M_PI));
}

Quadrature1D gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
  Eigen::VectorXd offdiag(order - 1);
  for (int i = 1; i < order; ++i)
    offdiag(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  return golub_welsch(offdiag, 2.0);
}

}  // namespace grasq
