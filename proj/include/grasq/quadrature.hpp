#pragma once

#include <Eigen/Dense>

namespace grasq {

struct Quadrature1D {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Hermite rule for weight e^{-x^2} on R (Golub-Welsch).
Quadrature1D gauss_hermite(int order);

/// Gauss-Legendre rule for weight 1 on [-1, 1] (Golub-Welsch).
Quadrature1D gauss_legendre(int order);

}  // namespace grasq
