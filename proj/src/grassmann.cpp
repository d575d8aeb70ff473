#include "grasq/grassmann.hpp"

#include "grasq/matrix_kernel.hpp"

namespace grasq {

ProjectionPoint::ProjectionPoint(Matrix q, Index n, const Tolerances& tol)
    : q_(std::move(q)), n_(n) {
  const Index d = q_.rows();
  if (q_.cols() != d)
    throw DimensionError("ProjectionPoint: matrix must be square");
  if (n_ < 1 || n_ >= d)
    throw ContractViolation("ProjectionPoint: rank must satisfy 1 <= n < d, got n=" +
                            std::to_string(n_) + ", d=" + std::to_string(d));
  if (!q_.allFinite())
    throw ContractViolation("ProjectionPoint: non-finite entries");
  const double idem = (q_ * q_ - q_).norm();
  if (idem > tol.construction)
    throw ContractViolation("ProjectionPoint: ||q^2 - q|| = " +
                            std::to_string(idem));
  if (std::abs(q_.trace() - Complex(static_cast<double>(n_), 0.0)) >
      tol.construction)
    throw ContractViolation("ProjectionPoint: Tr(q) != n");
  if (numerical_rank(q_, tol.rank_cutoff) != n_)
    throw ContractViolation("ProjectionPoint: numerical rank != n");
}

ProjectionPoint ProjectionPoint::trusted(Matrix q, Index n) {
  ProjectionPoint p;
  p.q_ = std::move(q);
  p.n_ = n;
  return p;
}

TangentVector::TangentVector(ProjectionPoint base, Matrix a,
                             const Tolerances& tol)
    : base_(std::move(base)), a_(std::move(a)) {
  if (a_.rows() != base_.dim() || a_.cols() != base_.dim())
    throw DimensionError("TangentVector: shape mismatch with base point");
  const Matrix& q = base_.matrix();
  const double defect = (q * a_ + a_ * q - a_).norm();
  if (defect > tol.construction)
    throw ContractViolation("TangentVector: ||qA + Aq - A|| = " +
                            std::to_string(defect));
}

TangentVector TangentVector::trusted(ProjectionPoint base, Matrix a) {
  TangentVector v;
  v.base_ = std::move(base);
  v.a_ = std::move(a);
  return v;
}

ProjectionPoint from_frame(const Matrix& v, const Tolerances& tol) {
  const Index n = v.cols();
  const Matrix gram = v.adjoint() * v;
  if ((gram - Matrix::Identity(n, n)).norm() > tol.construction)
    throw ContractViolation("from_frame: columns are not orthonormal");
  return ProjectionPoint::trusted(v * v.adjoint(), n);
}

ProjectionPoint haar_sample(Index d, Index n, RngState& rng) {
  const Matrix v = orthonormal_frame(gaussian_matrix(rng, d, n), n);
  return ProjectionPoint::trusted(v * v.adjoint(), n);
}

ProjectionPoint compose_cotangent(const ProjectionPoint& base, const Matrix& f,
                                  const Tolerances& tol) {
  const Matrix& qv = base.matrix();
  if (f.rows() != base.dim() || f.cols() != base.dim())
    throw DimensionError("compose_cotangent: fiber shape mismatch");
  if (!base.is_hermitian(tol.construction))
    throw ContractViolation("compose_cotangent: base is not Hermitian");
  const double scale = std::max(1.0, f.norm());
  if ((qv * f - f).norm() > tol.construction * scale)
    throw ContractViolation("compose_cotangent: q_V f != f");
  if ((f * qv).norm() > tol.construction * scale)
    throw ContractViolation("compose_cotangent: f q_V != 0");
  return ProjectionPoint::trusted(qv + f, base.rank());
}

CotangentDecomposition decompose_cotangent(const ProjectionPoint& q) {
  const Matrix v = orthonormal_frame(q.matrix(), q.rank());
  Matrix qv = v * v.adjoint();
  qv = 0.5 * (qv + qv.adjoint()).eval();  // scrub round-off asymmetry
  return CotangentDecomposition{
      ProjectionPoint::trusted(qv, q.rank()), q.matrix() - qv};
}

TangentVector tangent_component(const ProjectionPoint& q, const Matrix& x) {
  if (x.rows() != q.dim() || x.cols() != q.dim())
    throw DimensionError("tangent_component: shape mismatch");
  const Matrix& p = q.matrix();
  const Matrix id = Matrix::Identity(q.dim(), q.dim());
  return TangentVector::trusted(q, p * x * (id - p) + (id - p) * x * p);
}

TangentVector random_tangent(const ProjectionPoint& q, RngState& rng) {
  return tangent_component(q, gaussian_matrix(rng, q.dim(), q.dim()));
}

TangentVector apply_I(const TangentVector& v) {
  return TangentVector::trusted(v.base(), kImag * v.matrix());
}

TangentVector apply_J(const TangentVector& v) {
  const Matrix& q = v.base().matrix();
  const Matrix& a = v.matrix();
  return TangentVector::trusted(v.base(), kImag * (a * q - q * a));
}

TangentVector apply_K(const TangentVector& v) {
  const Matrix& q = v.base().matrix();
  const Matrix& a = v.matrix();
  return TangentVector::trusted(v.base(), q * a - a * q);
}

ProjectionPoint retract(const ProjectionPoint& q, const TangentVector& v,
                        double t) {
  if ((v.base().matrix() - q.matrix()).norm() > 1e-12 * q.dim())
    throw ContractViolation("retract: tangent vector based elsewhere");
  if (t == 0.0) return q;
  const Matrix& p = q.matrix();
  const Matrix& a = v.matrix();
  const Matrix lambda = a * p - p * a;
  const Matrix u = expm(t * lambda);
  const Matrix uinv = expm(-t * lambda);
  return ProjectionPoint::trusted(u * p * uinv, q.rank());
}

ProjectionPoint adjoint_involution(const ProjectionPoint& q) {
  return ProjectionPoint::trusted(q.matrix().adjoint(), q.rank());
}

bool is_vertical(const TangentVector& v, double tol) {
  return (v.matrix() * v.base().matrix()).norm() <=
         tol * std::max(1.0, v.norm());
}

}  // namespace grasq
