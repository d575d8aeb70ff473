#pragma once

#include "grasq/core.hpp"
#include "grasq/rng.hpp"

namespace grasq {

/// A point of the cotangent bundle of the Grassmannian in the projection
/// model: a d x d complex matrix q with q^2 = q and rank n (1 <= n < d).
/// Hermitian points form the zero section (the Grassmannian itself);
/// non-Hermitian idempotents carry the fiber directions. Immutable.
class ProjectionPoint {
 public:
  /// Empty placeholder; every operation requires a real point.
  ProjectionPoint() = default;

  /// Checked construction: verifies idempotency, trace and numerical rank.
  ProjectionPoint(Matrix q, Index n,
                  const Tolerances& tol = default_tolerances());

  /// Construction from code paths that guarantee the invariants
  /// structurally (similarity flows, frames, validated decompositions).
  static ProjectionPoint trusted(Matrix q, Index n);

  Index dim() const { return q_.rows(); }
  Index rank() const { return n_; }
  const Matrix& matrix() const { return q_; }

  /// Raw trace (= n up to round-off).
  Complex trace() const { return q_.trace(); }

  /// Normalized trace tau = Tr/n of an arbitrary d x d matrix, the
  /// convention under which rank-n projections have trace 1.
  Complex tau(const Matrix& m) const {
    return m.trace() / static_cast<double>(n_);
  }

  bool is_hermitian(double tol = 1e-10) const {
    return (q_ - q_.adjoint()).norm() <= tol;
  }

 private:
  Matrix q_;
  Index n_ = 0;
};

/// A tangent vector at q: a matrix A with qA + Aq = A (hence qAq = 0).
class TangentVector {
 public:
  TangentVector(ProjectionPoint base, Matrix a,
                const Tolerances& tol = default_tolerances());
  static TangentVector trusted(ProjectionPoint base, Matrix a);

  const ProjectionPoint& base() const { return base_; }
  const Matrix& matrix() const { return a_; }
  double norm() const { return a_.norm(); }

 private:
  TangentVector() = default;
  ProjectionPoint base_;
  Matrix a_;
};

/// q = q_V + f with q_V the Hermitian projection onto im(q) and
/// f = q(1 - q_V) the fiber part mapping V-perp into V.
struct CotangentDecomposition {
  ProjectionPoint base_orthogonal;
  Matrix fiber;
};

/// Hermitian point q = V V^dagger from an orthonormal frame V.
ProjectionPoint from_frame(const Matrix& v,
                           const Tolerances& tol = default_tolerances());

/// Unitarily invariant sample of the zero section: orthonormalize a d x n
/// Ginibre matrix and take the column-space projector.
ProjectionPoint haar_sample(Index d, Index n, RngState& rng);

/// q_V + f; requires base Hermitian, q_V f = f and f q_V = 0.
ProjectionPoint compose_cotangent(const ProjectionPoint& base, const Matrix& f,
                                  const Tolerances& tol = default_tolerances());

CotangentDecomposition decompose_cotangent(const ProjectionPoint& q);

/// Projects an arbitrary d x d matrix onto the tangent space at q:
/// A = qX(1-q) + (1-q)Xq. Idempotent; fixes tangent inputs.
TangentVector tangent_component(const ProjectionPoint& q, const Matrix& x);

/// Random tangent vector with entries O(1) (Gaussian pushed through the
/// tangent projector).
TangentVector random_tangent(const ProjectionPoint& q, RngState& rng);

/// The commuting almost complex structures and their involution:
/// I: A -> iA, J: A -> i[A,q], K = IJ: A -> [q,A].
TangentVector apply_I(const TangentVector& v);
TangentVector apply_J(const TangentVector& v);
TangentVector apply_K(const TangentVector& v);

/// Similarity-flow retraction q_t = e^{tL} q e^{-tL} with L = [A,q]; exactly
/// idempotent for all t, with d/dt at 0 equal to A.
ProjectionPoint retract(const ProjectionPoint& q, const TangentVector& v,
                        double t);

/// q -> q^dagger; an involution whose fixed points are the zero section.
ProjectionPoint adjoint_involution(const ProjectionPoint& q);

/// True iff v is vertical (tangent to the fiber of T*G -> G): A q = 0,
/// equivalently K(v) = v.
bool is_vertical(const TangentVector& v, double tol = 1e-12);

}  // namespace grasq
