#pragma once

#include <vector>

#include "grasq/grassmann.hpp"

namespace grasq {

/// The holomorphic symplectic form Omega_q(A,B) = i tau(q[A,B]).
/// Antisymmetric, J-invariant, K-anti-invariant, GL-invariant.
Complex omega(const TangentVector& u, const TangentVector& v);

/// Hamiltonian vector field of the symbol <M>: q -> i[M,q]. Satisfies
/// Omega_q(X_M, B) = tau(MB) for every tangent B.
TangentVector hamiltonian_field(const ProjectionPoint& q, const Matrix& m);

/// {<M>,<N>}(q) = Omega_q(X_M, X_N).
Complex poisson_bracket(const Matrix& m, const Matrix& n,
                        const ProjectionPoint& q);

/// Deterministic real basis of the tangent space at q (4 n (d-n) elements):
/// matrix units in the off-diagonal blocks of a unitarily diagonalizing
/// frame of the Hermitian base point, pushed through the tangent projector,
/// together with their I-images.
std::vector<TangentVector> tangent_basis(const ProjectionPoint& q);

/// Smallest singular value of the real Gram matrix [Re Omega(B_j, B_k)] over
/// tangent_basis(q); strictly positive iff Omega is non-degenerate at q.
double nondegeneracy_certificate(const ProjectionPoint& q);

struct KahlerCheck {
  Complex omega_value;  ///< Omega_q(A,B)
  Complex metric_form;  ///< tau(A . JB)
};

/// Zero-section compatibility: at Hermitian q with Hermitian tangents,
/// Omega is real and equals the metric-form tau(A.JB).
KahlerCheck kahler_zero_section_check(const ProjectionPoint& q,
                                      const TangentVector& u,
                                      const TangentVector& v);

}  // namespace grasq
