#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grasq/quantization.hpp"

namespace grasq {

/// Frame of the fiber E_q = im(q) of the complexified tautological bundle:
/// d x n columns with q . columns = columns. The canonical frame comes from
/// the pivoted-QR orthonormalization of q, so map matrices are reproducible.
class FiberFrame {
 public:
  static FiberFrame canonical(const ProjectionPoint& q);
  FiberFrame(ProjectionPoint base, Matrix columns,
             const Tolerances& tol = default_tolerances());

  const ProjectionPoint& base() const { return base_; }
  const Matrix& columns() const { return cols_; }
  Index rank() const { return cols_.cols(); }

  /// Coordinates of a fiber vector in this frame (least-squares solve; for
  /// orthonormal frames this is the adjoint).
  Vector coordinates(const Vector& v) const;

 private:
  FiberFrame() = default;
  ProjectionPoint base_;
  Matrix cols_;
  bool orthonormal_ = false;
};

/// The linear map E_{q1} -> E_{q2}, v -> q2 v, expressed in frames. The map
/// may legitimately be singular (orthogonal fibers); near-degeneracy is
/// flagged, not rejected.
class PropagatorMap {
 public:
  PropagatorMap(FiberFrame source, FiberFrame target, Matrix map);

  const FiberFrame& source() const { return source_; }
  const FiberFrame& target() const { return target_; }
  const Matrix& matrix() const { return map_; }

  double smallest_singular_value() const;
  bool conditioning_flag() const {
    return smallest_singular_value() < 1e-8;
  }

  Vector apply(const Vector& fiber_vector) const;

 private:
  FiberFrame source_, target_;
  Matrix map_;
};

/// Propagator in canonical frames.
PropagatorMap propagate(const ProjectionPoint& q1, const ProjectionPoint& q2);

/// Propagator in caller-supplied frames (used by the frame-independence
/// checks).
PropagatorMap propagate_in_frames(const FiberFrame& source,
                                  const FiberFrame& target);

/// Composition target-of(a) == source-of(b): returns b after a.
PropagatorMap compose(const PropagatorMap& b, const PropagatorMap& a);

/// Three-point function Delta(q1,q2,q3) = tau(q3 q2 q1).
Complex three_point(const ProjectionPoint& q1, const ProjectionPoint& q2,
                    const ProjectionPoint& q3);

/// Normalized trace of P(q1,q2)P(q2,q3)P(q3,q1); equals three_point.
Complex three_point_via_propagators(const ProjectionPoint& q1,
                                    const ProjectionPoint& q2,
                                    const ProjectionPoint& q3);

/// Antisymmetrized epsilon-epsilon coefficient of Delta around q along the
/// retractions of u and v; recovers omega(u,v) to first order in eps.
Complex curvature_from_three_point(const ProjectionPoint& q,
                                   const TangentVector& u,
                                   const TangentVector& v, double eps);

/// || (d/n) E_Haar[P(q1,q)P(q,q2)] - P(q1,q2) ||_F with CLT bound.
McResidual convolution_idempotency_residual(const ProjectionPoint& q1,
                                            const ProjectionPoint& q2,
                                            std::int64_t samples,
                                            RngState& rng,
                                            unsigned workers = 1,
                                            double sigmas = 3.0);

/// For Hermitian x: (d/n) E_Haar[tau(P(x,q) P(x,q)^dagger)] = 1, i.e. the
/// propagator defines a probability density on the cycle. Returns
/// |estimate - 1| and its CLT bound.
McResidual probability_density_residual(const ProjectionPoint& x,
                                        std::int64_t samples, RngState& rng,
                                        unsigned workers = 1);

/// A section of E evaluated lazily; every evaluation is checked to land in
/// the fiber (q psi(q) = psi(q)).
class SectionSample {
 public:
  using Eval = std::function<Vector(const ProjectionPoint&)>;
  explicit SectionSample(Eval eval, double fiber_tol = 1e-10);
  Vector operator()(const ProjectionPoint& q) const;

 private:
  Eval eval_;
  double fiber_tol_;
};

/// Coherent section psi_Psi(q) = q Psi.
SectionSample coherent_section(const Vector& psi);

/// Monte Carlo image of (P-hat psi)(q) = integral psi(q') P(q',q) dmu(q').
/// The result is the coherent section of (d/n) mean(psi(q_k)), so coherent
/// sections are fixed points up to CLT error.
SectionSample reproducing_projection(const SectionSample& section,
                                     const CycleSampler& sampler,
                                     std::int64_t samples, RngState& rng,
                                     unsigned workers = 1);

/// Reconstructs the vector whose coherent section best matches `section`
/// on Haar samples: (d/n) mean(section(q_k)).
Vector section_to_vector(const SectionSample& section,
                         const CycleSampler& sampler, std::int64_t samples,
                         RngState& rng, unsigned workers = 1);

/// || psi_{M Psi}(q) - (i nabla_X psi_Psi + <M> psi_Psi)(q) || with the
/// covariant derivative taken by central differences along the retraction
/// of the Hamiltonian field and the splitting's vertical projection.
/// The identity holds for n = 1 and fails for n > 1.
double kostant_souriau_residual(const Matrix& m, const Vector& psi,
                                const ProjectionPoint& q, double fd_step);

enum class PolarizationKind { kI, kJ, kK };

/// Finite-difference covariant derivative of the section s(.) = v0 P(q0, .)
/// along the annihilating direction built from `which` at (q, w):
/// I: w + i Iw; J: w - i Jw; K: (1 - K)w. Returns its norm.
double polarization_residual(const ProjectionPoint& q0, const Vector& v0,
                             const ProjectionPoint& q, const TangentVector& w,
                             PolarizationKind which, double fd_step);

/// Black-box kernel: (from, to) -> map matrix in canonical frames.
using KernelFn = std::function<Matrix(const ProjectionPoint&,
                                      const ProjectionPoint&)>;

struct AxiomVerdict {
  bool identity_on_diagonal = false;
  bool square_integrable = false;
  bool idempotent = false;
  bool separating = false;
  bool all() const {
    return identity_on_diagonal && square_integrable && idempotent &&
           separating;
  }
  std::string failed() const;
};

/// Checks the four equal-time propagator axioms on cycle samples.
AxiomVerdict check_propagator_axioms(const KernelFn& kernel,
                                     const CycleSampler& sampler,
                                     std::int64_t samples, RngState& rng);

struct ReconstructionResult {
  Matrix reconstructed;       ///< operator on H realized through the kernel
  AxiomVerdict axioms;
  double action_residual = 0.0;  ///< ||reconstructed - x|| for the model kernel
  double action_bound = 0.0;
  double delta_residual = 0.0;   ///< |Delta via reconstruction - three_point|
  double delta_bound = 0.0;
};

/// Equivalence-theorem round trip at instance level: builds the operator
/// psi -> psi(x) P(x, .) on sampled coherent sections and pulls it back to
/// an operator on H; for the model kernel this recovers the action of x and
/// preserves the three-point function. Axiom violations are diagnosed, not
/// thrown.
ReconstructionResult reconstruct_point_from_propagator(
    const KernelFn& kernel, const ProjectionPoint& x,
    const CycleSampler& sampler, std::int64_t samples, RngState& rng,
    unsigned workers = 1);

}  // namespace grasq
