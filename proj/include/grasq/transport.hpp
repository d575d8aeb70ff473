#pragma once

#include <vector>

#include "grasq/propagator.hpp"

namespace grasq {

/// A path t in [0,1] -> T*G in one of three forms: a unitary flow
/// q(t) = e^{tX} q0 e^{-tX}, a piecewise geodesic through zero-section
/// waypoints, or an explicit sample list. Smooth kinds expose the analytic
/// velocity used by the transport ODE.
class PathSpec {
 public:
  static PathSpec unitary_flow(ProjectionPoint q0, Matrix generator,
                               int steps);
  /// Consecutive waypoints must be Hermitian and non-antipodal; each segment
  /// is the direct-rotation geodesic between its endpoints.
  static PathSpec zero_section_geodesics(std::vector<ProjectionPoint> waypoints,
                                         int steps);
  static PathSpec from_samples(std::vector<ProjectionPoint> points);

  bool smooth() const { return kind_ != Kind::kSamples; }
  int steps() const { return steps_; }
  Index dim() const;
  Index rank() const;

  ProjectionPoint at(double t) const;
  /// dq/dt at parameter t (smooth kinds only).
  Matrix velocity(double t) const;
  /// steps()+1 points at t = k/steps (or the stored list).
  std::vector<ProjectionPoint> sample_points() const;
  /// Interior parameter values where the velocity may jump (piecewise
  /// geodesics have corners at the waypoints).
  std::vector<double> breakpoints() const;

  PathSpec reversed() const;
  PathSpec with_steps(int steps) const;

 private:
  enum class Kind { kUnitaryFlow, kGeodesic, kSamples };
  PathSpec() = default;
  Kind kind_ = Kind::kSamples;
  int steps_ = 0;
  ProjectionPoint q0_{};
  Matrix generator_;
  std::vector<ProjectionPoint> waypoints_;
  std::vector<Matrix> segment_logs_;  // skew-Hermitian L per segment
  std::vector<ProjectionPoint> samples_;
};

/// Left-to-right composition of propagate over consecutive path samples.
/// Throws StepSizeError when a step has ||q_{k+1} - q_k|| > 0.5.
PropagatorMap discrete_transport(const PathSpec& path);

/// Parallel transport by RK4 integration of v' = q'(t) v on the canonical
/// source frame, re-projected to the fiber each step. Throws StepSizeError
/// if the pre-projection fiber defect exceeds 1e-8.
PropagatorMap ode_transport(const PathSpec& path, int steps);

/// arg det of the transport map; for n = 1 loops this is the holonomy
/// (Berry) phase.
double holonomy_phase(const PropagatorMap& map);

}  // namespace grasq
