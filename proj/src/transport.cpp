#include "grasq/transport.hpp"

#include "grasq/matrix_kernel.hpp"

namespace grasq {

namespace {

// Principal log of a unitary via Schur (diagonal for normal input), halved:
// exp(result) conjugates the first reflection plane onto the second.
Matrix half_unitary_log(const Matrix& s) {
  Eigen::ComplexSchur<Matrix> schur(s);
  const Matrix& q = schur.matrixU();
  Vector half(s.rows());
  for (Index i = 0; i < s.rows(); ++i) {
    const Complex ev = schur.matrixT()(i, i);
    half(i) = Complex(0.0, 0.5 * std::arg(ev));
  }
  return q * half.asDiagonal() * q.adjoint();
}

}  // namespace

PathSpec PathSpec::unitary_flow(ProjectionPoint q0, Matrix generator,
                                int steps) {
  if (generator.rows() != q0.dim() || generator.cols() != q0.dim())
    throw DimensionError("unitary_flow: generator shape mismatch");
  if (steps < 1) throw ContractViolation("unitary_flow: steps < 1");
  PathSpec p;
  p.kind_ = Kind::kUnitaryFlow;
  p.q0_ = std::move(q0);
  p.generator_ = std::move(generator);
  p.steps_ = steps;
  return p;
}

PathSpec PathSpec::zero_section_geodesics(
    std::vector<ProjectionPoint> waypoints, int steps) {
  if (waypoints.size() < 2)
    throw ContractViolation("zero_section_geodesics: need >= 2 waypoints");
  if (steps < static_cast<int>(waypoints.size()) - 1)
    throw ContractViolation("zero_section_geodesics: too few steps");
  PathSpec p;
  p.kind_ = Kind::kGeodesic;
  p.steps_ = steps;
  const Index d = waypoints.front().dim();
  const Matrix id = Matrix::Identity(d, d);
  for (std::size_t k = 0; k + 1 < waypoints.size(); ++k) {
    const ProjectionPoint& a = waypoints[k];
    const ProjectionPoint& b = waypoints[k + 1];
    if (!a.is_hermitian() || !b.is_hermitian())
      throw ContractViolation("zero_section_geodesics: waypoint not Hermitian");
    const Matrix s = (id - 2.0 * b.matrix()) * (id - 2.0 * a.matrix());
    const Matrix log_half = half_unitary_log(s);
    const Matrix u = expm(log_half);
    if ((u * a.matrix() * u.adjoint() - b.matrix()).norm() > 1e-8)
      throw ContractViolation(
          "zero_section_geodesics: direct rotation failed (antipodal pair?)");
    p.segment_logs_.push_back(log_half);
  }
  p.waypoints_ = std::move(waypoints);
  return p;
}

PathSpec PathSpec::from_samples(std::vector<ProjectionPoint> points) {
  if (points.size() < 2)
    throw ContractViolation("from_samples: need >= 2 points");
  PathSpec p;
  p.kind_ = Kind::kSamples;
  p.steps_ = static_cast<int>(points.size()) - 1;
  p.samples_ = std::move(points);
  return p;
}

Index PathSpec::dim() const {
  switch (kind_) {
    case Kind::kUnitaryFlow: return q0_.dim();
    case Kind::kGeodesic: return waypoints_.front().dim();
    case Kind::kSamples: return samples_.front().dim();
  }
  return 0;
}

Index PathSpec::rank() const {
  switch (kind_) {
    case Kind::kUnitaryFlow: return q0_.rank();
    case Kind::kGeodesic: return waypoints_.front().rank();
    case Kind::kSamples: return samples_.front().rank();
  }
  return 0;
}

ProjectionPoint PathSpec::at(double t) const {
  switch (kind_) {
    case Kind::kUnitaryFlow: {
      const Matrix u = expm(t * generator_);
      const Matrix uinv = expm(-t * generator_);
      return ProjectionPoint::trusted(u * q0_.matrix() * uinv, q0_.rank());
    }
    case Kind::kGeodesic: {
      const int nseg = static_cast<int>(segment_logs_.size());
      int k = std::min(static_cast<int>(t * nseg), nseg - 1);
      if (t < 0) k = 0;
      const double local = t * nseg - k;
      const Matrix u = expm(local * segment_logs_[k]);
      return ProjectionPoint::trusted(
          u * waypoints_[k].matrix() * u.adjoint(), rank());
    }
    case Kind::kSamples:
      throw ContractViolation("PathSpec::at: sample-list paths are discrete");
  }
  throw ContractViolation("PathSpec::at: unreachable");
}

Matrix PathSpec::velocity(double t) const {
  switch (kind_) {
    case Kind::kUnitaryFlow: {
      const Matrix q = at(t).matrix();
      return generator_ * q - q * generator_;
    }
    case Kind::kGeodesic: {
      const int nseg = static_cast<int>(segment_logs_.size());
      int k = std::min(static_cast<int>(t * nseg), nseg - 1);
      if (t < 0) k = 0;
      const Matrix q = at(t).matrix();
      const Matrix& l = segment_logs_[k];
      return static_cast<double>(nseg) * (l * q - q * l);
    }
    case Kind::kSamples:
      throw ContractViolation("PathSpec::velocity: path not differentiable");
  }
  throw ContractViolation("PathSpec::velocity: unreachable");
}

std::vector<ProjectionPoint> PathSpec::sample_points() const {
  if (kind_ == Kind::kSamples) return samples_;
  std::vector<ProjectionPoint> pts;
  pts.reserve(steps_ + 1);
  for (int k = 0; k <= steps_; ++k)
    pts.push_back(at(static_cast<double>(k) / steps_));
  return pts;
}

std::vector<double> PathSpec::breakpoints() const {
  std::vector<double> out;
  if (kind_ == Kind::kGeodesic) {
    const int nseg = static_cast<int>(segment_logs_.size());
    for (int k = 1; k < nseg; ++k)
      out.push_back(static_cast<double>(k) / nseg);
  }
  return out;
}

PathSpec PathSpec::reversed() const {
  switch (kind_) {
    case Kind::kUnitaryFlow: {
      // Start from the endpoint and flow backwards.
      PathSpec p;
      p.kind_ = Kind::kUnitaryFlow;
      p.q0_ = at(1.0);
      p.generator_ = -generator_;
      p.steps_ = steps_;
      return p;
    }
    case Kind::kGeodesic: {
      std::vector<ProjectionPoint> rev(waypoints_.rbegin(), waypoints_.rend());
      return zero_section_geodesics(std::move(rev), steps_);
    }
    case Kind::kSamples: {
      std::vector<ProjectionPoint> rev(samples_.rbegin(), samples_.rend());
      return from_samples(std::move(rev));
    }
  }
  throw ContractViolation("PathSpec::reversed: unreachable");
}

PathSpec PathSpec::with_steps(int steps) const {
  PathSpec p = *this;
  if (kind_ == Kind::kSamples)
    throw ContractViolation("with_steps: sample-list paths are fixed");
  p.steps_ = steps;
  return p;
}

PropagatorMap discrete_transport(const PathSpec& path) {
  const std::vector<ProjectionPoint> pts = path.sample_points();
  std::vector<FiberFrame> frames;
  frames.reserve(pts.size());
  for (const auto& p : pts) frames.push_back(FiberFrame::canonical(p));
  const Index n = path.rank();
  Matrix total = Matrix::Identity(n, n);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double gap = (pts[k + 1].matrix() - pts[k].matrix()).norm();
    if (gap > 0.5)
      throw StepSizeError("discrete_transport: step " + std::to_string(k) +
                          " has ||dq|| = " + std::to_string(gap));
    total = propagate_in_frames(frames[k], frames[k + 1]).matrix() * total;
  }
  return PropagatorMap(frames.front(), frames.back(), std::move(total));
}

PropagatorMap ode_transport(const PathSpec& path, int steps) {
  if (!path.smooth())
    throw ContractViolation("ode_transport: path has no analytic velocity");
  if (steps < 1) throw ContractViolation("ode_transport: steps < 1");
  const FiberFrame source = FiberFrame::canonical(path.at(0.0));
  Matrix w = source.columns();

  // Integrate each smooth interval separately so RK4 never straddles a
  // velocity jump at a geodesic corner.
  std::vector<double> knots = {0.0};
  for (double b : path.breakpoints()) knots.push_back(b);
  knots.push_back(1.0);
  for (std::size_t seg = 0; seg + 1 < knots.size(); ++seg) {
    const double t0 = knots[seg];
    const double t1 = knots[seg + 1];
    const int n = std::max(1, static_cast<int>(std::lround(steps * (t1 - t0))));
    const double h = (t1 - t0) / n;
    for (int k = 0; k < n; ++k) {
      const double t = t0 + k * h;
      const Matrix a1 = path.velocity(t);
      const Matrix a2 = path.velocity(t + 0.5 * h);
      // keep the endpoint evaluation inside the current smooth interval
      const Matrix a4 = path.velocity(std::min(t + h, t1 - 1e-9 * h));
      const Matrix k1 = a1 * w;
      const Matrix k2 = a2 * (w + 0.5 * h * k1);
      const Matrix k3 = a2 * (w + 0.5 * h * k2);
      const Matrix k4 = a4 * (w + h * k3);
      w += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      const Matrix qn = path.at(t + h).matrix();
      const double defect = (qn * w - w).norm() / std::max(1.0, w.norm());
      if (defect > 1e-8)
        throw StepSizeError("ode_transport: fiber defect " +
                            std::to_string(defect) + " at step " +
                            std::to_string(k));
      w = qn * w;
    }
  }
  const FiberFrame target = FiberFrame::canonical(path.at(1.0));
  return PropagatorMap(source, target, target.columns().adjoint() * w);
}

double holonomy_phase(const PropagatorMap& map) {
  return std::arg(map.matrix().determinant());
}

}  // namespace grasq
