#include "grasq/propagator.hpp"

#include "grasq/matrix_kernel.hpp"
#include "grasq/symplectic.hpp"

namespace grasq {

FiberFrame FiberFrame::canonical(const ProjectionPoint& q) {
  FiberFrame f;
  f.base_ = q;
  f.cols_ = orthonormal_frame(q.matrix(), q.rank());
  f.orthonormal_ = true;
  return f;
}

FiberFrame::FiberFrame(ProjectionPoint base, Matrix columns,
                       const Tolerances& tol)
    : base_(std::move(base)), cols_(std::move(columns)) {
  if (cols_.rows() != base_.dim() || cols_.cols() != base_.rank())
    throw DimensionError("FiberFrame: expected d x n columns");
  const double defect = (base_.matrix() * cols_ - cols_).norm();
  if (defect > tol.construction * std::max(1.0, cols_.norm()))
    throw ContractViolation("FiberFrame: columns not in the fiber, defect = " +
                            std::to_string(defect));
  if (numerical_rank(cols_, tol.rank_cutoff) != cols_.cols())
    throw RankDeficiencyError("FiberFrame: columns not full rank");
  orthonormal_ = (cols_.adjoint() * cols_ -
                  Matrix::Identity(cols_.cols(), cols_.cols()))
                     .norm() < 1e-12 * cols_.cols();
}

Vector FiberFrame::coordinates(const Vector& v) const {
  if (orthonormal_) return cols_.adjoint() * v;
  return cols_.colPivHouseholderQr().solve(v);
}

PropagatorMap::PropagatorMap(FiberFrame source, FiberFrame target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)),
      map_(std::move(map)) {
  if (map_.rows() != target_.rank() || map_.cols() != source_.rank())
    throw DimensionError("PropagatorMap: matrix shape mismatch");
}

double PropagatorMap::smallest_singular_value() const {
  Eigen::JacobiSVD<Matrix> svd(map_);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

Vector PropagatorMap::apply(const Vector& fiber_vector) const {
  return target_.columns() * (map_ * source_.coordinates(fiber_vector));
}

PropagatorMap propagate_in_frames(const FiberFrame& source,
                                  const FiberFrame& target) {
  const Matrix& q2 = target.base().matrix();
  Matrix map(target.rank(), source.rank());
  for (Index k = 0; k < source.rank(); ++k)
    map.col(k) = target.coordinates(q2 * source.columns().col(k));
  return PropagatorMap(source, target, std::move(map));
}

PropagatorMap propagate(const ProjectionPoint& q1, const ProjectionPoint& q2) {
  if (q1.dim() != q2.dim() || q1.rank() != q2.rank())
    throw DimensionError("propagate: points live on different bundles");
  return propagate_in_frames(FiberFrame::canonical(q1),
                             FiberFrame::canonical(q2));
}

PropagatorMap compose(const PropagatorMap& b, const PropagatorMap& a) {
  if ((b.source().base().matrix() - a.target().base().matrix()).norm() >
          1e-10 ||
      (b.source().columns() - a.target().columns()).norm() > 1e-10)
    throw ContractViolation("compose: frames do not chain");
  return PropagatorMap(a.source(), b.target(), b.matrix() * a.matrix());
}

Complex three_point(const ProjectionPoint& q1, const ProjectionPoint& q2,
                    const ProjectionPoint& q3) {
  return q1.tau(q3.matrix() * q2.matrix() * q1.matrix());
}

Complex three_point_via_propagators(const ProjectionPoint& q1,
                                    const ProjectionPoint& q2,
                                    const ProjectionPoint& q3) {
  const auto f1 = FiberFrame::canonical(q1);
  const auto f2 = FiberFrame::canonical(q2);
  const auto f3 = FiberFrame::canonical(q3);
  const Matrix cycle = propagate_in_frames(f3, f1).matrix() *
                       propagate_in_frames(f2, f3).matrix() *
                       propagate_in_frames(f1, f2).matrix();
  return cycle.trace() / static_cast<double>(q1.rank());
}

Complex curvature_from_three_point(const ProjectionPoint& q,
                                   const TangentVector& u,
                                   const TangentVector& v, double eps) {
  if (eps < 1e-6 || eps > 1e-2)
    throw ContractViolation("curvature_from_three_point: eps out of [1e-6,1e-2]");
  const ProjectionPoint qu = retract(q, u, eps);
  const ProjectionPoint qv = retract(q, v, eps);
  const Complex forward = three_point(qv, qu, q);
  const Complex backward = three_point(qu, qv, q);
  return kImag * (forward - backward) / (eps * eps);
}

McResidual convolution_idempotency_residual(const ProjectionPoint& q1,
                                            const ProjectionPoint& q2,
                                            std::int64_t samples,
                                            RngState& rng, unsigned workers,
                                            double sigmas) {
  const Index d = q1.dim();
  const Index n = q1.rank();
  const FiberFrame f1 = FiberFrame::canonical(q1);
  const FiberFrame f2 = FiberFrame::canonical(q2);
  const Matrix left = f2.columns().adjoint() * q2.matrix();
  const Matrix direct = left * f1.columns();
  const MatrixTally tally = parallel_accumulate(
      samples, workers, rng.seed(), MatrixTally(n, n),
      [&](MatrixTally& acc, RngState& wrng, std::int64_t) {
        const ProjectionPoint q = haar_sample(d, n, wrng);
        acc.add(left * q.matrix() * f1.columns());
      });
  const double mass = static_cast<double>(d) / static_cast<double>(n);
  return McResidual{(mass * tally.mean() - direct).norm(),
                    tally.clt_bound(mass, sigmas)};
}

McResidual probability_density_residual(const ProjectionPoint& x,
                                        std::int64_t samples, RngState& rng,
                                        unsigned workers) {
  if (!x.is_hermitian())
    throw ContractViolation("probability_density_residual: x not Hermitian");
  const Index d = x.dim();
  const Index n = x.rank();
  const FiberFrame fx = FiberFrame::canonical(x);
  const ScalarTally tally = parallel_accumulate(
      samples, workers, rng.seed(), ScalarTally{},
      [&](ScalarTally& acc, RngState& wrng, std::int64_t) {
        const ProjectionPoint q = haar_sample(d, n, wrng);
        const Matrix p = FiberFrame::canonical(q).columns().adjoint() *
                         q.matrix() * fx.columns();
        acc.add((p * p.adjoint()).trace() / static_cast<double>(n));
      });
  const double mass = static_cast<double>(d) / static_cast<double>(n);
  return McResidual{std::abs(mass * tally.mean() - 1.0),
                    tally.clt_bound(mass, 3.0)};
}

SectionSample::SectionSample(Eval eval, double fiber_tol)
    : eval_(std::move(eval)), fiber_tol_(fiber_tol) {}

Vector SectionSample::operator()(const ProjectionPoint& q) const {
  Vector v = eval_(q);
  const double defect = (q.matrix() * v - v).norm();
  if (defect > fiber_tol_ * std::max(1.0, v.norm()))
    throw EvaluationError("SectionSample: value left the fiber, defect = " +
                          std::to_string(defect));
  return v;
}

SectionSample coherent_section(const Vector& psi) {
  if (psi.norm() == 0.0)
    throw ContractViolation("coherent_section: zero vector");
  return SectionSample(
      [psi](const ProjectionPoint& q) -> Vector { return q.matrix() * psi; });
}

Vector section_to_vector(const SectionSample& section,
                         const CycleSampler& sampler, std::int64_t samples,
                         RngState& rng, unsigned workers) {
  const VectorTally tally = parallel_accumulate(
      samples, workers, rng.seed(), VectorTally(sampler.dim()),
      [&](VectorTally& acc, RngState& wrng, std::int64_t) {
        acc.add(section(sampler.draw(wrng)));
      });
  return sampler.total_mass() * tally.mean();
}

SectionSample reproducing_projection(const SectionSample& section,
                                     const CycleSampler& sampler,
                                     std::int64_t samples, RngState& rng,
                                     unsigned workers) {
  // (P-hat psi)(q) = integral psi(q') q dmu(q') = q . [mass * mean psi(q')].
  const Vector psi_hat =
      section_to_vector(section, sampler, samples, rng, workers);
  return SectionSample(
      [psi_hat](const ProjectionPoint& q) -> Vector {
        return q.matrix() * psi_hat;
      });
}

double kostant_souriau_residual(const Matrix& m, const Vector& psi,
                                const ProjectionPoint& q, double fd_step) {
  if (!q.is_hermitian())
    throw ContractViolation("kostant_souriau_residual: q not Hermitian");
  const Matrix& p = q.matrix();
  const TangentVector field = hamiltonian_field(q, m);
  const Vector at_plus = retract(q, field, fd_step).matrix() * psi;
  const Vector at_minus = retract(q, field, -fd_step).matrix() * psi;
  const Vector derivative = (at_plus - at_minus) / (2.0 * fd_step);
  const Vector nabla = derivative - field.matrix() * (p * psi);
  const Vector lhs = p * (m * psi);
  const Vector rhs = kImag * nabla + expectation(m, q) * (p * psi);
  return (lhs - rhs).norm();
}

namespace {

Vector covariant_derivative(const ProjectionPoint& q0, const Vector& v0,
                            const ProjectionPoint& q, const TangentVector& t,
                            double h) {
  // Section s(y) = y v0; vertical part of its derivative along t.
  const Vector plus = retract(q, t, h).matrix() * v0;
  const Vector minus = retract(q, t, -h).matrix() * v0;
  const Vector ds = (plus - minus) / (2.0 * h);
  (void)q0;
  return ds - t.matrix() * (q.matrix() * v0);
}

}  // namespace

double polarization_residual(const ProjectionPoint& q0, const Vector& v0,
                             const ProjectionPoint& q, const TangentVector& w,
                             PolarizationKind which, double fd_step) {
  if ((q0.matrix() * v0 - v0).norm() > 1e-10 * std::max(1.0, v0.norm()))
    throw ContractViolation("polarization_residual: v0 not in fiber of q0");
  if (w.norm() == 0.0) return 0.0;
  switch (which) {
    case PolarizationKind::kI: {
      const Vector a = covariant_derivative(q0, v0, q, w, fd_step);
      const Vector b = covariant_derivative(q0, v0, q, apply_I(w), fd_step);
      return (a + kImag * b).norm();
    }
    case PolarizationKind::kJ: {
      const Vector a = covariant_derivative(q0, v0, q, w, fd_step);
      const Vector b = covariant_derivative(q0, v0, q, apply_J(w), fd_step);
      return (a - kImag * b).norm();
    }
    case PolarizationKind::kK: {
      const TangentVector dir = TangentVector::trusted(
          w.base(), w.matrix() - apply_K(w).matrix());
      return covariant_derivative(q0, v0, q, dir, fd_step).norm();
    }
  }
  throw ContractViolation("polarization_residual: unreachable");
}

std::string AxiomVerdict::failed() const {
  std::string out;
  auto append = [&out](bool ok, const char* name) {
    if (!ok) {
      if (!out.empty()) out += ", ";
      out += name;
    }
  };
  append(identity_on_diagonal, "identity-on-diagonal");
  append(square_integrable, "square-integrability");
  append(idempotent, "convolution-idempotency");
  append(separating, "separation");
  return out;
}

AxiomVerdict check_propagator_axioms(const KernelFn& kernel,
                                     const CycleSampler& sampler,
                                     std::int64_t samples, RngState& rng) {
  const Index n = sampler.rank();
  const double mass = sampler.total_mass();
  AxiomVerdict verdict;

  // Axiom 1: identity on the diagonal.
  verdict.identity_on_diagonal = true;
  std::vector<ProjectionPoint> probes;
  for (int k = 0; k < 4; ++k) probes.push_back(sampler.draw(rng));
  for (const auto& x : probes)
    if ((kernel(x, x) - Matrix::Identity(n, n)).norm() > 1e-6)
      verdict.identity_on_diagonal = false;

  // Axiom 2: |P(x,.)| in L^2 over the cycle, estimated on samples.
  // Axiom 3: convolution idempotency with CLT bound.
  const ProjectionPoint x = probes[0];
  const ProjectionPoint y = probes[1];
  MatrixTally conv(n, n);
  double sq = 0.0;
  bool finite = true;
  RngState local = rng;
  for (std::int64_t i = 0; i < samples; ++i) {
    const ProjectionPoint z = sampler.draw(local);
    const Matrix step = kernel(z, y) * kernel(x, z);
    conv.add(step);
    const double nrm = kernel(x, z).squaredNorm();
    if (!std::isfinite(nrm)) finite = false;
    sq += nrm;
  }
  verdict.square_integrable = finite && std::isfinite(sq);
  const Matrix direct = kernel(x, y);
  const double residual = (mass * conv.mean() - direct).norm();
  const double bound =
      std::max(conv.clt_bound(mass, 4.0), 1e-9 * std::max(1.0, direct.norm()));
  verdict.idempotent = residual <= bound;

  // Axiom 4: separation probed on random fiber vectors and sampled z.
  const ProjectionPoint a = probes[2];
  const ProjectionPoint b = probes[3];
  Vector ca(n), cb(n);
  for (Index i = 0; i < n; ++i) {
    ca(i) = local.complex_normal();
    cb(i) = local.complex_normal();
  }
  double best = 0.0;
  for (int i = 0; i < 32; ++i) {
    const ProjectionPoint z = sampler.draw(local);
    best = std::max(best, (kernel(a, z) * ca - kernel(b, z) * cb).norm());
  }
  verdict.separating = best > 1e-6;
  return verdict;
}

namespace {

Matrix reconstruct_operator(const KernelFn& kernel, const ProjectionPoint& x,
                            const CycleSampler& sampler, std::int64_t samples,
                            std::uint64_t seed, unsigned workers,
                            double* bound) {
  const Index d = sampler.dim();
  const FiberFrame fx = FiberFrame::canonical(x);
  // Column j accumulates (d/n) mean_k of  frame(q_k) . K(x,q_k) . coords of
  // psi_{e_j}(x); stacking columns gives the operator on H.
  const Matrix coords = fx.columns().adjoint() * x.matrix();  // n x d
  const MatrixTally tally = parallel_accumulate(
      samples, workers, seed, MatrixTally(d, d),
      [&](MatrixTally& acc, RngState& wrng, std::int64_t) {
        const ProjectionPoint z = sampler.draw(wrng);
        const Matrix frame_z = FiberFrame::canonical(z).columns();
        acc.add(frame_z * (kernel(x, z) * coords));
      });
  if (bound) *bound = tally.clt_bound(sampler.total_mass(), 3.0);
  return sampler.total_mass() * tally.mean();
}

}  // namespace

ReconstructionResult reconstruct_point_from_propagator(
    const KernelFn& kernel, const ProjectionPoint& x,
    const CycleSampler& sampler, std::int64_t samples, RngState& rng,
    unsigned workers) {
  ReconstructionResult out;
  out.axioms = check_propagator_axioms(kernel, sampler,
                                       std::min<std::int64_t>(samples, 2000),
                                       rng);
  out.reconstructed = reconstruct_operator(kernel, x, sampler, samples,
                                           rng.seed() ^ 0x1234ABCDull, workers,
                                           &out.action_bound);
  out.action_residual = (out.reconstructed - x.matrix()).norm();

  // Delta preservation through two more reconstructed points.
  const ProjectionPoint y = sampler.draw(rng);
  const ProjectionPoint z = sampler.draw(rng);
  double by = 0.0, bz = 0.0;
  const Matrix ry = reconstruct_operator(kernel, y, sampler, samples,
                                         rng.seed() ^ 0x9876FEDCull, workers,
                                         &by);
  const Matrix rz = reconstruct_operator(kernel, z, sampler, samples,
                                         rng.seed() ^ 0x55AA55AAull, workers,
                                         &bz);
  const double n = static_cast<double>(x.rank());
  const Complex delta_rec = (rz * ry * out.reconstructed).trace() / n;
  const Complex delta_direct = three_point(x, y, z);
  out.delta_residual = std::abs(delta_rec - delta_direct);
  const double nx = out.reconstructed.norm(), ny = ry.norm(), nz = rz.norm();
  out.delta_bound =
      (out.action_bound * ny * nz + by * nx * nz + bz * nx * ny) / n;
  return out;
}

}  // namespace grasq
