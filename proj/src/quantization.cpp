#include "grasq/quantization.hpp"

#include "grasq/matrix_kernel.hpp"

namespace grasq {

Complex expectation(const Matrix& m, const ProjectionPoint& q) {
  if (m.rows() != q.dim() || m.cols() != q.dim())
    throw DimensionError("expectation: observable shape mismatch");
  return q.tau(q.matrix() * m);
}

Symbol::Symbol(Matrix representative) : rep_(std::move(representative)) {
  if (rep_.rows() != rep_.cols())
    throw DimensionError("Symbol: representative must be square");
  if (!rep_.allFinite()) throw ContractViolation("Symbol: non-finite entries");
}

Complex Symbol::operator()(const ProjectionPoint& q) const {
  return expectation(rep_, q);
}

CycleSampler CycleSampler::haar_zero_section(Index d, Index n) {
  if (n < 1 || n >= d)
    throw ContractViolation("haar_zero_section: need 1 <= n < d");
  CycleSampler s;
  s.kind_ = Kind::kHaarZeroSection;
  s.d_ = d;
  s.n_ = n;
  s.mass_ = static_cast<double>(d) / static_cast<double>(n);
  return s;
}

CycleSampler CycleSampler::fixed_quadrature(std::vector<ProjectionPoint> points,
                                            std::vector<double> weights) {
  if (points.empty() || points.size() != weights.size())
    throw ContractViolation("fixed_quadrature: points/weights mismatch");
  CycleSampler s;
  s.kind_ = Kind::kFixedQuadrature;
  s.d_ = points.front().dim();
  s.n_ = points.front().rank();
  s.mass_ = 0.0;
  for (double w : weights) s.mass_ += w;
  s.points_ = std::move(points);
  s.weights_ = std::move(weights);
  return s;
}

CycleSampler CycleSampler::group_orbit(std::vector<Matrix> skew_generators,
                                       Matrix subspace_frame, int word_length,
                                       int pool_size) {
  if (skew_generators.empty())
    throw ContractViolation("group_orbit: no generators");
  CycleSampler s;
  s.kind_ = Kind::kGroupOrbit;
  s.d_ = subspace_frame.rows();
  s.n_ = subspace_frame.cols();
  s.mass_ = static_cast<double>(s.d_) / static_cast<double>(s.n_);
  s.generators_ = std::move(skew_generators);
  s.frame_ = std::move(subspace_frame);
  s.word_length_ = word_length;
  s.pool_.reserve(pool_size);
  for (const Matrix& g : s.generators_)
    if (g.rows() != s.d_ || g.cols() != s.d_)
      throw DimensionError("group_orbit: generator shape mismatch");
  const Matrix gram = s.frame_.adjoint() * s.frame_;
  if ((gram - Matrix::Identity(s.n_, s.n_)).norm() > 1e-10)
    throw ContractViolation("group_orbit: frame not orthonormal");
  s.pool_.resize(pool_size);
  return s;
}

void CycleSampler::prepare(RngState& rng) {
  if (kind_ != Kind::kGroupOrbit) return;
  // Factor pool of exponentials of random generator multiples; words drawn
  // from the pool stay in the generated subgroup.
  for (auto& u : pool_) {
    const Index k = static_cast<Index>(rng.next_u64() % generators_.size());
    u = expm(rng.normal() * generators_[k]);
  }
}

ProjectionPoint CycleSampler::draw(RngState& rng) const {
  switch (kind_) {
    case Kind::kHaarZeroSection:
      return haar_sample(d_, n_, rng);
    case Kind::kGroupOrbit: {
      Matrix u = Matrix::Identity(d_, d_);
      for (int j = 0; j < word_length_; ++j)
        u *= pool_[rng.next_u64() % pool_.size()];
      const Matrix v = u * frame_;
      return ProjectionPoint::trusted(v * v.adjoint(), n_);
    }
    case Kind::kFixedQuadrature:
      throw ContractViolation("draw: fixed quadrature is deterministic");
  }
  throw ContractViolation("draw: unreachable");
}

namespace {

struct QuantizeTally {
  MatrixTally tally;
  bool finite = true;
  Index bad_index = -1;

  explicit QuantizeTally(Index d = 0) : tally(d, d) {}

  void combine(const QuantizeTally& o) {
    tally.combine(o.tally);
    if (finite && !o.finite) {
      finite = false;
      bad_index = o.bad_index;
    }
  }
};

QuantizeTally accumulate_fq(const SymbolFn& f, const CycleSampler& sampler,
                            std::int64_t samples, RngState& rng,
                            unsigned workers) {
  return parallel_accumulate(
      samples, workers, rng.seed(), QuantizeTally(sampler.dim()),
      [&](QuantizeTally& acc, RngState& wrng, std::int64_t i) {
        if (!acc.finite) return;
        const ProjectionPoint q = sampler.draw(wrng);
        const Complex fx = f(q);
        if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
          acc.finite = false;
          acc.bad_index = static_cast<Index>(i);
          return;
        }
        acc.tally.add(fx * q.matrix());
      });
}

}  // namespace

Matrix berezin_quantize(const SymbolFn& f, const CycleSampler& sampler,
                        std::int64_t samples, RngState& rng, unsigned workers) {
  if (samples < 1) throw ContractViolation("berezin_quantize: samples < 1");
  if (sampler.kind() == CycleSampler::Kind::kFixedQuadrature) {
    Matrix acc = Matrix::Zero(sampler.dim(), sampler.dim());
    const auto& pts = sampler.points();
    const auto& wts = sampler.weights();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Complex fx = f(pts[k]);
      if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag()))
        throw EvaluationError("berezin_quantize: non-finite symbol at node " +
                              std::to_string(k));
      acc += wts[k] * fx * pts[k].matrix();
    }
    return acc;
  }
  const QuantizeTally acc = accumulate_fq(f, sampler, samples, rng, workers);
  if (!acc.finite)
    throw EvaluationError("berezin_quantize: non-finite symbol at sample " +
                          std::to_string(acc.bad_index));
  return sampler.total_mass() * acc.tally.mean();
}

McResidual overcompleteness_residual(const CycleSampler& sampler,
                                     std::int64_t samples, RngState& rng,
                                     unsigned workers, double sigmas) {
  const Index d = sampler.dim();
  if (sampler.kind() == CycleSampler::Kind::kFixedQuadrature) {
    Matrix acc = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < sampler.points().size(); ++k)
      acc += sampler.weights()[k] * sampler.points()[k].matrix();
    return McResidual{(acc - Matrix::Identity(d, d)).norm(), 0.0};
  }
  const MatrixTally tally = parallel_accumulate(
      samples, workers, rng.seed(), MatrixTally(d, d),
      [&](MatrixTally& acc, RngState& wrng, std::int64_t) {
        acc.add(sampler.draw(wrng).matrix());
      });
  const double mass = sampler.total_mass();
  const double residual =
      (mass * tally.mean() - Matrix::Identity(d, d)).norm();
  return McResidual{residual, tally.clt_bound(mass, sigmas)};
}

DualityResidual duality_residual(const Matrix& a, const SymbolFn& f,
                                 const CycleSampler& sampler,
                                 std::int64_t samples, RngState& rng,
                                 unsigned workers, double sigmas) {
  const double n = static_cast<double>(sampler.rank());
  const double mass = sampler.total_mass();

  struct Pair {
    MatrixTally fq;
    ScalarTally af;
    explicit Pair(Index d = 0) : fq(d, d) {}
    void combine(const Pair& o) {
      fq.combine(o.fq);
      af.combine(o.af);
    }
  };
  auto run = [&](std::uint64_t seed) {
    return parallel_accumulate(
        samples, workers, seed, Pair(sampler.dim()),
        [&](Pair& acc, RngState& wrng, std::int64_t) {
          const ProjectionPoint q = sampler.draw(wrng);
          const Complex fx = f(q);
          acc.fq.add(fx * q.matrix());
          acc.af.add(expectation(a, q) * fx);
        });
  };

  const Pair first = run(rng.seed());
  const Complex lhs1 = (a * (mass * first.fq.mean())).trace() / n;
  const Complex rhs1 = mass * first.af.mean();

  const Pair second = run(rng.seed() ^ 0xD6E8FEB86659FD93ull);
  const Complex rhs2 = mass * second.af.mean();

  DualityResidual out;
  out.same_sample = std::abs(lhs1 - rhs1);
  out.independent = std::abs(lhs1 - rhs2);
  const double b1 = first.af.clt_bound(mass, sigmas);
  const double b2 = second.af.clt_bound(mass, sigmas);
  out.bound = std::sqrt(b1 * b1 + b2 * b2);
  return out;
}

double adjointness_residual(const Matrix& t, const SymbolFn& f,
                            const CycleSampler& sampler, std::int64_t samples,
                            RngState& rng, unsigned workers) {
  const double n = static_cast<double>(sampler.rank());
  const double mass = sampler.total_mass();
  struct Pair {
    MatrixTally fq;
    ScalarTally tf;
    explicit Pair(Index d = 0) : fq(d, d) {}
    void combine(const Pair& o) {
      fq.combine(o.fq);
      tf.combine(o.tf);
    }
  };
  const Pair acc = parallel_accumulate(
      samples, workers, rng.seed(), Pair(sampler.dim()),
      [&](Pair& a, RngState& wrng, std::int64_t) {
        const ProjectionPoint q = sampler.draw(wrng);
        const Complex fx = f(q);
        a.fq.add(fx * q.matrix());
        a.tf.add(std::conj(expectation(t, q)) * fx);
      });
  const Complex lhs = (t.adjoint() * (mass * acc.fq.mean())).trace() / n;
  const Complex rhs = mass * acc.tf.mean();
  return std::abs(lhs - rhs);
}

Symbol star_expectation(const Symbol& f, const Symbol& g) {
  return Symbol(f.representative() * g.representative());
}

StarQResult star_q(const Symbol& f, const Symbol& g,
                   const CycleSampler& sampler, std::int64_t samples,
                   RngState& rng, unsigned workers) {
  const Index d = sampler.dim();
  const double n = static_cast<double>(sampler.rank());
  const double mass = sampler.total_mass();

  // One pass accumulates Q_f, Q_g and the sampled matrix of the map
  // S -> Q_{<S>} on the matrix-unit span: L = (mass/n) E[vec(q) vec(q^T)^T].
  struct Acc {
    MatrixTally qf, qg, l;
    explicit Acc(Index dd = 0)
        : qf(dd, dd), qg(dd, dd), l(dd * dd, dd * dd) {}
    void combine(const Acc& o) {
      qf.combine(o.qf);
      qg.combine(o.qg);
      l.combine(o.l);
    }
  };
  const Acc acc = parallel_accumulate(
      samples, workers, rng.seed(), Acc(d),
      [&](Acc& a, RngState& wrng, std::int64_t) {
        const ProjectionPoint q = sampler.draw(wrng);
        const Matrix& p = q.matrix();
        a.qf.add(f(q) * p);
        a.qg.add(g(q) * p);
        const Vector vq = p.reshaped();
        const Vector vqt = p.transpose().reshaped();
        a.l.add(vq * vqt.transpose());
      });
  const Matrix qf = mass * acc.qf.mean();
  const Matrix qg = mass * acc.qg.mean();
  const Matrix target = qf * qg;
  const Matrix l = (mass / n) * acc.l.mean();

  Eigen::JacobiSVD<Matrix> svd(l);
  const auto& sv = svd.singularValues();
  const double cond =
      sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                              : std::numeric_limits<double>::infinity();
  if (cond > 1e6)
    throw ConditioningError("star_q: symbol-span pullback ill-conditioned",
                            cond);

  // Ridge-damped normal equations.
  const double ridge = 1e-10 * sv(0);
  const Matrix lhs =
      l.adjoint() * l + ridge * ridge * Matrix::Identity(d * d, d * d);
  const Vector rhs = l.adjoint() * target.reshaped();
  const Vector sol = lhs.ldlt().solve(rhs);
  Matrix rep(d, d);
  rep = sol.reshaped(d, d);

  // First-order propagation of the sampling noise through the solve.
  const double bf = acc.qf.clt_bound(mass, 3.0);
  const double bg = acc.qg.clt_bound(mass, 3.0);
  const double bl = acc.l.clt_bound(mass / n, 3.0);
  const double dtarget = bf * qg.norm() + bg * qf.norm() + bf * bg;
  const double noise =
      (dtarget + bl * rep.norm()) / sv(sv.size() - 1);
  return StarQResult{Symbol(rep), cond, noise};
}

OrbitResult orbit_overcompleteness(const std::vector<Matrix>& skew_generators,
                                   const Matrix& subspace_frame,
                                   std::int64_t samples, RngState& rng,
                                   unsigned workers) {
  CycleSampler sampler = CycleSampler::group_orbit(skew_generators,
                                                   subspace_frame);
  sampler.prepare(rng);
  const Index d = sampler.dim();
  const MatrixTally tally = parallel_accumulate(
      samples, workers, rng.seed() ^ 0xA5A5A5A5A5A5A5A5ull, MatrixTally(d, d),
      [&](MatrixTally& acc, RngState& wrng, std::int64_t) {
        acc.add(sampler.draw(wrng).matrix());
      });
  const double mass = sampler.total_mass();
  OrbitResult out;
  out.residual = (mass * tally.mean() - Matrix::Identity(d, d)).norm();
  out.bound = tally.clt_bound(mass, 3.0);
  const double ten_sigma = tally.clt_bound(mass, 10.0);
  out.verdict = out.residual > ten_sigma ? OrbitVerdict::kReducible
                                         : OrbitVerdict::kConsistent;
  return out;
}

double symbol_span_residual(Index d, Index n, RngState& rng,
                            int extra_samples) {
  const Index dim = d * d;
  const Index cols = dim + extra_samples;
  Matrix stack(dim, cols);
  for (Index k = 0; k < cols; ++k) {
    ProjectionPoint q = haar_sample(d, n, rng);
    if (k % 2 == 1) {
      // Mix in cotangent points so the span check covers all of T*G.
      const auto dec = decompose_cotangent(q);
      Matrix f = gaussian_matrix(rng, d, d);
      const Matrix& qv = dec.base_orthogonal.matrix();
      const Matrix id = Matrix::Identity(d, d);
      f = (qv * f * (id - qv)).eval();
      if (f.norm() > 0.5) f *= 0.5 / f.norm();
      q = compose_cotangent(dec.base_orthogonal, f);
    }
    stack.col(k) = q.matrix().reshaped();
  }
  Eigen::JacobiSVD<Matrix> svd(stack);
  const auto& sv = svd.singularValues();
  return sv(dim - 1) / sv(0);
}

}  // namespace grasq
