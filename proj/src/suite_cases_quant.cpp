#include "grasq/matrix_kernel.hpp"
#include "grasq/quantization.hpp"
#include "grasq/symplectic.hpp"
#include "suite_cases.hpp"

namespace grasq::detail {

namespace {

std::int64_t clamp_samples(const SuiteConfig& cfg, std::int64_t cap) {
  return std::min<std::int64_t>(cfg.samples, cap);
}

/// Skew-Hermitian basis of u(d): i E_kk, (E_jk - E_kj), i(E_jk + E_kj).
std::vector<Matrix> unitary_algebra_basis(Index d) {
  std::vector<Matrix> gens;
  for (Index k = 0; k < d; ++k) {
    Matrix g = Matrix::Zero(d, d);
    g(k, k) = kImag;
    gens.push_back(g);
  }
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      Matrix g = Matrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = -1.0;
      gens.push_back(g);
      Matrix h = Matrix::Zero(d, d);
      h(j, k) = kImag;
      h(k, j) = kImag;
      gens.push_back(h);
    }
  }
  return gens;
}

}  // namespace

void register_quantization_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"quantization", std::move(name), std::move(anchor),
                   std::move(fn)});
  };

  add("expectation-unit", "expectation-map", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "expectation-unit"));
    double worst = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      const Matrix id = Matrix::Identity(d, d);
      for (int t = 0; t < 100; ++t) {
        const ProjectionPoint q = haar_sample(d, n, rng);
        worst = std::max(worst, std::abs(expectation(id, q) - 1.0));
      }
    }
    return CaseOutcome{worst, cfg.tol.identity};
  });
  add("expectation-operator-bound", "expectation-map",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "expectation-operator-bound"));
        double worst = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          const Matrix m = gaussian_matrix(rng, d, d);
          const double opnorm = m.operatorNorm();
          for (int t = 0; t < 100; ++t) {
            const ProjectionPoint q = haar_sample(d, n, rng);
            worst =
                std::max(worst, std::abs(expectation(m, q)) - opnorm);
          }
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("expectation-haar-mean", "schur-identity", [](const SuiteConfig& cfg) {
    // E[<M>(q)] = tau(E[q] M) = Tr(M)/d.
    RngState rng(case_seed(cfg.seed, "expectation-haar-mean"));
    double excess = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      const Matrix m = gaussian_matrix(rng, d, d);
      ScalarTally tally;
      RngState local = RngState::for_worker(rng.next_u64(), 0);
      const std::int64_t trials = clamp_samples(cfg, 200000);
      for (std::int64_t i = 0; i < trials; ++i)
        tally.add(expectation(m, haar_sample(d, n, local)));
      const double residual =
          std::abs(tally.mean() - m.trace() / static_cast<double>(d));
      excess = std::max(
          residual - tally.clt_bound(1.0, cfg.tol.mc_sigmas), excess);
    }
    return CaseOutcome{excess, 0.0};
  });
  add("overcompleteness", "schur-identity", [](const SuiteConfig& cfg) {
    double excess = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      RngState rng(case_seed(cfg.seed, "overcompleteness") ^ (d * 37 + n));
      const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
      const McResidual r = overcompleteness_residual(
          sampler, cfg.samples, rng, cfg.workers, cfg.tol.mc_sigmas);
      excess = std::max(excess, r.residual - r.bound);
    }
    return CaseOutcome{excess, 0.0};
  });
  add("overcompleteness-single-sample", "schur-identity",
      [](const SuiteConfig& cfg) {
        // One sample cannot resolve the identity for n < d.
        RngState rng(case_seed(cfg.seed, "overcompleteness-single-sample"));
        const CycleSampler sampler = CycleSampler::haar_zero_section(2, 1);
        const McResidual r =
            overcompleteness_residual(sampler, 1, rng, 1, 3.0);
        return CaseOutcome{-r.residual, -0.1};
      });
  add("berezin-unit", "pointwise-quantization", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "berezin-unit"));
    const CycleSampler sampler = CycleSampler::haar_zero_section(2, 1);
    const std::int64_t n = clamp_samples(cfg, 1000000);
    const Matrix q1 = berezin_quantize(
        [](const ProjectionPoint&) { return Complex(1.0, 0.0); }, sampler, n,
        rng, cfg.workers);
    const McResidual oc =
        overcompleteness_residual(sampler, n, rng, cfg.workers, 3.0);
    return CaseOutcome{(q1 - Matrix::Identity(2, 2)).norm(),
                       std::max(0.012, oc.bound)};
  });
  add("berezin-linearity", "pointwise-quantization",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "berezin-linearity"));
        const Index d = 3, n = 1;
        const Matrix a = gaussian_matrix(rng, d, d);
        const Matrix b = gaussian_matrix(rng, d, d);
        const Symbol fa{a}, fb{b}, fab{a + b};
        const std::int64_t trials = clamp_samples(cfg, 20000);
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        RngState r1 = rng, r2 = rng, r3 = rng;  // identical streams
        const Matrix qa = berezin_quantize(
            [&](const ProjectionPoint& q) { return fa(q); }, sampler, trials,
            r1, cfg.workers);
        const Matrix qb = berezin_quantize(
            [&](const ProjectionPoint& q) { return fb(q); }, sampler, trials,
            r2, cfg.workers);
        const Matrix qab = berezin_quantize(
            [&](const ProjectionPoint& q) { return fab(q); }, sampler, trials,
            r3, cfg.workers);
        return CaseOutcome{(qab - qa - qb).norm(), 1e-10};
      });
  add("berezin-moment-target", "pointwise-quantization",
      [](const SuiteConfig& cfg) {
        // d=2, n=1, f = <A> with A = diag(1,0): Q_f = (A + Tr(A) 1)/3.
        RngState rng(case_seed(cfg.seed, "berezin-moment-target"));
        Matrix a(2, 2);
        a << 1, 0, 0, 0;
        const Symbol f{a};
        const CycleSampler sampler = CycleSampler::haar_zero_section(2, 1);
        const std::int64_t n = clamp_samples(cfg, 1000000);
        const Matrix q = berezin_quantize(
            [&](const ProjectionPoint& p) { return f(p); }, sampler, n, rng,
            cfg.workers);
        Matrix target(2, 2);
        target << 2.0 / 3.0, 0, 0, 1.0 / 3.0;
        const double bound =
            n >= 1000000 ? 0.01 : 0.01 * std::sqrt(1e6 / double(n));
        return CaseOutcome{(q - target).norm(), bound};
      });
  add("duality", "quantization-duality", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "duality"));
    double same = 0.0, indep_excess = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      const Matrix a = gaussian_matrix(rng, d, d);
      const Matrix m = gaussian_matrix(rng, d, d);
      const Symbol f{m};
      const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
      const DualityResidual r = duality_residual(
          a, [&](const ProjectionPoint& q) { return f(q); }, sampler,
          clamp_samples(cfg, 100000), rng, cfg.workers, cfg.tol.mc_sigmas);
      same = std::max(same, r.same_sample);
      indep_excess = std::max(indep_excess, r.independent - r.bound);
    }
    return CaseOutcome{std::max(same, indep_excess), 1e-12};
  });
  add("duality-total-mass", "dimension-volume", [](const SuiteConfig& cfg) {
    // A = 1, f = 1: both sides equal the cycle mass d/n = dim H / n.
    RngState rng(case_seed(cfg.seed, "duality-total-mass"));
    double worst = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
      const Matrix id = Matrix::Identity(d, d);
      const std::int64_t trials = clamp_samples(cfg, 20000);
      const Matrix q1 = berezin_quantize(
          [](const ProjectionPoint&) { return Complex(1.0, 0.0); }, sampler,
          trials, rng, cfg.workers);
      const Complex lhs = (id * q1).trace() / double(n);
      worst = std::max(worst, std::abs(lhs - double(d) / double(n)));
    }
    return CaseOutcome{worst, 1e-10};
  });
  add("adjointness", "adjointness", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "adjointness"));
    double worst = 0.0;
    const Index d = 3, n = 1;
    const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
    for (int t = 0; t < 5; ++t) {
      const Matrix tt = gaussian_matrix(rng, d, d);
      const Symbol f{gaussian_matrix(rng, d, d)};
      worst = std::max(
          worst, adjointness_residual(
                     tt, [&](const ProjectionPoint& q) { return f(q); },
                     sampler, clamp_samples(cfg, 50000), rng, cfg.workers));
    }
    return CaseOutcome{worst, 1e-12};
  });
  add("adjointness-conjugate-symmetry", "adjointness",
      [](const SuiteConfig& cfg) {
        // <(<T>), <S>>_{L2} = conj(<(<S>), <T>>_{L2}) on shared samples.
        RngState rng(case_seed(cfg.seed, "adjointness-conjugate-symmetry"));
        const Index d = 3, n = 1;
        const Matrix t = gaussian_matrix(rng, d, d);
        const Matrix s = gaussian_matrix(rng, d, d);
        const std::int64_t trials = clamp_samples(cfg, 50000);
        RngState local = RngState::for_worker(rng.next_u64(), 0);
        Complex forward = 0.0, backward = 0.0;
        for (std::int64_t i = 0; i < trials; ++i) {
          const ProjectionPoint q = haar_sample(d, n, local);
          const Complex et = expectation(t, q);
          const Complex es = expectation(s, q);
          forward += std::conj(et) * es;
          backward += std::conj(es) * et;
        }
        return CaseOutcome{std::abs(forward - std::conj(backward)), 1e-12};
      });
  add("star-unit", "star-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "star-unit"));
    const Index d = 3;
    const Symbol f{gaussian_matrix(rng, d, d)};
    const Symbol one{Matrix::Identity(d, d)};
    const Symbol fu = star_expectation(f, one);
    return CaseOutcome{(fu.representative() - f.representative()).norm(),
                       1e-14};
  });
  add("star-commutator-bracket", "star-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "star-commutator-bracket"));
    double worst = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      for (int t = 0; t < 50; ++t) {
        ProjectionPoint q = haar_sample(d, n, rng);
        Matrix m = gaussian_matrix(rng, d, d);
        m /= m.norm();
        Matrix mm = gaussian_matrix(rng, d, d);
        mm /= mm.norm();
        const Symbol f{m}, g{mm};
        const Complex lhs =
            star_expectation(f, g)(q) - star_expectation(g, f)(q);
        const Complex rhs = kImag * poisson_bracket(m, mm, q);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    return CaseOutcome{worst, cfg.tol.identity};
  });
  add("star-pauli-value", "star-product", [](const SuiteConfig& cfg) {
    (void)cfg;
    Matrix sx(2, 2), sy(2, 2), q(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    q << 1, 0, 0, 0;
    const ProjectionPoint p(q, 1);
    const Symbol fx{sx}, fy{sy};
    const Complex val =
        star_expectation(fx, fy)(p) - star_expectation(fy, fx)(p);
    return CaseOutcome{std::abs(val - Complex(0.0, 2.0)), 1e-12};
  });
  add("star-q-unit", "star-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "star-q-unit"));
    const CycleSampler sampler = CycleSampler::haar_zero_section(2, 1);
    const Symbol one{Matrix::Identity(2, 2)};
    const StarQResult r = star_q(one, one, sampler, clamp_samples(cfg, 200000),
                                 rng, cfg.workers);
    return CaseOutcome{
        (r.symbol.representative() - Matrix::Identity(2, 2)).norm(),
        r.noise_bound};
  });
  add("star-q-commutator", "star-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "star-q-commutator"));
    const Index d = 2;
    const CycleSampler sampler = CycleSampler::haar_zero_section(d, 1);
    Matrix m = gaussian_hermitian(rng, d);
    Matrix nn = gaussian_hermitian(rng, d);
    const Symbol f{m}, g{nn};
    const std::int64_t trials = clamp_samples(cfg, 200000);
    const StarQResult fg = star_q(f, g, sampler, trials, rng, cfg.workers);
    const StarQResult gf = star_q(g, f, sampler, trials, rng, cfg.workers);
    const ProjectionPoint q = haar_sample(d, 1, rng);
    const Complex lhs = fg.symbol(q) - gf.symbol(q);
    const Complex rhs = kImag * poisson_bracket(m, nn, q);
    return CaseOutcome{std::abs(lhs - rhs),
                       2.0 * (fg.noise_bound + gf.noise_bound)};
  });
  add("star-q-associativity", "star-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "star-q-associativity"));
    const Index d = 2;
    const CycleSampler sampler = CycleSampler::haar_zero_section(d, 1);
    const Symbol f{gaussian_hermitian(rng, d)};
    const Symbol g{gaussian_hermitian(rng, d)};
    const Symbol h{gaussian_hermitian(rng, d)};
    const std::int64_t trials = clamp_samples(cfg, 200000);
    const StarQResult fg = star_q(f, g, sampler, trials, rng, cfg.workers);
    const StarQResult fg_h =
        star_q(fg.symbol, h, sampler, trials, rng, cfg.workers);
    const StarQResult gh = star_q(g, h, sampler, trials, rng, cfg.workers);
    const StarQResult f_gh =
        star_q(f, gh.symbol, sampler, trials, rng, cfg.workers);
    const double residual =
        (fg_h.symbol.representative() - f_gh.symbol.representative()).norm();
    const double bound = 3.0 * (fg.noise_bound + fg_h.noise_bound +
                                gh.noise_bound + f_gh.noise_bound);
    return CaseOutcome{residual, bound};
  });
  add("positivity-transport", "pointwise-quantization",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "positivity-transport"));
        const Index d = 3, n = 1;
        const Matrix a = gaussian_matrix(rng, d, d);
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        // f >= 0 on the cycle.
        auto f = [&](const ProjectionPoint& q) {
          return Complex(std::norm(expectation(a, q)), 0.0);
        };
        const std::int64_t trials = clamp_samples(cfg, 200000);
        const Matrix qf =
            berezin_quantize(f, sampler, trials, rng, cfg.workers);
        const Matrix herm = 0.5 * (qf + qf.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
        const double floor = eig.eigenvalues()(0);
        // Eigenvalue floor >= -(3 sigma MC error).
        const double bound = 30.0 / std::sqrt(double(trials));
        return CaseOutcome{-floor, bound};
      });
  add("hermiticity", "pointwise-quantization", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "hermiticity"));
    const Index d = 3, n = 1;
    const Matrix a = gaussian_hermitian(rng, d);
    const Symbol f{a};  // real-valued on the zero section
    const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
    const Matrix qf = berezin_quantize(
        [&](const ProjectionPoint& q) { return f(q); }, sampler,
        clamp_samples(cfg, 100000), rng, cfg.workers);
    return CaseOutcome{(qf - qf.adjoint()).norm(), 1e-12};
  });
  add("symbol-span", "expectation-map", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "symbol-span"));
    double min_sv = std::numeric_limits<double>::max();
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs()))
      min_sv = std::min(min_sv, symbol_span_residual(d, n, rng));
    return CaseOutcome{-min_sv, -1e-4};
  });
  add("orbit-full-unitary-basis", "group-orbit", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "orbit-full-unitary-basis"));
    const Index d = 3, n = 1;
    Matrix frame = Matrix::Zero(d, n);
    frame(0, 0) = 1.0;
    const OrbitResult r =
        orbit_overcompleteness(unitary_algebra_basis(d), frame,
                               clamp_samples(cfg, 100000), rng, cfg.workers);
    const double verdict_ok =
        r.verdict == OrbitVerdict::kConsistent ? 0.0 : 1.0;
    return CaseOutcome{std::max(r.residual - r.bound, verdict_ok), 0.0};
  });
  add("orbit-spin-half", "group-orbit", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "orbit-spin-half"));
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    sz << 1, 0, 0, -1;
    Matrix frame(2, 1);
    frame << 1, 0;
    const OrbitResult r = orbit_overcompleteness(
        {kImag * sx, kImag * sy, kImag * sz}, frame,
        clamp_samples(cfg, 200000), rng, cfg.workers);
    const double verdict_ok =
        r.verdict == OrbitVerdict::kConsistent ? 0.0 : 1.0;
    return CaseOutcome{std::max(r.residual - std::max(r.bound, 0.012),
                                verdict_ok),
                       0.0};
  });
  add("orbit-reducible-verdict", "group-orbit", [](const SuiteConfig& cfg) {
    // Block-diagonal generators with the frame inside one block: the Schur
    // converse must flag reducibility, not throw.
    RngState rng(case_seed(cfg.seed, "orbit-reducible-verdict"));
    const Index d = 4;
    std::vector<Matrix> gens;
    for (const Matrix& g : unitary_algebra_basis(2)) {
      Matrix big = Matrix::Zero(d, d);
      big.topLeftCorner(2, 2) = g;
      gens.push_back(big);
      Matrix big2 = Matrix::Zero(d, d);
      big2.bottomRightCorner(2, 2) = g;
      gens.push_back(big2);
    }
    Matrix frame = Matrix::Zero(d, 1);
    frame(0, 0) = 1.0;
    const OrbitResult r = orbit_overcompleteness(
        gens, frame, clamp_samples(cfg, 20000), rng, cfg.workers);
    return CaseOutcome{r.verdict == OrbitVerdict::kReducible ? 0.0 : 1.0,
                       0.5};
  });
}

}  // namespace grasq::detail
