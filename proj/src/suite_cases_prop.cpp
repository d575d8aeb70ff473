#include <algorithm>

#include "grasq/matrix_kernel.hpp"
#include "grasq/sphere_model.hpp"
#include "grasq/symplectic.hpp"
#include "grasq/transport.hpp"
#include "suite_cases.hpp"

namespace grasq::detail {

namespace {

ProjectionPoint random_point(Index d, Index n, RngState& rng,
                             double fiber_norm) {
  ProjectionPoint q = haar_sample(d, n, rng);
  if (fiber_norm > 0.0) {
    const Matrix& qv = q.matrix();
    const Matrix id = Matrix::Identity(d, d);
    Matrix f = qv * gaussian_matrix(rng, d, d) * (id - qv);
    const double norm = f.norm();
    if (norm > 0) f *= fiber_norm / norm;
    q = compose_cotangent(q, f);
  }
  return q;
}

TangentVector unit_tangent(const ProjectionPoint& q, RngState& rng) {
  TangentVector v = random_tangent(q, rng);
  const double norm = v.norm();
  return TangentVector::trusted(q, v.matrix() / (norm > 0 ? norm : 1.0));
}

std::int64_t clamp_samples(const SuiteConfig& cfg, std::int64_t cap) {
  return std::min<std::int64_t>(cfg.samples, cap);
}

PathSpec octant_loop(int steps) {
  std::vector<ProjectionPoint> waypoints = {
      sphere_projection(SpherePoint(0, 0, 1)),
      sphere_projection(SpherePoint(1, 0, 0)),
      sphere_projection(SpherePoint(0, 1, 0)),
      sphere_projection(SpherePoint(0, 0, 1))};
  return PathSpec::zero_section_geodesics(std::move(waypoints), steps);
}

}  // namespace

void register_propagator_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"propagator", std::move(name), std::move(anchor),
                   std::move(fn)});
  };

  add("diagonal-identity", "propagator-section", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "diagonal-identity"));
    double worst = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      for (int t = 0; t < 50; ++t) {
        const ProjectionPoint q =
            random_point(d, n, rng, t % 2 ? 0.8 : 0.0);
        worst = std::max(worst, (propagate(q, q).matrix() -
                                 Matrix::Identity(n, n))
                                    .norm());
      }
    }
    return CaseOutcome{worst, 1e-13};
  });
  add("frame-independence", "propagator-section", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "frame-independence"));
    double worst = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      for (int t = 0; t < 20; ++t) {
        const ProjectionPoint q1 = random_point(d, n, rng, 0.3);
        const ProjectionPoint q2 = random_point(d, n, rng, 0.3);
        const FiberFrame f1 = FiberFrame::canonical(q1);
        const FiberFrame f2 = FiberFrame::canonical(q2);
        const Matrix w1 = random_unitary(rng, n);
        const Matrix w2 = random_unitary(rng, n);
        const FiberFrame g1(q1, f1.columns() * w1);
        const FiberFrame g2(q2, f2.columns() * w2);
        const Matrix base = propagate_in_frames(f1, f2).matrix();
        const Matrix alt = propagate_in_frames(g1, g2).matrix();
        worst = std::max(worst,
                         (alt - w2.adjoint() * base * w1).norm());
      }
    }
    return CaseOutcome{worst, 1e-12};
  });
  add("three-point-cyclic", "three-point-function",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "three-point-cyclic"));
        double worst = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          for (int t = 0; t < 50; ++t) {
            const ProjectionPoint a = random_point(d, n, rng, 0.5);
            const ProjectionPoint b = random_point(d, n, rng, 0.5);
            const ProjectionPoint c = random_point(d, n, rng, 0.5);
            const Complex d123 = three_point(a, b, c);
            worst = std::max(worst, std::abs(d123 - three_point(b, c, a)));
            worst = std::max(worst, std::abs(d123 - three_point(c, a, b)));
          }
        }
        return CaseOutcome{worst, 1e-14};
      });
  add("three-point-diagonal", "three-point-function",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "three-point-diagonal"));
        double worst = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          const ProjectionPoint q = random_point(d, n, rng, 0.5);
          worst = std::max(worst, std::abs(three_point(q, q, q) - 1.0));
        }
        return CaseOutcome{worst, 1e-13};
      });
  add("three-point-propagator-trace", "three-point-function",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "three-point-propagator-trace"));
        double worst = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          for (int t = 0; t < 25; ++t) {
            const ProjectionPoint a = random_point(d, n, rng, 0.4);
            const ProjectionPoint b = random_point(d, n, rng, 0.4);
            const ProjectionPoint c = random_point(d, n, rng, 0.4);
            worst = std::max(
                worst, std::abs(three_point(a, b, c) -
                                three_point_via_propagators(a, b, c)));
          }
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("delta-holomorphy", "three-point-function", [](const SuiteConfig& cfg) {
    // Cauchy-Riemann residual of Delta in its first slot.
    RngState rng(case_seed(cfg.seed, "delta-holomorphy"));
    double worst = 0.0;
    const double h = cfg.tol.fd_step;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      for (int t = 0; t < 10; ++t) {
        const ProjectionPoint a = random_point(d, n, rng, 0.3);
        const ProjectionPoint b = random_point(d, n, rng, 0.3);
        const ProjectionPoint c = random_point(d, n, rng, 0.3);
        const TangentVector w = unit_tangent(a, rng);
        auto slot = [&](const TangentVector& dir, double s) {
          return three_point(retract(a, dir, s), b, c);
        };
        const Complex dw = (slot(w, h) - slot(w, -h)) / (2.0 * h);
        const TangentVector iw = apply_I(w);
        const Complex diw = (slot(iw, h) - slot(iw, -h)) / (2.0 * h);
        worst = std::max(worst, std::abs(diw - kImag * dw));
      }
    }
    return CaseOutcome{worst, 1e-5};
  });
  add("curvature-identity", "curvature-trace", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "curvature-identity"));
    double worst = 0.0;
    const double eps = 1e-4;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      for (int t = 0; t < 100; ++t) {
        const ProjectionPoint q = random_point(d, n, rng, t % 2 ? 0.5 : 0.0);
        const TangentVector u = unit_tangent(q, rng);
        const TangentVector v = unit_tangent(q, rng);
        worst = std::max(worst,
                         std::abs(curvature_from_three_point(q, u, v, eps) -
                                  omega(u, v)));
      }
    }
    return CaseOutcome{worst, 1e-6};
  });
  add("curvature-first-order", "curvature-trace", [](const SuiteConfig& cfg) {
    // Halving eps should cut the defect by ~2 (median over draws).
    RngState rng(case_seed(cfg.seed, "curvature-first-order"));
    std::vector<double> ratios;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      for (int t = 0; t < 40; ++t) {
        const ProjectionPoint q = random_point(d, n, rng, 0.5);
        const TangentVector u = unit_tangent(q, rng);
        const TangentVector v = unit_tangent(q, rng);
        const Complex w = omega(u, v);
        const double e1 =
            std::abs(curvature_from_three_point(q, u, v, 2e-3) - w);
        const double e2 =
            std::abs(curvature_from_three_point(q, u, v, 1e-3) - w);
        if (e1 > 1e-10 && e2 > 1e-12) ratios.push_back(e1 / e2);
      }
    }
    std::sort(ratios.begin(), ratios.end());
    const double median = ratios.empty() ? 0.0 : ratios[ratios.size() / 2];
    // residual = shortfall below first-order rate 1.8
    return CaseOutcome{1.8 - median, 0.0};
  });
  add("convolution-idempotency", "convolution-idempotent",
      [](const SuiteConfig& cfg) {
        double excess = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          RngState rng(case_seed(cfg.seed, "convolution-idempotency") ^
                       (d * 41 + n));
          const ProjectionPoint q1 = haar_sample(d, n, rng);
          const ProjectionPoint q2 = haar_sample(d, n, rng);
          const McResidual r = convolution_idempotency_residual(
              q1, q2, cfg.samples, rng, cfg.workers, cfg.tol.mc_sigmas);
          excess = std::max(excess, r.residual - r.bound);
        }
        return CaseOutcome{excess, 0.0};
      });
  add("convolution-idempotency-continued", "convolution-idempotent",
      [](const SuiteConfig& cfg) {
        double excess = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          RngState rng(case_seed(cfg.seed,
                                 "convolution-idempotency-continued") ^
                       (d * 43 + n));
          const ProjectionPoint q1 = random_point(d, n, rng, 0.5);
          const ProjectionPoint q2 = random_point(d, n, rng, 0.5);
          const McResidual r = convolution_idempotency_residual(
              q1, q2, cfg.samples, rng, cfg.workers, cfg.tol.mc_sigmas);
          excess = std::max(excess, r.residual - r.bound);
        }
        return CaseOutcome{excess, 0.0};
      });
  add("convolution-mc-rate", "convolution-idempotent",
      [](const SuiteConfig& cfg) {
        // Residual scales like N^{-1/2}: 100 vs 10000 samples ~ factor 10.
        RngState rng(case_seed(cfg.seed, "convolution-mc-rate"));
        const ProjectionPoint q1 = haar_sample(2, 1, rng);
        const ProjectionPoint q2 = haar_sample(2, 1, rng);
        RngState r1 = rng, r2 = rng;
        const double small =
            convolution_idempotency_residual(q1, q2, 100, r1, 1).residual;
        const double large =
            convolution_idempotency_residual(q1, q2, 10000, r2, 1).residual;
        const double ratio = small / std::max(large, 1e-300);
        const double off = ratio < 10.0 ? 10.0 / ratio : ratio / 10.0;
        return CaseOutcome{off, 3.0};
      });
  add("probability-density", "probability-density",
      [](const SuiteConfig& cfg) {
        double excess = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          RngState rng(case_seed(cfg.seed, "probability-density") ^
                       (d * 47 + n));
          const ProjectionPoint x = haar_sample(d, n, rng);
          const McResidual r = probability_density_residual(
              x, clamp_samples(cfg, 200000), rng, cfg.workers);
          excess = std::max(excess, r.residual - r.bound);
        }
        return CaseOutcome{excess, 0.0};
      });
  add("coherent-reconstruction", "unitary-equivalence",
      [](const SuiteConfig& cfg) {
        double excess = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          RngState rng(case_seed(cfg.seed, "coherent-reconstruction") ^
                       (d * 53 + n));
          Vector psi = Vector::Zero(d);
          for (Index i = 0; i < d; ++i) psi(i) = rng.complex_normal();
          const SectionSample section = coherent_section(psi);
          const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
          const VectorTally tally = parallel_accumulate(
              cfg.samples, cfg.workers, rng.seed(), VectorTally(d),
              [&](VectorTally& acc, RngState& wrng, std::int64_t) {
                acc.add(section(sampler.draw(wrng)));
              });
          const double mass = double(d) / double(n);
          const double residual = (mass * tally.mean() - psi).norm();
          excess = std::max(
              excess, residual - tally.clt_bound(mass, cfg.tol.mc_sigmas));
        }
        return CaseOutcome{excess, 0.0};
      });
  add("inner-product-preservation", "unitary-equivalence",
      [](const SuiteConfig& cfg) {
        double excess = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          RngState rng(case_seed(cfg.seed, "inner-product-preservation") ^
                       (d * 59 + n));
          Vector psi1 = Vector::Zero(d), psi2 = Vector::Zero(d);
          for (Index i = 0; i < d; ++i) {
            psi1(i) = rng.complex_normal();
            psi2(i) = rng.complex_normal();
          }
          const ScalarTally tally = parallel_accumulate(
              cfg.samples, cfg.workers, rng.seed(), ScalarTally{},
              [&](ScalarTally& acc, RngState& wrng, std::int64_t) {
                const Matrix q = haar_sample(d, n, wrng).matrix();
                acc.add(((q * psi1).adjoint() * (q * psi2))(0, 0));
              });
          const double mass = double(d) / double(n);
          const Complex target = (psi1.adjoint() * psi2)(0, 0);
          const double residual = std::abs(mass * tally.mean() - target);
          excess = std::max(
              excess, residual - tally.clt_bound(mass, cfg.tol.mc_sigmas));
        }
        return CaseOutcome{excess, 0.0};
      });
  add("reproducing-fixed-point", "hilbert-space-sections",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reproducing-fixed-point"));
        const Index d = 2, n = 1;
        Vector psi(d);
        psi << Complex(0.6, 0.1), Complex(-0.3, 0.7);
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        const std::int64_t trials = clamp_samples(cfg, 200000);
        const Vector psi1 = section_to_vector(coherent_section(psi), sampler,
                                              trials, rng, cfg.workers);
        // Coherent sections are fixed points of the reproducing projection.
        const double residual = (psi1 - psi).norm();
        const double bound =
            cfg.tol.mc_sigmas * 4.0 / std::sqrt(double(trials));
        return CaseOutcome{residual, bound};
      });
  add("reproducing-idempotent", "hilbert-space-sections",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reproducing-idempotent"));
        const Index d = 2, n = 1;
        Vector psi(d);
        psi << Complex(1.0, 0.0), Complex(0.2, -0.5);
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        const std::int64_t trials = clamp_samples(cfg, 200000);
        const SectionSample once = reproducing_projection(
            coherent_section(psi), sampler, trials, rng, cfg.workers);
        const SectionSample twice =
            reproducing_projection(once, sampler, trials, rng, cfg.workers);
        // Compare the underlying vectors through reconstruction.
        const Vector v1 =
            section_to_vector(once, sampler, trials, rng, cfg.workers);
        const Vector v2 =
            section_to_vector(twice, sampler, trials, rng, cfg.workers);
        const double bound =
            3.0 * cfg.tol.mc_sigmas * 4.0 / std::sqrt(double(trials));
        return CaseOutcome{(v2 - v1).norm(), bound};
      });
  add("reproducing-zero-section", "hilbert-space-sections",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reproducing-zero-section"));
        const Index d = 3, n = 1;
        const SectionSample zero(
            [d](const ProjectionPoint&) { return Vector::Zero(d); });
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        const Vector v = section_to_vector(zero, sampler, 1000, rng, 1);
        return CaseOutcome{v.norm(), 1e-14};
      });
  add("polarization-residuals", "propagator-polarization",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "polarization-residuals"));
        double worst = 0.0;
        for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
          for (int t = 0; t < 10; ++t) {
            const ProjectionPoint q0 = random_point(d, n, rng, 0.3);
            const ProjectionPoint q = random_point(d, n, rng, 0.3);
            Vector v0 = q0.matrix() * Vector::NullaryExpr(d, [&](Index) {
              return rng.complex_normal();
            });
            if (v0.norm() < 1e-8) continue;
            v0 /= v0.norm();
            const TangentVector w = unit_tangent(q, rng);
            for (auto which : {PolarizationKind::kI, PolarizationKind::kJ,
                               PolarizationKind::kK}) {
              worst = std::max(
                  worst, polarization_residual(q0, v0, q, w, which,
                                               cfg.tol.fd_step));
            }
          }
        }
        return CaseOutcome{worst, 1e-5};
      });
  add("polarization-zero-direction", "propagator-polarization",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "polarization-zero-direction"));
        const ProjectionPoint q0 = haar_sample(3, 1, rng);
        const ProjectionPoint q = haar_sample(3, 1, rng);
        Vector v0 = q0.matrix().col(0);
        v0 /= v0.norm();
        const TangentVector w =
            TangentVector::trusted(q, Matrix::Zero(3, 3));
        return CaseOutcome{polarization_residual(q0, v0, q, w,
                                                 PolarizationKind::kI,
                                                 cfg.tol.fd_step),
                           1e-14};
      });
  add("polarization-two-of-three", "propagator-polarization",
      [](const SuiteConfig& cfg) {
        // residual(I), residual(J) small forces residual(K) <= 3 tol.
        RngState rng(case_seed(cfg.seed, "polarization-two-of-three"));
        double worst_k = 0.0;
        double tol_seen = 1e-5;
        for (int t = 0; t < 20; ++t) {
          const ProjectionPoint q0 = random_point(2, 1, rng, 0.2);
          const ProjectionPoint q = random_point(2, 1, rng, 0.2);
          Vector v0 = q0.matrix().col(0);
          if (v0.norm() < 1e-8) continue;
          v0 /= v0.norm();
          const TangentVector w = unit_tangent(q, rng);
          const double ri = polarization_residual(q0, v0, q, w,
                                                  PolarizationKind::kI,
                                                  cfg.tol.fd_step);
          const double rj = polarization_residual(q0, v0, q, w,
                                                  PolarizationKind::kJ,
                                                  cfg.tol.fd_step);
          const double rk = polarization_residual(q0, v0, q, w,
                                                  PolarizationKind::kK,
                                                  cfg.tol.fd_step);
          tol_seen = std::max({tol_seen, ri, rj});
          worst_k = std::max(worst_k, rk);
        }
        return CaseOutcome{worst_k, 3.0 * tol_seen};
      });
  add("kostant-souriau-rank-one", "kostant-souriau",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "kostant-souriau-rank-one"));
        double worst = 0.0;
        for (Index d : {Index(2), Index(3)}) {
          for (int t = 0; t < 100; ++t) {
            const ProjectionPoint q = haar_sample(d, 1, rng);
            const Matrix m = gaussian_matrix(rng, d, d);
            Vector psi(d);
            for (Index i = 0; i < d; ++i) psi(i) = rng.complex_normal();
            worst = std::max(
                worst, kostant_souriau_residual(m, psi, q, cfg.tol.fd_step));
          }
        }
        return CaseOutcome{worst, 1e-5};
      });
  add("kostant-souriau-identity-observable", "kostant-souriau",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "kostant-souriau-identity-observable"));
        const ProjectionPoint q = haar_sample(3, 1, rng);
        Vector psi(3);
        psi << 1.0, Complex(0, 0.5), -0.25;
        return CaseOutcome{
            kostant_souriau_residual(Matrix::Identity(3, 3), psi, q,
                                     cfg.tol.fd_step),
            1e-12};
      });
  add("kostant-souriau-rank-two-failure", "kostant-souriau",
      [](const SuiteConfig& cfg) {
        // Calibration first: record the empirical distribution of the n=2
        // residual, then assert the frozen 0.01 threshold is exceeded in at
        // least 95 of 100 draws.
        RngState rng(case_seed(cfg.seed, "kostant-souriau-rank-two-failure"));
        const Index d = 4, n = 2;
        std::vector<double> residuals;
        for (int t = 0; t < 100; ++t) {
          const ProjectionPoint q = haar_sample(d, n, rng);
          const Matrix m = gaussian_matrix(rng, d, d);
          Vector psi(d);
          for (Index i = 0; i < d; ++i) psi(i) = rng.complex_normal();
          residuals.push_back(
              kostant_souriau_residual(m, psi, q, cfg.tol.fd_step));
        }
        std::sort(residuals.begin(), residuals.end());
        int below = 0;
        for (double r : residuals)
          if (r < 0.01) ++below;
        CaseOutcome out;
        out.residual = static_cast<double>(below);
        out.bound = 5.0;
        std::ostringstream note;
        note << "calibration quantiles (min/p05/p50/max): " << residuals[0]
             << "/" << residuals[4] << "/" << residuals[49] << "/"
             << residuals[99];
        out.note = note.str();
        return out;
      });
  add("reconstruction-round-trip", "equivalence-round-trip",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reconstruction-round-trip"));
        const Index d = 2, n = 1;
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        const ProjectionPoint x = haar_sample(d, n, rng);
        const KernelFn model = [](const ProjectionPoint& a,
                                  const ProjectionPoint& b) {
          return propagate(a, b).matrix();
        };
        const ReconstructionResult r = reconstruct_point_from_propagator(
            model, x, sampler, clamp_samples(cfg, 100000), rng, cfg.workers);
        CaseOutcome out;
        out.residual = std::max(r.action_residual - r.action_bound,
                                r.axioms.all() ? 0.0 : 1.0);
        out.bound = 0.0;
        if (!r.axioms.all()) out.note = "axioms failed: " + r.axioms.failed();
        return out;
      });
  add("reconstruction-delta-preserving", "equivalence-round-trip",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reconstruction-delta-preserving"));
        const Index d = 2, n = 1;
        const CycleSampler sampler = CycleSampler::haar_zero_section(d, n);
        const ProjectionPoint x = haar_sample(d, n, rng);
        const KernelFn model = [](const ProjectionPoint& a,
                                  const ProjectionPoint& b) {
          return propagate(a, b).matrix();
        };
        const ReconstructionResult r = reconstruct_point_from_propagator(
            model, x, sampler, clamp_samples(cfg, 100000), rng, cfg.workers);
        return CaseOutcome{r.delta_residual, r.delta_bound};
      });
  add("reconstruction-mutant-detection", "propagator-axioms",
      [](const SuiteConfig& cfg) {
        // 1.1 * P violates the diagonal-identity axiom and must be flagged.
        RngState rng(case_seed(cfg.seed, "reconstruction-mutant-detection"));
        const CycleSampler sampler = CycleSampler::haar_zero_section(2, 1);
        const KernelFn scaled = [](const ProjectionPoint& a,
                                   const ProjectionPoint& b) {
          return (1.1 * propagate(a, b).matrix()).eval();
        };
        const AxiomVerdict v =
            check_propagator_axioms(scaled, sampler, 2000, rng);
        const bool flagged = !v.identity_on_diagonal;
        return CaseOutcome{flagged ? 0.0 : 1.0, 0.5,
                           "failed axioms: " + v.failed()};
      });
  add("model-axioms-hold", "propagator-axioms", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "model-axioms-hold"));
    const CycleSampler sampler = CycleSampler::haar_zero_section(2, 1);
    const KernelFn model = [](const ProjectionPoint& a,
                              const ProjectionPoint& b) {
      return propagate(a, b).matrix();
    };
    const AxiomVerdict v = check_propagator_axioms(
        model, sampler, clamp_samples(cfg, 20000), rng);
    return CaseOutcome{v.all() ? 0.0 : 1.0, 0.5,
                       v.all() ? "" : "failed axioms: " + v.failed()};
  });
}

void register_path_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"path", std::move(name), std::move(anchor), std::move(fn)});
  };

  add("octant-holonomy", "path-integral-limit", [](const SuiteConfig& cfg) {
    (void)cfg;
    const PropagatorMap loop = discrete_transport(octant_loop(10000));
    const double phase = std::abs(holonomy_phase(loop));
    return CaseOutcome{std::abs(phase - M_PI / 4.0), 1e-3};
  });
  add("discrete-ode-first-order", "path-integral-limit",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "discrete-ode-first-order"));
        const ProjectionPoint q0 = haar_sample(3, 1, rng);
        const PathSpec flow =
            PathSpec::unitary_flow(q0, gaussian_skew_hermitian(rng, 3), 500);
        const PropagatorMap ode = ode_transport(flow, 4096);
        const double e1 =
            (discrete_transport(flow.with_steps(500)).matrix() - ode.matrix())
                .norm();
        const double e2 =
            (discrete_transport(flow.with_steps(1000)).matrix() - ode.matrix())
                .norm();
        const double ratio = e1 / std::max(e2, 1e-300);
        return CaseOutcome{std::abs(ratio - 2.0), 0.4};
      });
  add("reverse-path-inverts", "path-integral-limit",
      [](const SuiteConfig& cfg) {
        (void)cfg;
        const PathSpec loop = octant_loop(10000);
        const PropagatorMap fwd = discrete_transport(loop);
        const PropagatorMap rev = discrete_transport(loop.reversed());
        // Holonomy phases cancel; magnitudes agree by symmetry.
        const double phase_residual = std::abs(
            std::arg(fwd.matrix().determinant() *
                     rev.matrix().determinant()));
        const double mag_residual =
            std::abs(std::abs(fwd.matrix().determinant()) -
                     std::abs(rev.matrix().determinant()));
        return CaseOutcome{std::max(phase_residual, mag_residual), 1e-6};
      });
  add("transport-factorization", "path-integral-limit",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "transport-factorization"));
        const ProjectionPoint q0 = haar_sample(2, 1, rng);
        const PathSpec flow =
            PathSpec::unitary_flow(q0, gaussian_skew_hermitian(rng, 2), 64);
        const std::vector<ProjectionPoint> pts = flow.sample_points();
        const std::vector<ProjectionPoint> first(pts.begin(),
                                                 pts.begin() + 33);
        const std::vector<ProjectionPoint> second(pts.begin() + 32,
                                                  pts.end());
        const Matrix whole =
            discrete_transport(PathSpec::from_samples(pts)).matrix();
        const Matrix split =
            discrete_transport(PathSpec::from_samples(second)).matrix() *
            discrete_transport(PathSpec::from_samples(first)).matrix();
        return CaseOutcome{(whole - split).norm(), 1e-15};
      });
  add("zero-section-unitarity", "propagator-splitting",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "zero-section-unitarity"));
        const ProjectionPoint q0 = haar_sample(4, 2, rng);
        const PathSpec flow =
            PathSpec::unitary_flow(q0, gaussian_skew_hermitian(rng, 4), 100);
        const Matrix m = ode_transport(flow, 2048).matrix();
        return CaseOutcome{
            (m.adjoint() * m - Matrix::Identity(2, 2)).norm(), 1e-8};
      });
  add("ode-discrete-agree", "propagator-splitting",
      [](const SuiteConfig& cfg) {
        (void)cfg;
        const PathSpec loop = octant_loop(10000);
        const Matrix d10k = discrete_transport(loop).matrix();
        const Matrix ode = ode_transport(loop, 4096).matrix();
        return CaseOutcome{(d10k - ode).norm(), 5e-4};
      });
}

}  // namespace grasq::detail
