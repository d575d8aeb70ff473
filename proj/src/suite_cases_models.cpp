#include "grasq/flat_model.hpp"
#include "grasq/hyperkahler.hpp"
#include "grasq/matrix_kernel.hpp"
#include "grasq/sphere_model.hpp"
#include "suite_cases.hpp"

namespace grasq::detail {

namespace {

FlatPoint random_real_flat(RngState& rng, double hbar, double spread = 1.5) {
  return FlatPoint::from_coords(spread * (2 * rng.uniform() - 1), 0.0,
                                spread * (2 * rng.uniform() - 1), 0.0, hbar);
}

FlatPoint random_continued_flat(RngState& rng, double hbar, double im_max) {
  const double x1 = 1.5 * (2 * rng.uniform() - 1);
  const double y1 = 1.5 * (2 * rng.uniform() - 1);
  const FlatPoint real = FlatPoint::from_coords(x1, 0.0, y1, 0.0, hbar);
  const Complex dz(0.0, im_max * (2 * rng.uniform() - 1));
  const Complex dzb(0.0, im_max * (2 * rng.uniform() - 1));
  return FlatPoint::continued(real.z + dz, real.zbar + dzb, hbar);
}

SpherePoint random_real_sphere(RngState& rng) {
  return SpherePoint::real_locus(std::acos(2 * rng.uniform() - 1),
                                 2 * M_PI * rng.uniform());
}

ProjectionPoint random_tp1_point(RngState& rng, double fiber_norm) {
  ProjectionPoint q = haar_sample(2, 1, rng);
  if (fiber_norm > 0.0) {
    const Matrix& qv = q.matrix();
    const Matrix id = Matrix::Identity(2, 2);
    Matrix f = qv * gaussian_matrix(rng, 2, 2) * (id - qv);
    if (f.norm() > 0) f *= fiber_norm * rng.uniform() / f.norm();
    q = compose_cotangent(q, f);
  }
  return q;
}

}  // namespace

void register_flat_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"flat", std::move(name), std::move(anchor), std::move(fn)});
  };
  const double hbar = 0.5;

  add("kernel-diagonal", "flat-kernel", [hbar](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "kernel-diagonal"));
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const FlatPoint p = random_real_flat(rng, hbar);
      worst = std::max(worst, std::abs(flat_kernel(p, p) - 1.0));
    }
    return CaseOutcome{worst, 1e-13};
  });
  add("kernel-value", "flat-kernel", [](const SuiteConfig& cfg) {
    (void)cfg;
    const FlatPoint p = FlatPoint::continued(1.0, 1.0, 0.5);
    const FlatPoint w = FlatPoint::continued(0.0, 0.0, 0.5);
    return CaseOutcome{std::abs(flat_kernel(p, w) - std::exp(-0.5)), 1e-14};
  });
  add("kernel-gaussian-modulus", "flat-kernel", [hbar](const SuiteConfig& cfg) {
    // |P(z,w)|^2 = exp(-|z-w|^2 / 2 hbar) on the real locus.
    RngState rng(case_seed(cfg.seed, "kernel-gaussian-modulus"));
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const FlatPoint p = random_real_flat(rng, hbar);
      const FlatPoint w = random_real_flat(rng, hbar);
      const double lhs = std::norm(flat_kernel(p, w));
      const double rhs =
          std::exp(-std::norm(p.z - w.z) / (2.0 * hbar));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    return CaseOutcome{worst, 1e-12};
  });
  add("idempotency-real-locus", "flat-kernel", [hbar](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "idempotency-real-locus"));
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const FlatPoint p = random_real_flat(rng, hbar);
      const FlatPoint w = random_real_flat(rng, hbar);
      worst = std::max(worst, flat_idempotency_residual(p, w, 64));
    }
    return CaseOutcome{worst, 1e-8};
  });
  add("idempotency-continued", "flat-kernel", [hbar](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "idempotency-continued"));
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const FlatPoint p = random_continued_flat(rng, hbar, 0.3);
      const FlatPoint w = random_continued_flat(rng, hbar, 0.3);
      worst = std::max(worst, flat_idempotency_residual(p, w, 64));
    }
    return CaseOutcome{worst, 1e-6};
  });
  add("measure-normalization", "flat-kernel", [hbar](const SuiteConfig& cfg) {
    // Diagonal case of the reproducing identity: integral = P(p,p) = 1.
    RngState rng(case_seed(cfg.seed, "measure-normalization"));
    const FlatPoint p = random_real_flat(rng, hbar);
    return CaseOutcome{flat_idempotency_residual(p, p, 64), 1e-10};
  });
  add("domain-error-raised", "flat-kernel", [hbar](const SuiteConfig& cfg) {
    (void)cfg;
    // Re(z zbar) < 0 violates the decay condition and must be rejected.
    const FlatPoint bad = FlatPoint::continued(1.0, -2.0, hbar);
    const FlatPoint w = FlatPoint::continued(0.0, 0.0, hbar);
    try {
      flat_idempotency_residual(bad, w, 16);
      return CaseOutcome{1.0, 0.5, "domain error not raised"};
    } catch (const QuadratureDomainError&) {
      return CaseOutcome{0.0, 0.5};
    }
  });
  add("polarization-kahler-slice", "flat-connection",
      [hbar](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "polarization-kahler-slice"));
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
          const FlatPoint p0 = FlatPoint::from_coords(
              2 * rng.uniform() - 1, 2 * rng.uniform() - 1,
              2 * rng.uniform() - 1, 2 * rng.uniform() - 1, hbar);
          FlatCoords w;
          w.x1 = 2 * rng.uniform() - 1;
          w.y1 = 2 * rng.uniform() - 1;
          worst = std::max(worst,
                           flat_polarization_residual(
                               p0, w, FlatSlice::kKahler, hbar,
                               cfg.tol.fd_step));
        }
        return CaseOutcome{worst, 1e-6};
      });
  add("polarization-real-slice", "flat-connection",
      [hbar](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "polarization-real-slice"));
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
          const FlatPoint p0 = FlatPoint::from_coords(
              2 * rng.uniform() - 1, 2 * rng.uniform() - 1,
              2 * rng.uniform() - 1, 2 * rng.uniform() - 1, hbar);
          FlatCoords w;
          w.x1 = 2 * rng.uniform() - 1;
          w.y2 = 2 * rng.uniform() - 1;
          worst = std::max(worst,
                           flat_polarization_residual(
                               p0, w, FlatSlice::kRealPolarized, hbar,
                               cfg.tol.fd_step));
        }
        return CaseOutcome{worst, 1e-6};
      });
  add("non-eigendirection-sanity", "flat-connection",
      [hbar](const SuiteConfig& cfg) {
        // dx1 alone is not a polarized direction; the residual must be
        // macroscopic.
        RngState rng(case_seed(cfg.seed, "non-eigendirection-sanity"));
        double best = 0.0;
        for (int t = 0; t < 10; ++t) {
          const FlatPoint p0 = FlatPoint::from_coords(
              1.0 + rng.uniform(), 0.3, -0.7, 0.2, hbar);
          FlatCoords w;
          w.x1 = 0.5 + rng.uniform();
          w.y1 = 0.4;
          best = std::max(best, flat_direction_residual(
                                    p0, w, {Complex(1.0, 0.0), 0, 0, 0},
                                    hbar, cfg.tol.fd_step));
        }
        return CaseOutcome{-best, -1e-2};
      });
  add("tessarine-frame-identities", "tessarine-r4",
      [](const SuiteConfig& cfg) {
        (void)cfg;
        double worst = 0.0;
        std::string note;
        for (const auto& [name, residual] : tessarine_flat_check()) {
          if (residual > worst) {
            worst = residual;
            note = "worst: " + name;
          }
        }
        return CaseOutcome{worst, 0.0, note};
      });
}

void register_sphere_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"sphere", std::move(name), std::move(anchor),
                   std::move(fn)});
  };

  add("projection-poles", "complexified-sphere", [](const SuiteConfig& cfg) {
    (void)cfg;
    Matrix north(2, 2), xpole(2, 2);
    north << 1, 0, 0, 0;
    xpole << 0.5, 0.5, 0.5, 0.5;
    double r = (sphere_projection(SpherePoint(0, 0, 1)).matrix() - north)
                   .norm();
    r = std::max(r, (sphere_projection(SpherePoint(1, 0, 0)).matrix() - xpole)
                        .norm());
    return CaseOutcome{r, 1e-15};
  });
  add("constraint-forces-idempotency", "complexified-sphere",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "constraint-forces-idempotency"));
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
          const double a = rng.normal();
          const SpherePoint p(kImag * a, 0.0, std::sqrt(1.0 + a * a));
          const Matrix q = sphere_projection(p).matrix();
          worst = std::max(worst, (q * q - q).norm());
          // generic complex points too
          const Complex x(rng.normal(), rng.normal());
          const Complex y(rng.normal(), rng.normal());
          const Complex z = std::sqrt(1.0 - x * x - y * y);
          const Matrix qq =
              sphere_projection(SpherePoint(x, y, z)).matrix();
          worst = std::max(worst, (qq * qq - qq).norm());
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("J-cross-product", "complexified-sphere", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "J-cross-product"));
    // north pole: J(1,0,0) = (0,1,0)
    const auto jn = sphere_J(SpherePoint(0, 0, 1), {1.0, 0.0, 0.0});
    double worst = std::max({std::abs(jn[0]), std::abs(jn[1] - 1.0),
                             std::abs(jn[2])});
    for (int t = 0; t < 100; ++t) {
      // random real point, then a complexified one
      for (int mode = 0; mode < 2; ++mode) {
        SpherePoint p = random_real_sphere(rng);
        if (mode == 1) {
          const Complex x = p.x + Complex(0, 0.2 * rng.normal());
          const Complex y = p.y + Complex(0, 0.2 * rng.normal());
          const Complex z = std::sqrt(1.0 - x * x - y * y);
          p = SpherePoint(x, y, z);
        }
        // project a random triple onto the tangent plane
        Complex a(rng.normal(), rng.normal());
        Complex b(rng.normal(), rng.normal());
        Complex c(rng.normal(), rng.normal());
        const Complex lam =
            (p.x * a + p.y * b + p.z * c) /
            (p.x * p.x + p.y * p.y + p.z * p.z);
        a -= lam * p.x;
        b -= lam * p.y;
        c -= lam * p.z;
        const auto jt = sphere_J(p, {a, b, c});
        const auto jjt = sphere_J(p, jt);
        worst = std::max({worst, std::abs(jjt[0] + a), std::abs(jjt[1] + b),
                          std::abs(jjt[2] + c)});
      }
    }
    return CaseOutcome{worst, 1e-12};
  });
  add("kernel-normalization", "complexified-sphere",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "kernel-normalization"));
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
          const ChartPoint z1 = to_chart(random_real_sphere(rng));
          const ChartPoint z2 = to_chart(random_real_sphere(rng));
          worst = std::max(worst, std::abs(sphere_kernel(z1, z1) - 1.0));
          const ChartPoint north{0.0, 0.0};
          worst = std::max(worst, std::abs(sphere_kernel(north, z2) - 1.0));
        }
        return CaseOutcome{worst, 1e-13};
      });
  add("kernel-trace-agreement", "complexified-sphere",
      [](const SuiteConfig& cfg) {
        // P(z1,z2) P(z2,z1) = Tr(q1 q2) on the real locus.
        RngState rng(case_seed(cfg.seed, "kernel-trace-agreement"));
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
          const SpherePoint p1 = random_real_sphere(rng);
          const SpherePoint p2 = random_real_sphere(rng);
          const ChartPoint z1 = to_chart(p1);
          const ChartPoint z2 = to_chart(p2);
          const Complex lhs = sphere_kernel(z1, z2) * sphere_kernel(z2, z1);
          const Complex rhs = (sphere_projection(p1).matrix() *
                               sphere_projection(p2).matrix())
                                  .trace();
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("chart-pole-error", "complexified-sphere", [](const SuiteConfig& cfg) {
    (void)cfg;
    try {
      // u utilde = -1 is the chart pole of the kernel denominator.
      sphere_kernel(ChartPoint{kImag, kImag}, ChartPoint{0.0, 0.0});
      return CaseOutcome{1.0, 0.5, "pole not detected"};
    } catch (const ChartError&) {
      return CaseOutcome{0.0, 0.5};
    }
  });
  add("reproducing-north-pole", "dimension-volume",
      [](const SuiteConfig& cfg) {
        (void)cfg;
        const ChartPoint origin{0.0, 0.0};
        return CaseOutcome{sphere_idempotency_residual(origin, origin),
                           1e-10};
      });
  add("reproducing-real-locus", "dimension-volume",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reproducing-real-locus"));
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
          const ChartPoint z1 = to_chart(random_real_sphere(rng));
          const ChartPoint z2 = to_chart(random_real_sphere(rng));
          worst = std::max(worst, sphere_idempotency_residual(z1, z2));
        }
        return CaseOutcome{worst, 1e-8};
      });
  add("reproducing-continued", "dimension-volume",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "reproducing-continued"));
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
          ChartPoint z1 = to_chart(random_real_sphere(rng));
          ChartPoint z2 = to_chart(random_real_sphere(rng));
          z1.utilde += Complex(0.05 * rng.normal(), 0.05 * rng.normal());
          z2.u += Complex(0.05 * rng.normal(), 0.05 * rng.normal());
          worst = std::max(worst, sphere_idempotency_residual(z1, z2));
        }
        return CaseOutcome{worst, 1e-6};
      });
  add("conjugation-adjoint-intertwine", "complexified-sphere",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "conjugation-adjoint-intertwine"));
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
          const Complex x(rng.normal(), 0.3 * rng.normal());
          const Complex y(rng.normal(), 0.3 * rng.normal());
          const Complex z = std::sqrt(1.0 - x * x - y * y);
          const SpherePoint p(x, y, z);
          worst = std::max(
              worst, (sphere_projection(p.conjugated()).matrix() -
                      sphere_projection(p).matrix().adjoint())
                         .norm());
        }
        return CaseOutcome{worst, 1e-14};
      });
  add("disk-pseudo-hermiticity", "disk-hyperboloid",
      [](const SuiteConfig& cfg) {
        // eta q eta = q^dagger with eta = diag(1,-1) on the disk locus.
        RngState rng(case_seed(cfg.seed, "disk-pseudo-hermiticity"));
        Matrix eta(2, 2);
        eta << 1, 0, 0, -1;
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
          const SpherePoint p =
              SpherePoint::disk_locus(rng.normal(), rng.normal());
          const Matrix q = sphere_projection(p).matrix();
          worst = std::max(worst, (eta * q * eta - q.adjoint()).norm());
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("delta-modulus-bound", "delta-product", [](const SuiteConfig& cfg) {
    // |Delta| <= 1 on the real locus, equality iff coincident points.
    RngState rng(case_seed(cfg.seed, "delta-modulus-bound"));
    double worst = 0.0;
    DeltaProductConfig id_cfg;
    for (int t = 0; t < 100; ++t) {
      const SpherePoint p1 = random_real_sphere(rng);
      const SpherePoint p2 = random_real_sphere(rng);
      const SpherePoint p3 = random_real_sphere(rng);
      const DeltaProductResult r =
          delta_product_explorer(p1, p2, p3, id_cfg);
      worst = std::max(worst, std::abs(r.delta_sphere) - 1.0);
    }
    return CaseOutcome{worst, 1e-12};
  });
  add("delta-coincident-points", "delta-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "delta-coincident-points"));
    const SpherePoint p = random_real_sphere(rng);
    double worst = 0.0;
    for (const auto& [cfg2, r] : delta_product_sweep(p, p, p)) {
      (void)cfg2;
      worst = std::max({worst, std::abs(r.delta_sphere - 1.0),
                        std::abs(r.delta_disk - 1.0),
                        std::abs(r.product - 1.0)});
    }
    return CaseOutcome{worst, 1e-12};
  });
  add("delta-sweep-executes", "delta-product", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "delta-sweep-executes"));
    const SpherePoint p1 = random_real_sphere(rng);
    const SpherePoint p2 = random_real_sphere(rng);
    const SpherePoint p3 = random_real_sphere(rng);
    const auto sweep = delta_product_sweep(p1, p2, p3);
    double bad = sweep.size() == 8 ? 0.0 : 1.0;
    for (const auto& [c, r] : sweep) {
      (void)c;
      if (!std::isfinite(std::abs(r.product))) bad = 1.0;
    }
    return CaseOutcome{bad, 0.5};
  });
}

void register_hyperkahler_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"hyperkahler", std::move(name), std::move(anchor),
                   std::move(fn)});
  };

  add("jprime-squares-to-minus-one", "anticommuting-structure",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "jprime-squares-to-minus-one"));
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
          const ProjectionPoint q =
              random_tp1_point(rng, t % 2 ? 1.0 : 0.0);
          TangentVector v = random_tangent(q, rng);
          if (v.norm() < 1e-8) continue;
          v = TangentVector::trusted(q, v.matrix() / v.norm());
          worst = std::max(
              worst, (hyperkahler_Jprime(hyperkahler_Jprime(v)).matrix() +
                      v.matrix())
                         .norm());
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("jprime-anticommutes-I", "anticommuting-structure",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "jprime-anticommutes-I"));
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
          const ProjectionPoint q =
              random_tp1_point(rng, t % 2 ? 1.0 : 0.0);
          TangentVector v = random_tangent(q, rng);
          if (v.norm() < 1e-8) continue;
          v = TangentVector::trusted(q, v.matrix() / v.norm());
          worst = std::max(
              worst, (hyperkahler_Jprime(apply_I(v)).matrix() +
                      apply_I(hyperkahler_Jprime(v)).matrix())
                         .norm());
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("jprime-equals-J-on-zero-section", "anticommuting-structure",
      [](const SuiteConfig& cfg) {
        // At Hermitian q on zero-section (Hermitian) tangents, J' is J.
        RngState rng(case_seed(cfg.seed, "jprime-equals-J-on-zero-section"));
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
          const ProjectionPoint q = haar_sample(2, 1, rng);
          TangentVector v = random_tangent(q, rng);
          Matrix h = 0.5 * (v.matrix() + v.matrix().adjoint());
          if (h.norm() < 1e-8) continue;
          h /= h.norm();
          const TangentVector vh = TangentVector::trusted(q, h);
          worst = std::max(worst, (hyperkahler_Jprime(vh).matrix() -
                                   apply_J(vh).matrix())
                                      .norm());
        }
        return CaseOutcome{worst, 1e-12};
      });
  add("denominator-lower-bound", "anticommuting-structure",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "denominator-lower-bound"));
        double min_den = std::numeric_limits<double>::max();
        double herm_dev = 0.0;
        for (int t = 0; t < 1000; ++t) {
          const ProjectionPoint q =
              random_tp1_point(rng, t % 2 ? 1.0 : 0.0);
          const Matrix& m = q.matrix();
          const double den =
              2.0 * std::real((m.adjoint() * m).trace()) - 1.0;
          min_den = std::min(min_den, den);
          if (q.is_hermitian(1e-12))
            herm_dev = std::max(herm_dev, std::abs(den - 1.0));
        }
        const double below_one = std::max(0.0, 1.0 - min_den);
        return CaseOutcome{std::max(below_one, herm_dev), 1e-10};
      });
  add("jprime-matrix-unit-example", "anticommuting-structure",
      [](const SuiteConfig& cfg) {
        (void)cfg;
        Matrix qm(2, 2), e12 = Matrix::Zero(2, 2), e21 = Matrix::Zero(2, 2);
        qm << 1, 0, 0, 0;
        e12(0, 1) = 1.0;
        e21(1, 0) = 1.0;
        const ProjectionPoint q(qm, 1);
        const TangentVector v = TangentVector::trusted(q, e12);
        const TangentVector jv = hyperkahler_Jprime(v);
        double r = (jv.matrix() - kImag * e21).norm();
        r = std::max(r,
                     (hyperkahler_Jprime(jv).matrix() + e12).norm());
        return CaseOutcome{r, 1e-14};
      });
}

}  // namespace grasq::detail

namespace grasq {

namespace {

VerificationReport examples_report(const std::string& suite,
                                   std::vector<CaseResult> cases) {
  VerificationReport report;
  report.suite = suite;
  report.config.suite = suite;
  report.cases = std::move(cases);
  report.finalize();
  return report;
}

CaseResult named_case(const std::string& name, const std::string& anchor,
                      double residual, double bound) {
  CaseResult c;
  c.name = name;
  c.anchor = anchor;
  c.residual = residual;
  c.bound = bound;
  c.pass = residual <= bound;
  return c;
}

}  // namespace

VerificationReport run_flat_examples(double hbar, int quad_order) {
  RngState rng(11);
  std::vector<CaseResult> cases;

  const FlatPoint p = FlatPoint::from_coords(0.8, 0.0, -0.4, 0.0, hbar);
  const FlatPoint w = FlatPoint::from_coords(-0.3, 0.0, 0.9, 0.0, hbar);
  cases.push_back(named_case("kernel-diagonal", "flat-kernel",
                             std::abs(flat_kernel(p, p) - 1.0), 1e-13));
  cases.push_back(named_case(
      "idempotency-real-locus", "flat-kernel",
      flat_idempotency_residual(p, w, quad_order), quad_order >= 48 ? 1e-8
                                                                    : 1e-4));
  const FlatPoint pc = FlatPoint::continued(p.z + Complex(0, 0.2),
                                            p.zbar + Complex(0, -0.1), hbar);
  cases.push_back(named_case(
      "idempotency-continued", "flat-kernel",
      flat_idempotency_residual(pc, w, quad_order), quad_order >= 48 ? 1e-6
                                                                     : 1e-3));
  FlatCoords wk;
  wk.x1 = 0.4;
  wk.y1 = -0.6;
  const FlatPoint p0 = FlatPoint::from_coords(
      rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(), hbar);
  cases.push_back(named_case(
      "polarization-kahler-slice", "flat-connection",
      flat_polarization_residual(p0, wk, FlatSlice::kKahler, hbar), 1e-6));
  FlatCoords wr;
  wr.x1 = 0.4;
  wr.y2 = 0.7;
  cases.push_back(named_case(
      "polarization-real-slice", "flat-connection",
      flat_polarization_residual(p0, wr, FlatSlice::kRealPolarized, hbar),
      1e-6));
  double tess_worst = 0.0;
  for (const auto& [name, residual] : tessarine_flat_check())
    tess_worst = std::max(tess_worst, residual);
  cases.push_back(
      named_case("tessarine-frame-identities", "tessarine-r4", tess_worst,
                 0.0));
  return examples_report("flat", std::move(cases));
}

VerificationReport run_sphere_examples(int quad_order) {
  RngState rng(13);
  std::vector<CaseResult> cases;
  auto random_real = [&rng] {
    return SpherePoint::real_locus(std::acos(2 * rng.uniform() - 1),
                                   2 * M_PI * rng.uniform());
  };
  const SpherePoint p1 = random_real();
  const SpherePoint p2 = random_real();
  const ChartPoint z1 = to_chart(p1);
  const ChartPoint z2 = to_chart(p2);
  cases.push_back(named_case(
      "kernel-trace-agreement", "complexified-sphere",
      std::abs(sphere_kernel(z1, z2) * sphere_kernel(z2, z1) -
               (sphere_projection(p1).matrix() * sphere_projection(p2).matrix())
                   .trace()),
      1e-12));
  cases.push_back(named_case(
      "reproducing-identity", "dimension-volume",
      sphere_idempotency_residual(z1, z2, quad_order, 2 * quad_order),
      quad_order >= 24 ? 1e-8 : 1e-4));
  Matrix eta(2, 2);
  eta << 1, 0, 0, -1;
  const SpherePoint dp = SpherePoint::disk_locus(0.7, -0.4);
  const Matrix dq = sphere_projection(dp).matrix();
  cases.push_back(named_case("disk-pseudo-hermiticity", "disk-hyperboloid",
                             (eta * dq * eta - dq.adjoint()).norm(), 1e-12));
  const SpherePoint p3 = random_real();
  double sanity = 0.0;
  for (const auto& [c, r] : delta_product_sweep(p1, p2, p3)) {
    (void)c;
    if (!std::isfinite(std::abs(r.product))) sanity = 1.0;
  }
  cases.push_back(
      named_case("delta-sweep-executes", "delta-product", sanity, 0.5));
  cases.push_back(named_case(
      "delta-modulus-bound", "delta-product",
      std::abs(delta_product_explorer(p1, p2, p3, DeltaProductConfig{})
                   .delta_sphere) -
          1.0,
      1e-12));
  return examples_report("sphere", std::move(cases));
}

}  // namespace grasq
