#include "grasq/matrix_kernel.hpp"
#include "grasq/quantization.hpp"
#include "grasq/symplectic.hpp"
#include "suite_cases.hpp"

namespace grasq::detail {

namespace {

constexpr int kIdentityTrials = 1000;
constexpr int kInstanceTrials = 100;

/// Random point of T*G: Haar on the zero section, pushed off it half the
/// time by a fiber part of norm <= fiber_norm.
ProjectionPoint random_point(Index d, Index n, RngState& rng,
                             double fiber_norm = 1.0) {
  ProjectionPoint q = haar_sample(d, n, rng);
  if (fiber_norm > 0.0 && rng.uniform() < 0.5) {
    const Matrix& qv = q.matrix();
    const Matrix id = Matrix::Identity(d, d);
    Matrix f = qv * gaussian_matrix(rng, d, d) * (id - qv);
    const double norm = f.norm();
    if (norm > 0) f *= fiber_norm * rng.uniform() / norm;
    q = compose_cotangent(q, f);
  }
  return q;
}

TangentVector unit_tangent(const ProjectionPoint& q, RngState& rng) {
  TangentVector v = random_tangent(q, rng);
  const double norm = v.norm();
  return TangentVector::trusted(q, v.matrix() / (norm > 0 ? norm : 1.0));
}

using PairList = std::vector<std::pair<Index, Index>>;

/// Max residual of fn over trials x (d,n) grid.
template <typename Fn>
CaseOutcome max_over_grid(const SuiteConfig& cfg, const PairList& fallback,
                          const std::string& name, int trials, double bound,
                          Fn&& fn) {
  RngState rng(case_seed(cfg.seed, name));
  double worst = 0.0;
  for (auto [d, n] : cfg.dim_rank_pairs(fallback))
    for (int t = 0; t < trials; ++t)
      worst = std::max(worst, fn(d, n, rng));
  return CaseOutcome{worst, bound};
}

}  // namespace

const PairList& tessarine_pairs() {
  static const PairList pairs = [] {
    PairList p;
    for (Index d = 2; d <= 6; ++d)
      for (Index n = 1; n < d; ++n) p.emplace_back(d, n);
    return p;
  }();
  return pairs;
}

const PairList& symplectic_pairs() {
  static const PairList pairs = {{2, 1}, {3, 1}, {3, 2}, {4, 2}};
  return pairs;
}

const PairList& quantization_pairs() {
  static const PairList pairs = {{2, 1}, {3, 1}, {4, 2}};
  return pairs;
}

void register_tessarine_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"tessarine", std::move(name), std::move(anchor),
                   std::move(fn)});
  };

  add("I-squared", "tessarine-structures", [](const SuiteConfig& cfg) {
    return max_over_grid(cfg, tessarine_pairs(), "I-squared", kIdentityTrials,
                         cfg.tol.identity,
                         [](Index d, Index n, RngState& rng) {
                           const ProjectionPoint q = random_point(d, n, rng);
                           const TangentVector v = unit_tangent(q, rng);
                           return (apply_I(apply_I(v)).matrix() + v.matrix())
                               .norm();
                         });
  });
  add("J-squared", "tessarine-structures", [](const SuiteConfig& cfg) {
    return max_over_grid(cfg, tessarine_pairs(), "J-squared", kIdentityTrials,
                         cfg.tol.identity,
                         [](Index d, Index n, RngState& rng) {
                           const ProjectionPoint q = random_point(d, n, rng);
                           const TangentVector v = unit_tangent(q, rng);
                           return (apply_J(apply_J(v)).matrix() + v.matrix())
                               .norm();
                         });
  });
  add("K-squared", "tessarine-structures", [](const SuiteConfig& cfg) {
    return max_over_grid(cfg, tessarine_pairs(), "K-squared", kIdentityTrials,
                         cfg.tol.identity,
                         [](Index d, Index n, RngState& rng) {
                           const ProjectionPoint q = random_point(d, n, rng);
                           const TangentVector v = unit_tangent(q, rng);
                           return (apply_K(apply_K(v)).matrix() - v.matrix())
                               .norm();
                         });
  });
  add("IJ-commutes", "tessarine-structures", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, tessarine_pairs(), "IJ-commutes", kIdentityTrials,
        cfg.tol.identity, [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const TangentVector v = unit_tangent(q, rng);
          return (apply_I(apply_J(v)).matrix() - apply_J(apply_I(v)).matrix())
              .norm();
        });
  });
  add("K-equals-IJ", "tessarine-structures", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, tessarine_pairs(), "K-equals-IJ", kIdentityTrials,
        cfg.tol.identity, [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const TangentVector v = unit_tangent(q, rng);
          return (apply_I(apply_J(v)).matrix() - apply_K(v).matrix()).norm();
        });
  });
  add("tangent-qAq-vanishes", "tangent-relation", [](const SuiteConfig& cfg) {
    return max_over_grid(cfg, tessarine_pairs(), "tangent-qAq-vanishes",
                         kIdentityTrials, 1e-9,
                         [](Index d, Index n, RngState& rng) {
                           const ProjectionPoint q = random_point(d, n, rng);
                           const TangentVector v = unit_tangent(q, rng);
                           return (q.matrix() * v.matrix() * q.matrix()).norm();
                         });
  });
  add("zero-section-split", "totally-real-zero-section",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, tessarine_pairs(), "zero-section-split", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = haar_sample(d, n, rng);
              const TangentVector v = unit_tangent(q, rng);
              const Matrix& a = v.matrix();
              const Matrix h = 0.5 * (a + a.adjoint());
              const Matrix s = (a - a.adjoint()) / (2.0 * kImag);
              // h, s are Hermitian tangents; a = h + I(s).
              double r = (h + kImag * s - a).norm();
              r = std::max(r, (q.matrix() * h + h * q.matrix() - h).norm());
              r = std::max(r, (s - s.adjoint()).norm());
              return r;
            });
      });
  add("IJK-hermitian-action", "totally-real-zero-section",
      [](const SuiteConfig& cfg) {
        // At a Hermitian base J fixes the Hermitian/skew split while I and
        // K = IJ swap the two halves.
        return max_over_grid(
            cfg, tessarine_pairs(), "IJK-hermitian-action", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = haar_sample(d, n, rng);
              const TangentVector v = unit_tangent(q, rng);
              const Matrix h = 0.5 * (v.matrix() + v.matrix().adjoint());
              const TangentVector vh = TangentVector::trusted(q, h);
              const Matrix jh = apply_J(vh).matrix();
              const Matrix kh = apply_K(vh).matrix();
              const Matrix ih = apply_I(vh).matrix();
              double r = (jh - jh.adjoint()).norm();       // J keeps Hermitian
              r = std::max(r, (kh + kh.adjoint()).norm()); // K flips to skew
              r = std::max(r, (ih + ih.adjoint()).norm()); // I flips to skew
              const Matrix s = 0.5 * (v.matrix() - v.matrix().adjoint());
              const TangentVector vs = TangentVector::trusted(q, s);
              const Matrix js = apply_J(vs).matrix();
              const Matrix ks = apply_K(vs).matrix();
              const Matrix is = apply_I(vs).matrix();
              r = std::max(r, (js + js.adjoint()).norm()); // J keeps skew
              r = std::max(r, (ks - ks.adjoint()).norm()); // K flips to Hermitian
              r = std::max(r, (is - is.adjoint()).norm()); // I flips to Hermitian
              return r;
            });
      });
  add("vertical-characterization", "vertical-eigenbundle",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, tessarine_pairs(), "vertical-characterization",
            kInstanceTrials, cfg.tol.identity,
            [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              const Matrix& p = q.matrix();
              const Matrix id = Matrix::Identity(d, d);
              // Vertical by construction: A = qX(1-q) has Aq = 0.
              Matrix a = p * gaussian_matrix(rng, d, d) * (id - p);
              if (a.norm() > 0) a /= a.norm();
              const TangentVector v = TangentVector::trusted(q, a);
              double r = (apply_K(v).matrix() - a).norm();
              // Conversely the K = +1 component is vertical.
              const TangentVector w = unit_tangent(q, rng);
              const Matrix plus =
                  0.5 * (w.matrix() + apply_K(w).matrix());
              r = std::max(r, (plus * p).norm());
              return r;
            });
      });
  add("retract-on-manifold", "projection-model", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, tessarine_pairs(), "retract-on-manifold", 50,
        cfg.tol.construction, [&cfg](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const TangentVector v = unit_tangent(q, rng);
          const double t = 2.0 * rng.uniform() - 1.0;
          const ProjectionPoint r = retract(q, v, t);
          // Checked reconstruction re-validates every invariant.
          const ProjectionPoint checked(r.matrix(), r.rank(), cfg.tol);
          const Matrix& m = checked.matrix();
          return (m * m - m).norm();
        });
  });
  add("retract-derivative", "tangent-relation", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, tessarine_pairs(), "retract-derivative", 20, cfg.tol.fd_accept,
        [&cfg](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const TangentVector v = unit_tangent(q, rng);
          const double h = cfg.tol.fd_step;
          const Matrix diff =
              (retract(q, v, h).matrix() - retract(q, v, -h).matrix()) /
              (2.0 * h);
          return (diff - v.matrix()).norm();
        });
  });
  add("adjoint-involution", "adjoint-involution", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, tessarine_pairs(), "adjoint-involution", kInstanceTrials,
        cfg.tol.identity, [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const ProjectionPoint qa = adjoint_involution(q);
          const Matrix& m = qa.matrix();
          double r = (m * m - m).norm();
          r = std::max(
              r, (adjoint_involution(qa).matrix() - q.matrix()).norm());
          const ProjectionPoint h = haar_sample(d, n, rng);
          r = std::max(r,
                       (adjoint_involution(h).matrix() - h.matrix()).norm());
          return r;
        });
  });
  add("compose-decompose-roundtrip", "cotangent-splitting",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, tessarine_pairs(), "compose-decompose-roundtrip",
            kInstanceTrials, cfg.tol.identity,
            [](Index d, Index n, RngState& rng) {
              const ProjectionPoint base = haar_sample(d, n, rng);
              const Matrix& qv = base.matrix();
              const Matrix id = Matrix::Identity(d, d);
              Matrix f = qv * gaussian_matrix(rng, d, d) * (id - qv);
              if (f.norm() > 1.0) f /= f.norm();
              const ProjectionPoint q = compose_cotangent(base, f);
              const CotangentDecomposition dec = decompose_cotangent(q);
              double r = (dec.base_orthogonal.matrix() - qv).norm();
              r = std::max(r, (dec.fiber - f).norm());
              return r;
            });
      });
  add("tangent-projector", "tangent-relation", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, tessarine_pairs(), "tangent-projector", kInstanceTrials, 1e-13,
        [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const Matrix x = gaussian_matrix(rng, d, d);
          const Matrix once = tangent_component(q, x).matrix();
          const Matrix twice = tangent_component(q, once).matrix();
          double r = (twice - once).norm() / std::max(1.0, once.norm());
          const TangentVector v = unit_tangent(q, rng);
          r = std::max(
              r, (tangent_component(q, v.matrix()).matrix() - v.matrix())
                     .norm());
          return r;
        });
  });
  add("haar-distribution-invariance", "haar-invariant-measure",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "haar-distribution-invariance"));
        const Index d = 2, n = 1;
        const std::int64_t trials =
            std::min<std::int64_t>(cfg.samples, 100000);
        const Matrix u = random_unitary(rng, d);
        Matrix mean_plain = Matrix::Zero(d, d);
        Matrix mean_conj = Matrix::Zero(d, d);
        RngState ra = RngState::for_worker(rng.seed(), 1);
        RngState rb = RngState::for_worker(rng.seed(), 2);
        for (std::int64_t i = 0; i < trials; ++i) {
          mean_plain += haar_sample(d, n, ra).matrix();
          mean_conj += u * haar_sample(d, n, rb).matrix() * u.adjoint();
        }
        mean_plain /= static_cast<double>(trials);
        mean_conj /= static_cast<double>(trials);
        const double residual =
            (mean_plain - mean_conj).cwiseAbs().maxCoeff();
        return CaseOutcome{residual, 4.0 / std::sqrt(double(trials))};
      });
  add("haar-mean-schur", "schur-identity", [](const SuiteConfig& cfg) {
    RngState rng(case_seed(cfg.seed, "haar-mean-schur"));
    double worst_excess = 0.0;
    for (auto [d, n] : cfg.dim_rank_pairs(quantization_pairs())) {
      MatrixTally tally(d, d);
      RngState local = RngState::for_worker(rng.next_u64(), 0);
      const std::int64_t trials = std::min<std::int64_t>(cfg.samples, 200000);
      for (std::int64_t i = 0; i < trials; ++i)
        tally.add(haar_sample(d, n, local).matrix());
      const double mass = double(d) / double(n);
      const double res =
          (mass * tally.mean() - Matrix::Identity(d, d)).norm();
      worst_excess = std::max(
          worst_excess, res - tally.clt_bound(mass, cfg.tol.mc_sigmas));
    }
    return CaseOutcome{worst_excess, 0.0};
  });
}

void register_symplectic_cases(std::vector<SuiteCase>& out) {
  auto add = [&out](std::string name, std::string anchor,
                    std::function<CaseOutcome(const SuiteConfig&)> fn) {
    out.push_back({"symplectic", std::move(name), std::move(anchor),
                   std::move(fn)});
  };

  add("antisymmetry", "holomorphic-symplectic-form",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "antisymmetry", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              const TangentVector u = unit_tangent(q, rng);
              const TangentVector v = unit_tangent(q, rng);
              return std::max(std::abs(omega(u, v) + omega(v, u)),
                              std::abs(omega(u, u)));
            });
      });
  add("J-invariance", "holomorphic-symplectic-form",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "J-invariance", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              const TangentVector u = unit_tangent(q, rng);
              const TangentVector v = unit_tangent(q, rng);
              return std::abs(omega(apply_J(u), apply_J(v)) - omega(u, v));
            });
      });
  add("K-anti-invariance", "holomorphic-symplectic-form",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "K-anti-invariance", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              const TangentVector u = unit_tangent(q, rng);
              const TangentVector v = unit_tangent(q, rng);
              return std::abs(omega(apply_K(u), apply_K(v)) + omega(u, v));
            });
      });
  add("GL-invariance", "gl-invariance", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, symplectic_pairs(), "GL-invariance", kInstanceTrials, 1e-10,
        [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          const TangentVector u = unit_tangent(q, rng);
          const TangentVector v = unit_tangent(q, rng);
          const Matrix z = random_gl(rng, d, 10.0);
          const Matrix zinv = z.inverse();
          const ProjectionPoint qz =
              ProjectionPoint::trusted(z * q.matrix() * zinv, n);
          const TangentVector uz =
              TangentVector::trusted(qz, z * u.matrix() * zinv);
          const TangentVector vz =
              TangentVector::trusted(qz, z * v.matrix() * zinv);
          return std::abs(omega(uz, vz) - omega(u, v));
        });
  });
  add("eigenbundle-lagrangian", "lagrangian-polarizations",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "eigenbundle-lagrangian",
            kInstanceTrials, cfg.tol.identity,
            [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              auto eig = [&](const TangentVector& w, double sign) {
                return TangentVector::trusted(
                    q, 0.5 * (w.matrix() + sign * apply_K(w).matrix()));
              };
              const TangentVector u = unit_tangent(q, rng);
              const TangentVector v = unit_tangent(q, rng);
              const double plus =
                  std::abs(omega(eig(u, +1.0), eig(v, +1.0)));
              const double minus =
                  std::abs(omega(eig(u, -1.0), eig(v, -1.0)));
              return std::max(plus, minus);
            });
      });
  add("fiber-lagrangian", "lagrangian-polarizations",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "fiber-lagrangian", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              const Matrix& p = q.matrix();
              const Matrix id = Matrix::Identity(d, d);
              const Matrix a = p * gaussian_matrix(rng, d, d) * (id - p);
              const Matrix b = p * gaussian_matrix(rng, d, d) * (id - p);
              return std::abs(omega(TangentVector::trusted(q, a),
                                    TangentVector::trusted(q, b)));
            });
      });
  add("hamiltonian-field-identity", "hamiltonian-field",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "hamiltonian-field-identity",
            kInstanceTrials, cfg.tol.identity,
            [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = random_point(d, n, rng);
              Matrix m = gaussian_matrix(rng, d, d);
              m /= m.norm();
              const TangentVector b = unit_tangent(q, rng);
              const TangentVector field = hamiltonian_field(q, m);
              return std::abs(omega(field, b) - q.tau(m * b.matrix()));
            });
      });
  add("hamiltonian-field-fd", "hamiltonian-field", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, symplectic_pairs(), "hamiltonian-field-fd", 20,
        cfg.tol.fd_accept, [&cfg](Index d, Index n, RngState& rng) {
          // d<M>(B) = tau(MB), probed by differentiating the symbol along
          // the retraction of B.
          const ProjectionPoint q = random_point(d, n, rng);
          Matrix m = gaussian_matrix(rng, d, d);
          m /= m.norm();
          const TangentVector b = unit_tangent(q, rng);
          const double h = cfg.tol.fd_step;
          const Complex plus =
              retract(q, b, h).tau(retract(q, b, h).matrix() * m);
          const Complex minus =
              retract(q, b, -h).tau(retract(q, b, -h).matrix() * m);
          const Complex fd = (plus - minus) / (2.0 * h);
          return std::abs(fd - q.tau(m * b.matrix()));
        });
  });
  add("poisson-morphism", "algebra-morphism", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, symplectic_pairs(), "poisson-morphism", kInstanceTrials,
        cfg.tol.identity, [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          Matrix m = gaussian_matrix(rng, d, d);
          m /= m.norm();
          Matrix nn = gaussian_matrix(rng, d, d);
          nn /= nn.norm();
          const Complex lhs = expectation(m * nn - nn * m, q);
          const Complex rhs = kImag * poisson_bracket(m, nn, q);
          return std::abs(lhs - rhs);
        });
  });
  add("poisson-pauli-value", "algebra-morphism", [](const SuiteConfig& cfg) {
    (void)cfg;
    Matrix sx(2, 2), sy(2, 2), q(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    q << 1, 0, 0, 0;
    const ProjectionPoint p(q, 1);
    const Complex bracket = kImag * poisson_bracket(sx, sy, p);
    return CaseOutcome{std::abs(bracket - Complex(0.0, 2.0)), 1e-12};
  });
  add("lie-morphism-exact", "algebra-morphism", [](const SuiteConfig& cfg) {
    return max_over_grid(
        cfg, symplectic_pairs(), "lie-morphism-exact", kInstanceTrials, 1e-13,
        [](Index d, Index n, RngState& rng) {
          const ProjectionPoint q = random_point(d, n, rng);
          Matrix m = gaussian_matrix(rng, d, d);
          m /= m.norm();
          Matrix nn = gaussian_matrix(rng, d, d);
          nn /= nn.norm();
          const Matrix& p = q.matrix();
          auto br = [](const Matrix& a, const Matrix& b) {
            return (a * b - b * a).eval();
          };
          // Bracket of the fields q -> i[q,M] via directional derivatives
          // versus i times the field of [M,N]; equal by the Jacobi identity.
          const Matrix way1 = -br(br(p, m), nn) + br(br(p, nn), m);
          const Matrix way2 = br(br(m, nn), p);
          return (way1 - way2).norm();
        });
  });
  add("nondegeneracy-certificate", "nondegeneracy",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "nondegeneracy-certificate"));
        double min_cert = std::numeric_limits<double>::max();
        for (auto [d, n] : cfg.dim_rank_pairs(symplectic_pairs())) {
          if (d > 5) continue;  // Gram assembly grows fast
          for (int t = 0; t < 25; ++t) {
            const ProjectionPoint q = random_point(d, n, rng);
            min_cert = std::min(min_cert, nondegeneracy_certificate(q));
          }
        }
        return CaseOutcome{-min_cert, -1e-12};
      });
  add("certificate-unitary-invariance", "nondegeneracy",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "certificate-unitary-invariance", 10,
            1e-10, [](Index d, Index n, RngState& rng) {
              if (d > 4) return 0.0;
              const ProjectionPoint q = random_point(d, n, rng);
              const Matrix u = random_unitary(rng, d);
              const ProjectionPoint qu = ProjectionPoint::trusted(
                  u * q.matrix() * u.adjoint(), n);
              return std::abs(nondegeneracy_certificate(q) -
                              nondegeneracy_certificate(qu));
            });
      });
  add("kahler-zero-section", "kahler-zero-section",
      [](const SuiteConfig& cfg) {
        return max_over_grid(
            cfg, symplectic_pairs(), "kahler-zero-section", kInstanceTrials,
            cfg.tol.identity, [](Index d, Index n, RngState& rng) {
              const ProjectionPoint q = haar_sample(d, n, rng);
              auto herm_tangent = [&](RngState& r) {
                const TangentVector w = unit_tangent(q, r);
                return TangentVector::trusted(
                    q, 0.5 * (w.matrix() + w.matrix().adjoint()));
              };
              const TangentVector u = herm_tangent(rng);
              const TangentVector v = herm_tangent(rng);
              const KahlerCheck chk = kahler_zero_section_check(q, u, v);
              double r = std::abs(std::imag(chk.omega_value));
              r = std::max(r, std::abs(chk.omega_value - chk.metric_form));
              return r;
            });
      });
  add("zero-section-metric-positivity", "kahler-zero-section",
      [](const SuiteConfig& cfg) {
        RngState rng(case_seed(cfg.seed, "zero-section-metric-positivity"));
        double min_norm = std::numeric_limits<double>::max();
        for (auto [d, n] : cfg.dim_rank_pairs(symplectic_pairs())) {
          for (int t = 0; t < kInstanceTrials; ++t) {
            const ProjectionPoint q = haar_sample(d, n, rng);
            TangentVector w = unit_tangent(q, rng);
            Matrix h = 0.5 * (w.matrix() + w.matrix().adjoint());
            if (h.norm() < 1e-6) continue;
            h /= h.norm();
            min_norm =
                std::min(min_norm, std::real(q.tau(h * h)));
          }
        }
        return CaseOutcome{-min_norm, -1e-12};
      });
}

}  // namespace grasq::detail
