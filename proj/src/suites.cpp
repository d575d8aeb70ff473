#include "grasq/suites.hpp"

#include <chrono>
#include <sstream>

#include "grasq/sphere_model.hpp"
#include "grasq/transport.hpp"
#include "suite_cases.hpp"

namespace grasq {

std::uint64_t case_seed(std::uint64_t run_seed, const std::string& name) {
  // FNV-1a, then mixed with the run seed.
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return run_seed ^ h;
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {
      "tessarine", "symplectic", "quantization", "propagator",
      "path",      "flat",       "sphere",       "hyperkahler",
      "all"};
  return suites;
}

const std::vector<std::string>& anchor_registry() {
  static const std::vector<std::string> anchors = {
      "projection-model",        "tangent-relation",
      "cotangent-splitting",     "tessarine-structures",
      "totally-real-zero-section", "adjoint-involution",
      "vertical-eigenbundle",    "haar-invariant-measure",
      "holomorphic-symplectic-form", "gl-invariance",
      "lagrangian-polarizations", "kahler-zero-section",
      "expectation-map",         "hamiltonian-field",
      "nondegeneracy",           "algebra-morphism",
      "star-product",            "anticommuting-structure",
      "tautological-bundle",     "propagator-section",
      "propagator-splitting",    "propagator-polarization",
      "three-point-function",    "curvature-trace",
      "schur-identity",          "convolution-idempotent",
      "path-integral-limit",     "hilbert-space-sections",
      "unitary-equivalence",     "kostant-souriau",
      "pointwise-quantization",  "quantization-duality",
      "dimension-volume",        "adjointness",
      "group-orbit",             "propagator-axioms",
      "probability-density",     "equivalence-round-trip",
      "flat-kernel",             "flat-connection",
      "tessarine-r4",            "complexified-sphere",
      "disk-hyperboloid",        "delta-product",
      "rng-plumbing"};
  return anchors;
}

const std::vector<SuiteCase>& case_registry() {
  static const std::vector<SuiteCase> cases = [] {
    std::vector<SuiteCase> out;
    detail::register_tessarine_cases(out);
    detail::register_symplectic_cases(out);
    detail::register_quantization_cases(out);
    detail::register_propagator_cases(out);
    detail::register_path_cases(out);
    detail::register_flat_cases(out);
    detail::register_sphere_cases(out);
    detail::register_hyperkahler_cases(out);
    return out;
  }();
  return cases;
}

VerificationReport run_suite(const SuiteConfig& config) {
  bool known = false;
  for (const auto& s : known_suites()) known = known || s == config.suite;
  if (!known) throw UsageError("unknown suite: " + config.suite);

  VerificationReport report;
  report.suite = config.suite;
  report.config = config;
  for (const auto& c : case_registry()) {
    if (config.suite != "all" && c.suite != config.suite) continue;
    CaseResult result;
    result.name = c.suite + "/" + c.name;
    result.anchor = c.anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      const CaseOutcome outcome = c.run(config);
      result.residual = outcome.residual;
      result.bound = outcome.bound;
      result.pass = outcome.residual <= outcome.bound;
    } catch (const std::exception& e) {
      result.residual = 9.9e99;  // sentinel; keeps the JSON numeric
      result.bound = 0.0;
      result.pass = false;
      result.name += std::string(" [error: ") + e.what() + "]";
    }
    const auto stop = std::chrono::steady_clock::now();
    result.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    report.cases.push_back(std::move(result));
  }
  report.finalize();
  return report;
}

namespace {

PathSpec octant_loop(int steps) {
  // North pole -> (1,0,0) -> (0,1,0) -> north pole: three quarter-circle
  // geodesics enclosing one octant (solid angle pi/2).
  std::vector<ProjectionPoint> waypoints = {
      sphere_projection(SpherePoint(0, 0, 1)),
      sphere_projection(SpherePoint(1, 0, 0)),
      sphere_projection(SpherePoint(0, 1, 0)),
      sphere_projection(SpherePoint(0, 0, 1))};
  return PathSpec::zero_section_geodesics(std::move(waypoints), steps);
}

PathSpec study_path(const std::string& geometry, int steps) {
  if (geometry == "sphere_octant") return octant_loop(steps);
  if (geometry == "unitary_flow") {
    RngState rng(1871);
    return PathSpec::unitary_flow(haar_sample(3, 1, rng),
                                  gaussian_skew_hermitian(rng, 3), steps);
  }
  throw UsageError("unknown path geometry: " + geometry);
}

std::string fmt_complex(Complex z) {
  std::ostringstream s;
  s << std::scientific << z.real() << (z.imag() < 0 ? "-" : "+")
    << std::abs(z.imag()) << "j";
  return s.str();
}

}  // namespace

std::string path_study_csv(const std::string& geometry,
                           const std::vector<int>& step_counts) {
  std::ostringstream out;
  out << "m,discrete_vs_ode,holonomy_phase\n";
  if (step_counts.empty()) return out.str();
  const PathSpec reference = study_path(geometry, 2);
  const PropagatorMap ode = ode_transport(reference.with_steps(2), 4096);
  for (int m : step_counts) {
    const PropagatorMap discrete = discrete_transport(reference.with_steps(m));
    const double err = (discrete.matrix() - ode.matrix()).norm();
    out << m << "," << err << "," << holonomy_phase(discrete) << "\n";
  }
  return out.str();
}

std::string delta_product_sweep_table() {
  const SpherePoint p1 = SpherePoint::real_locus(0.4, 0.3);
  const SpherePoint p2 = SpherePoint::real_locus(1.1, 2.0);
  const SpherePoint p3 = SpherePoint::real_locus(2.2, 4.4);
  std::ostringstream out;
  out << "chart_factor,reverse_cycle,conjugate_kernel,delta_sphere,"
         "delta_disk,product,abs_product_minus_1\n";
  for (const auto& [cfg, res] : delta_product_sweep(p1, p2, p3)) {
    out << (cfg.chart_factor.imag() > 0 ? "+i" : "-i") << ","
        << (cfg.reverse_cycle ? "reversed" : "forward") << ","
        << (cfg.conjugate_kernel ? "conjugated" : "plain") << ","
        << fmt_complex(res.delta_sphere) << "," << fmt_complex(res.delta_disk)
        << "," << fmt_complex(res.product) << "," << std::scientific
        << std::abs(res.product - 1.0) << "\n";
  }
  return out.str();
}

}  // namespace grasq
