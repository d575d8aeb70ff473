// Command-line driver: composes verification suites, path-convergence
// studies and the closed-form example checks, and emits machine-readable
// reports. Exit codes: 0 all cases pass, 1 at least one failure, 2 usage.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grasq/report.hpp"
#include "grasq/suites.hpp"

namespace {

using namespace grasq;

void apply_tol_overrides(const std::string& spec, Tolerances& tol) {
  if (spec.empty()) return;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string item = spec.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("bad --tol item (want name=value): " + item);
    const std::string name = item.substr(0, eq);
    const double value = std::stod(item.substr(eq + 1));
    if (name == "construction") tol.construction = value;
    else if (name == "identity") tol.identity = value;
    else if (name == "fd_step") tol.fd_step = value;
    else if (name == "fd_accept") tol.fd_accept = value;
    else if (name == "mc_sigmas") tol.mc_sigmas = value;
    else if (name == "rank_cutoff") tol.rank_cutoff = value;
    else throw UsageError("unknown tolerance name: " + name);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
}

void print_report(const VerificationReport& report) {
  for (const auto& c : report.cases) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << "  residual=" << c.residual << "  bound=" << c.bound
              << "  (" << c.runtime_ms << " ms)\n";
  }
  std::cout << (report.aggregate_pass ? "ALL CASES PASS" : "FAILURES PRESENT")
            << " (" << report.cases.size() << " cases)\n";
}

int emit(const VerificationReport& report, const std::string& out,
         const std::string& format) {
  const std::string payload = format == "csv-summary"
                                  ? report_to_csv_summary(report)
                                  : report_to_json(report);
  if (out.empty()) {
    std::cout << payload;
  } else {
    write_file(out, payload);
    std::cout << "report written to " << out << "\n";
  }
  return report.aggregate_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of projection-model quantization"};
  app.require_subcommand(1);

  SuiteConfig config;
  std::string tol_spec;
  std::string format = "json";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", config.suite, "suite name")
      ->default_val("all");
  verify->add_option("--dim", config.dims, "dimension list")
      ->delimiter(',');
  verify->add_option("--rank", config.ranks, "rank list")->delimiter(',');
  verify->add_option("--samples", config.samples, "Monte Carlo sample count");
  verify->add_option("--seed", config.seed, "RNG seed");
  verify->add_option("--tol", tol_spec,
                     "tolerance overrides name=value[,name=value...]");
  verify->add_option("--workers", config.workers, "worker count");
  verify->add_option("--out", config.out_path, "report output path");
  verify->add_option("--format", format, "json or csv-summary")
      ->check(CLI::IsMember({"json", "csv-summary"}));

  std::string geometry = "sphere_octant";
  std::vector<int> steps;
  std::string path_out;
  auto* path = app.add_subcommand("path", "path-transport convergence study");
  path->add_option("--geometry", geometry, "sphere_octant or unitary_flow");
  path->add_option("--steps", steps, "step counts")->delimiter(',');
  path->add_option("--out", path_out, "CSV output path");

  std::string which;
  double hbar = 0.5;
  int quad = 64;
  auto* examples = app.add_subcommand("examples", "closed-form geometries");
  examples->add_option("model", which, "flat or sphere")
      ->required()
      ->check(CLI::IsMember({"flat", "sphere"}));
  examples->add_option("--hbar", hbar, "flat-model parameter");
  examples->add_option("--quad", quad, "quadrature order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      apply_tol_overrides(tol_spec, config.tol);
      const VerificationReport report = run_suite(config);
      print_report(report);
      return emit(report, config.out_path, format);
    }
    if (path->parsed()) {
      const std::string csv = path_study_csv(geometry, steps);
      if (path_out.empty()) {
        std::cout << csv;
      } else {
        write_file(path_out, csv);
        std::cout << "series written to " << path_out << "\n";
      }
      return 0;
    }
    if (examples->parsed()) {
      const VerificationReport report = which == "flat"
                                            ? run_flat_examples(hbar, quad)
                                            : run_sphere_examples(quad);
      print_report(report);
      if (which == "sphere") {
        std::cout << "\nthree-point product sweep (no asserted ground truth):\n"
                  << delta_product_sweep_table();
      }
      return report.aggregate_pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
