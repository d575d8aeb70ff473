#include "grasq/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grasq {

using ordered_json = nlohmann::ordered_json;

std::vector<std::pair<Index, Index>> SuiteConfig::dim_rank_pairs(
    const std::vector<std::pair<Index, Index>>& fallback) const {
  std::vector<std::pair<Index, Index>> out;
  for (Index d : dims) {
    if (d < 2 || d > 16)
      throw UsageError("dimension out of range [2,16]: " + std::to_string(d));
    if (ranks.empty()) {
      for (Index n = 1; n < d; ++n) out.emplace_back(d, n);
    } else {
      for (Index n : ranks)
        if (n >= 1 && n < d) out.emplace_back(d, n);
    }
  }
  if (out.empty()) out = fallback;
  for (auto [d, n] : out)
    if (!(1 <= n && n < d && d <= 16))
      throw UsageError("invalid (d, n) pair: (" + std::to_string(d) + ", " +
                       std::to_string(n) + ")");
  return out;
}

void VerificationReport::finalize() {
  aggregate_pass = true;
  for (const auto& c : cases) aggregate_pass = aggregate_pass && c.pass;
}

namespace {

ordered_json config_to_json(const SuiteConfig& c) {
  ordered_json j;
  j["suite"] = c.suite;
  j["dims"] = c.dims;
  j["ranks"] = c.ranks;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["tolerances"] = {{"construction", c.tol.construction},
                     {"identity", c.tol.identity},
                     {"fd_step", c.tol.fd_step},
                     {"fd_accept", c.tol.fd_accept},
                     {"mc_sigmas", c.tol.mc_sigmas},
                     {"rank_cutoff", c.tol.rank_cutoff}};
  j["out"] = c.out_path;
  return j;
}

SuiteConfig config_from_json(const ordered_json& j) {
  SuiteConfig c;
  c.suite = j.at("suite").get<std::string>();
  c.dims = j.at("dims").get<std::vector<Index>>();
  c.ranks = j.at("ranks").get<std::vector<Index>>();
  c.samples = j.at("samples").get<std::int64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.workers = j.at("workers").get<unsigned>();
  const auto& t = j.at("tolerances");
  c.tol.construction = t.at("construction").get<double>();
  c.tol.identity = t.at("identity").get<double>();
  c.tol.fd_step = t.at("fd_step").get<double>();
  c.tol.fd_accept = t.at("fd_accept").get<double>();
  c.tol.mc_sigmas = t.at("mc_sigmas").get<double>();
  c.tol.rank_cutoff = t.at("rank_cutoff").get<double>();
  c.out_path = j.at("out").get<std::string>();
  return c;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = report.tool_version;
  j["suite"] = report.suite;
  j["config"] = config_to_json(report.config);
  j["cases"] = ordered_json::array();
  for (const auto& c : report.cases) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["paper_anchor"] = c.anchor;
    jc["residual"] = c.residual;
    jc["bound"] = c.bound;
    jc["pass"] = c.pass;
    jc["runtime_ms"] = c.runtime_ms;
    j["cases"].push_back(jc);
  }
  j["aggregate_pass"] = report.aggregate_pass;
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  if (j.at("schema_version").get<int>() != kReportSchemaVersion)
    throw IoError("report_from_json: unsupported schema version");
  VerificationReport r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.suite = j.at("suite").get<std::string>();
  r.config = config_from_json(j.at("config"));
  for (const auto& jc : j.at("cases")) {
    CaseResult c;
    c.name = jc.at("name").get<std::string>();
    c.anchor = jc.at("paper_anchor").get<std::string>();
    c.residual = jc.at("residual").get<double>();
    c.bound = jc.at("bound").get<double>();
    c.pass = jc.at("pass").get<bool>();
    c.runtime_ms = jc.at("runtime_ms").get<double>();
    r.cases.push_back(std::move(c));
  }
  r.aggregate_pass = j.at("aggregate_pass").get<bool>();
  return r;
}

std::string report_to_csv_summary(const VerificationReport& report) {
  std::ostringstream out;
  out << "name,residual,bound,pass\n";
  for (const auto& c : report.cases) {
    ordered_json row = {c.residual, c.bound};  // shortest round-trip floats
    out << c.name << "," << row[0].dump() << "," << row[1].dump() << ","
        << (c.pass ? "true" : "false") << "\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << contents;
  if (!out) throw IoError("write failed: " + path);
}

bool report_equal(const VerificationReport& a, const VerificationReport& b) {
  return report_to_json(a) == report_to_json(b);
}

}  // namespace grasq
