#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grasq/core.hpp"

namespace grasq {

inline constexpr const char* kToolVersion = "grasq 1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// Run configuration echoed verbatim into every report.
struct SuiteConfig {
  std::string suite = "all";
  std::vector<Index> dims;
  std::vector<Index> ranks;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  Tolerances tol;
  std::string out_path;

  /// All (d, n) combinations with 1 <= n < d <= 16; falls back to `fallback`
  /// when the configured lists produce none.
  std::vector<std::pair<Index, Index>> dim_rank_pairs(
      const std::vector<std::pair<Index, Index>>& fallback) const;
};

struct CaseResult {
  std::string name;
  std::string anchor;  ///< stable claim identifier (see anchor registry)
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseResult> cases;
  bool aggregate_pass = false;
  std::string tool_version = kToolVersion;

  void finalize();  ///< aggregate_pass = all cases pass
};

/// Schema-versioned JSON with stable field ordering. Runtime fields are the
/// only part excluded from the byte-determinism contract.
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

/// name,residual,bound,pass rows, header included, LF line endings.
std::string report_to_csv_summary(const VerificationReport& report);

void write_file(const std::string& path, const std::string& contents);

bool report_equal(const VerificationReport& a, const VerificationReport& b);

}  // namespace grasq
