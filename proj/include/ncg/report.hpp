#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ncg {

inline constexpr const char* kReportVersion = "1";

enum class CaseStatus { Pass, Fail, Inconclusive, ExceedsTruncation };

std::string to_string(CaseStatus s);

struct CaseResult {
  std::string name;
  CaseStatus status = CaseStatus::Pass;
  nlohmann::json witness;  // required for Fail
  std::uint64_t elapsed_ms = 0;
};

/// Aggregated verification report. Serialization is byte-stable for a fixed
/// (input, seed): cases are sorted by name and timing values are emitted
/// only on request.
struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  std::uint64_t seed = 0;
  std::string version = kReportVersion;

  void add_pass(std::string name, std::uint64_t elapsed_ms = 0);
  void add_fail(std::string name, nlohmann::json witness, std::uint64_t elapsed_ms = 0);
  void add(std::string name, CaseStatus status, nlohmann::json witness = {},
           std::uint64_t elapsed_ms = 0);

  bool all_ok() const;  // no Fail entry
  nlohmann::json to_json(bool with_timing = false) const;
};

/// Merges several suite reports into one "all" report.
Report merge_reports(const std::vector<Report>& reports, std::uint64_t seed);

}  // namespace ncg
