#include "ncg/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "Pass";
    case CaseStatus::Fail: return "Fail";
    case CaseStatus::Inconclusive: return "Inconclusive";
    case CaseStatus::ExceedsTruncation: return "ExceedsTruncation";
  }
  return "Fail";
}

void Report::add_pass(std::string name, std::uint64_t elapsed_ms) {
  add(std::move(name), CaseStatus::Pass, {}, elapsed_ms);
}

void Report::add_fail(std::string name, nlohmann::json witness, std::uint64_t elapsed_ms) {
  add(std::move(name), CaseStatus::Fail, std::move(witness), elapsed_ms);
}

void Report::add(std::string name, CaseStatus status, nlohmann::json witness,
                 std::uint64_t elapsed_ms) {
  if (status == CaseStatus::Fail && witness.is_null())
    witness = nlohmann::json{{"detail", "failure without explicit witness"}};
  cases.push_back(CaseResult{std::move(name), status, std::move(witness), elapsed_ms});
}

bool Report::all_ok() const {
  return std::none_of(cases.begin(), cases.end(),
                      [](const CaseResult& c) { return c.status == CaseStatus::Fail; });
}

nlohmann::json Report::to_json(bool with_timing) const {
  std::vector<const CaseResult*> sorted;
  sorted.reserve(cases.size());
  for (const auto& c : cases) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const CaseResult* a, const CaseResult* b) { return a->name < b->name; });
  nlohmann::json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["version"] = version;
  out["cases"] = nlohmann::json::array();
  for (const CaseResult* c : sorted) {
    nlohmann::json jc;
    jc["name"] = c->name;
    jc["status"] = to_string(c->status);
    if (!c->witness.is_null()) jc["witness"] = c->witness;
    jc["elapsed_ms"] = with_timing ? c->elapsed_ms : 0;
    out["cases"].push_back(std::move(jc));
  }
  return out;
}

Report merge_reports(const std::vector<Report>& reports, std::uint64_t seed) {
  Report all;
  all.suite = "all";
  all.seed = seed;
  for (const Report& r : reports)
    for (const CaseResult& c : r.cases) {
      CaseResult prefixed = c;
      prefixed.name = r.suite + "." + c.name;
      all.cases.push_back(std::move(prefixed));
    }
  return all;
}

}  // namespace ncg
