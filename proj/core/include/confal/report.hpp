#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace confal {

// One checked law instance: a named law evaluated at a concrete generator
// tuple, with the canonical printed residual ("0" when the law holds there).
struct LawResult {
  std::string law;
  std::string tuple;
  std::string residual;
  bool pass = false;
};

// Outcome of running one checker suite: every law/tuple residual plus the
// aggregate verdict (overall is true iff every residual printed as zero).
struct CheckReport {
  std::string suite;
  std::vector<LawResult> laws;
  bool overall = true;

  void add(LawResult result);
  std::vector<const LawResult*> failures() const;
  std::size_t failure_count() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text(bool verbose = false) const;
};

// Aggregate serialization for a batch of suites run against one algebra.
nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports, bool verbose = false);

}  // namespace confal
