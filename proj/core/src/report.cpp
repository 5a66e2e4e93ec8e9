#include "confal/report.hpp"

#include <sstream>

namespace confal {

void CheckReport::add(LawResult result) {
  overall = overall && result.pass;
  laws.push_back(std::move(result));
}

std::vector<const LawResult*> CheckReport::failures() const {
  std::vector<const LawResult*> out;
  for (const auto& r : laws) {
    if (!r.pass) out.push_back(&r);
  }
  return out;
}

std::size_t CheckReport::failure_count() const { return failures().size(); }

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["overall"] = overall;
  j["laws"] = nlohmann::ordered_json::array();
  for (const auto& r : laws) {
    nlohmann::ordered_json entry;
    entry["law"] = r.law;
    entry["tuple"] = r.tuple;
    entry["residual"] = r.residual;
    entry["pass"] = r.pass;
    j["laws"].push_back(std::move(entry));
  }
  return j;
}

std::string CheckReport::to_text(bool verbose) const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (overall ? "PASS" : "FAIL") << " (" << laws.size()
     << " checks, " << failure_count() << " failures)\n";
  for (const auto& r : laws) {
    if (!verbose && r.pass) continue;
    os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.law << " " << r.tuple
       << ": " << r.residual << "\n";
  }
  return os.str();
}

nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json j;
  bool all = true;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.overall;
    j["suites"].push_back(r.to_json());
  }
  j["overall"] = all;
  return j;
}

std::string reports_to_text(const std::vector<CheckReport>& reports, bool verbose) {
  std::ostringstream os;
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.overall;
    os << r.to_text(verbose);
  }
  os << "overall: " << (all ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace confal
