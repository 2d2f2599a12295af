#include "dhyp/report.hpp"

#include <algorithm>
#include <sstream>

namespace dhyp {

void Report::add(const std::string& name, const std::string& expected,
                 const std::string& observed) {
  checks.push_back({name, expected, observed, expected == observed});
}

void Report::add_bool(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, "pass", pass ? "pass" : (detail.empty() ? "fail" : "fail: " + detail), pass});
}

bool Report::verdict() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["params"] = params;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    arr.push_back({{"name", c.name},
                   {"expected", c.expected},
                   {"observed", c.observed},
                   {"verdict", c.pass ? "pass" : "fail"}});
  }
  j["checks"] = arr;
  j["verdict"] = verdict() ? "pass" : "fail";
  // pinned: byte-identical output for identical (config, seed)
  j["elapsed_ms"] = 0;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "params: " << params.dump() << "\n";
  for (const Check& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
       << ": expected " << c.expected << ", observed " << c.observed << "\n";
  }
  os << "verdict: " << (verdict() ? "pass" : "fail") << "\n";
  os << "elapsed_ms: " << elapsed_ms << "\n";
  return os.str();
}

}  // namespace dhyp
