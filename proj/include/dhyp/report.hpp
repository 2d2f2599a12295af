#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dhyp {

// One verification record. expected/observed are preformatted strings so the
// JSON schema stays uniform across commands.
struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

// Report of one command run. verdict is pass iff every check passes.
// JSON serialization is fully determined by (config, seed): checks are sorted
// by name and the elapsed_ms field is pinned to 0 in JSON output (the measured
// time appears only in the text rendering, which is not the stable contract).
struct Report {
  std::string command;
  nlohmann::ordered_json params;
  std::vector<Check> checks;
  long long elapsed_ms = 0;

  void add(const std::string& name, const std::string& expected,
           const std::string& observed);
  void add_bool(const std::string& name, bool pass, const std::string& detail = "");
  bool verdict() const;
  void sort_checks();

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace dhyp
