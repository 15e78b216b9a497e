#pragma once
// Run configuration (flat key=value text with [section] headers) and the
// machine-readable JSON report shared by all CLI commands.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hs {

struct RunConfig {
  std::map<std::string, std::string> kv;
  unsigned long long seed = 1;
  std::string out_path;  // empty = stdout
  bool csv = false;

  std::string get(const std::string& key, const std::string& dflt) const;
  double get_num(const std::string& key, double dflt) const;
  int get_int(const std::string& key, int dflt) const;
  bool has(const std::string& key) const { return kv.count(key) > 0; }
};

// Parses `key = value` lines; `[section]` headers prefix later keys as
// `section.key`; `#` starts a comment.  Throws std::runtime_error with
// the offending line number on malformed input.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

struct CheckResult {
  std::string name;
  double expected = 0;
  double observed = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;  // optional free-form detail
};

struct Report {
  std::string command;
  int schema = 1;
  unsigned long long seed = 1;
  std::map<std::string, std::string> config_echo;
  std::vector<CheckResult> checks;
  nlohmann::json extra;  // command-specific payload (series, weights, ...)
  double wall_time_ms = 0;

  void check(const std::string& name, double expected, double observed,
             double tolerance, const std::string& note = "");
  void check_flag(const std::string& name, bool pass, const std::string& note = "");
  bool overall() const;
  nlohmann::json to_json() const;  // numbers rounded to 12 significant digits
};

// Round-trip a double through 12 significant digits (report precision).
double report_precision(double v);

// Serialization helper for exact weights: {"expr": ..., "value": ...}.
nlohmann::json weight_json(const std::string& expr, double value);

}  // namespace hs
