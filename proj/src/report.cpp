#include "halfspace/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hs {

std::string RunConfig::get(const std::string& key, const std::string& dflt) const {
  auto it = kv.find(key);
  return it == kv.end() ? dflt : it->second;
}

double RunConfig::get_num(const std::string& key, double dflt) const {
  auto it = kv.find(key);
  if (it == kv.end()) return dflt;
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(it->second, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != it->second.size())
    throw std::runtime_error("config value for '" + key + "' is not a number");
  return v;
}

int RunConfig::get_int(const std::string& key, int dflt) const {
  auto it = kv.find(key);
  if (it == kv.end()) return dflt;
  return std::stoi(it->second);
}

namespace {
std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}
}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key");
    if (!section.empty()) key = section + "." + key;
    cfg.kv[key] = val;
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

double report_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

void Report::check(const std::string& name, double expected, double observed,
                   double tolerance, const std::string& note) {
  CheckResult c;
  c.name = name;
  c.expected = expected;
  c.observed = observed;
  c.tolerance = tolerance;
  c.pass = std::abs(observed - expected) <= tolerance;
  c.note = note;
  checks.push_back(std::move(c));
}

void Report::check_flag(const std::string& name, bool pass, const std::string& note) {
  CheckResult c;
  c.name = name;
  c.expected = 1;
  c.observed = pass ? 1 : 0;
  c.tolerance = 0;
  c.pass = pass;
  c.note = note;
  checks.push_back(std::move(c));
}

bool Report::overall() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = schema;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config_echo;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["expected"] = report_precision(c.expected);
    cj["observed"] = report_precision(c.observed);
    cj["tolerance"] = report_precision(c.tolerance);
    cj["pass"] = c.pass;
    if (!c.note.empty()) cj["note"] = c.note;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["overall_pass"] = overall();
  if (!extra.is_null()) j["detail"] = extra;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

nlohmann::json weight_json(const std::string& expr, double value) {
  nlohmann::json j;
  j["expr"] = expr;
  j["value"] = report_precision(value);
  return j;
}

}  // namespace hs
