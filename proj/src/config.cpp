#include "hardlearn/config.hpp"

#include <fstream>
#include <sstream>

namespace hardlearn {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error::usage("config line " + std::to_string(lineno) + ": expected key=value, got '" +
                         stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw Error::usage("config line " + std::to_string(lineno) + ": empty key");
    }
    cfg.values_[key] = value;
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error::io("cannot open config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void ExperimentConfig::apply_override(const std::string& key, const std::string& value) {
  values_[key] = value;
}

bool ExperimentConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::uint64_t ExperimentConfig::get_u64(const std::string& key, std::uint64_t fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw Error::usage("config key '" + key + "': '" + it->second + "' is not an integer");
  }
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw Error::usage("config key '" + key + "': '" + it->second + "' is not a number");
  }
}

Preset resolve_preset(const std::string& name) {
  if (name == "desk-prf") {
    return Preset{name,
                  {{"d", "8"},
                   {"q", "1048576"},
                   {"p", "4"},
                   {"k", "16"},
                   {"sigma", "3"},
                   {"secret_dist", "gaussian"}},
                  ""};
  }
  if (name == "desk-pke") {
    return Preset{name,
                  {{"d", "32"}, {"q", "32768"}, {"m", "300"}, {"sigma", "10"}},
                  ""};
  }
  if (name == "paper-asymptotic") {
    // alpha = 1/sqrt(d) with alpha q >= 2 sqrt(d); sigma = alpha q.
    return Preset{name,
                  {{"d", "64"}, {"q", "8192"}, {"m", "128"}, {"sigma", "1024"}},
                  "paper-asymptotic parameters are asymptotic scalings; at desk scale they "
                  "carry no hardness meaning"};
  }
  throw Error::usage("unknown preset '" + name + "' (available: desk-prf, desk-pke, "
                     "paper-asymptotic)");
}

std::vector<std::string> preset_names() { return {"desk-prf", "desk-pke", "paper-asymptotic"}; }

void apply_preset(ExperimentConfig& config, const Preset& preset) {
  for (const auto& [k, v] : preset.values) {
    if (!config.has(k)) {
      config.apply_override(k, v);
    }
  }
}

}  // namespace hardlearn
