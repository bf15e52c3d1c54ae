#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardlearn/error.hpp"

namespace hardlearn {

// Flat key=value experiment configuration. A config plus a master seed
// fully determines every metric an experiment emits.
class ExperimentConfig {
public:
  static ExperimentConfig from_text(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);

  // Flag overrides win over file values.
  void apply_override(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

private:
  std::map<std::string, std::string> values_;
};

// Named parameter sets. "desk-prf" and "desk-pke" are sized for the test
// bench and are NOT asymptotically secure; "paper-asymptotic" carries the
// GapSVP-corollary scaling (alpha = 1/sqrt(d), alpha q >= 2 sqrt(d)) and a
// warning that it is not meaningful at desk scale.
struct Preset {
  std::string name;
  std::map<std::string, std::string> values;
  std::string warning;  // empty when none
};

Preset resolve_preset(const std::string& name);
std::vector<std::string> preset_names();

// Applies a preset under existing config values (explicit keys win).
void apply_preset(ExperimentConfig& config, const Preset& preset);

}  // namespace hardlearn
