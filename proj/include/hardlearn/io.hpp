#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hardlearn/lattice.hpp"

namespace hardlearn {

// Minimal JSON document with a canonical dump: object keys sorted, floats
// printed with 17 significant digits, no insignificant whitespace. Two
// dumps of equal documents are byte-identical, which is what makes the
// reproducibility contract testable.
class JsonValue {
public:
  using Array = std::vector<JsonValue>;
  using Object = std::map<std::string, JsonValue>;

  JsonValue() : v_(nullptr) {}
  JsonValue(std::nullptr_t) : v_(nullptr) {}
  JsonValue(bool b) : v_(b) {}
  JsonValue(std::int64_t i) : v_(i) {}
  JsonValue(double d) : v_(d) {}
  JsonValue(const char* s) : v_(std::string(s)) {}
  JsonValue(std::string s) : v_(std::move(s)) {}

  static JsonValue object() { return JsonValue(Object{}); }
  static JsonValue array() { return JsonValue(Array{}); }

  void set(const std::string& key, JsonValue v);
  void push_back(JsonValue v);
  std::string dump_canonical() const;

  const Object& as_object() const;

private:
  explicit JsonValue(Object o) : v_(std::move(o)) {}
  explicit JsonValue(Array a) : v_(std::move(a)) {}

  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;
};

std::string canonical_double(double d);

// Experiment output envelope. Metrics are a pure function of (config,
// seed); wall time is informational and excluded from determinism checks.
struct ResultRecord {
  std::string tool_version;
  JsonValue config = JsonValue::object();
  std::uint64_t seed = 0;
  JsonValue metrics = JsonValue::object();
  double wall_time_s = 0.0;

  std::string to_canonical_json() const;
};

const char* tool_version();

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Sample-batch files, streamed one sample at a time:
//   header "type=<lwe|rlwe|rlwr> d=.. q=.. [p=..] m=.."
//   then per line the a-part followed by the b-part, comma-separated.
struct BatchHeader {
  std::string type;
  std::uint32_t d = 0;
  std::uint64_t q = 0;
  std::uint64_t p = 0;  // 0 when absent
  std::uint64_t m = 0;
};

void write_lwe_batch(std::ostream& out, const BatchHeader& header,
                     const std::function<LweSample()>& next);
void write_ring_batch(std::ostream& out, const BatchHeader& header,
                      const std::function<RlweSample()>& next);
BatchHeader read_batch_header(std::istream& in);

}  // namespace hardlearn
