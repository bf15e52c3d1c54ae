#include "hardlearn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hardlearn {

const char* tool_version() { return "0.1.0"; }

void JsonValue::set(const std::string& key, JsonValue v) {
  auto* obj = std::get_if<Object>(&v_);
  if (!obj) {
    throw Error::domain("JsonValue::set on a non-object");
  }
  (*obj)[key] = std::move(v);
}

void JsonValue::push_back(JsonValue v) {
  auto* arr = std::get_if<Array>(&v_);
  if (!arr) {
    throw Error::domain("JsonValue::push_back on a non-array");
  }
  arr->push_back(std::move(v));
}

const JsonValue::Object& JsonValue::as_object() const {
  const auto* obj = std::get_if<Object>(&v_);
  if (!obj) {
    throw Error::domain("JsonValue::as_object on a non-object");
  }
  return *obj;
}

std::string canonical_double(double d) {
  if (!std::isfinite(d)) {
    return "null";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

namespace {

void escape_into(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string JsonValue::dump_canonical() const {
  std::string out;
  std::function<void(const JsonValue&)> dump = [&](const JsonValue& v) {
    std::visit(
        [&](const auto& val) {
          using T = std::decay_t<decltype(val)>;
          if constexpr (std::is_same_v<T, std::nullptr_t>) {
            out += "null";
          } else if constexpr (std::is_same_v<T, bool>) {
            out += val ? "true" : "false";
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            out += std::to_string(val);
          } else if constexpr (std::is_same_v<T, double>) {
            out += canonical_double(val);
          } else if constexpr (std::is_same_v<T, std::string>) {
            escape_into(val, out);
          } else if constexpr (std::is_same_v<T, Array>) {
            out += '[';
            for (std::size_t i = 0; i < val.size(); ++i) {
              if (i) out += ',';
              dump(val[i]);
            }
            out += ']';
          } else {
            out += '{';
            bool first = true;
            for (const auto& [k, child] : val) {  // std::map iterates sorted
              if (!first) out += ',';
              first = false;
              escape_into(k, out);
              out += ':';
              dump(child);
            }
            out += '}';
          }
        },
        v.v_);
  };
  dump(*this);
  return out;
}

std::string ResultRecord::to_canonical_json() const {
  JsonValue root = JsonValue::object();
  root.set("config", config);
  root.set("metrics", metrics);
  root.set("seed", static_cast<std::int64_t>(seed));
  root.set("tool_version", tool_version);
  root.set("wall_time_s", wall_time_s);
  return root.dump_canonical();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error::io("cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw Error::io("write to '" + path + "' failed");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error::io("cannot open '" + path + "' for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void write_header(std::ostream& out, const BatchHeader& h) {
  out << "type=" << h.type << " d=" << h.d << " q=" << h.q;
  if (h.p != 0) {
    out << " p=" << h.p;
  }
  out << " m=" << h.m << "\n";
}

}  // namespace

void write_lwe_batch(std::ostream& out, const BatchHeader& header,
                     const std::function<LweSample()>& next) {
  write_header(out, header);
  for (std::uint64_t i = 0; i < header.m; ++i) {
    const LweSample s = next();
    for (std::size_t j = 0; j < s.a.size(); ++j) {
      if (j) out << ",";
      out << s.a[j];
    }
    out << "," << s.b << "\n";
  }
}

void write_ring_batch(std::ostream& out, const BatchHeader& header,
                      const std::function<RlweSample()>& next) {
  write_header(out, header);
  for (std::uint64_t i = 0; i < header.m; ++i) {
    const RlweSample s = next();
    bool first = true;
    for (std::uint64_t c : s.a.coeffs) {
      if (!first) out << ",";
      first = false;
      out << c;
    }
    for (std::uint64_t c : s.b.coeffs) {
      out << "," << c;
    }
    out << "\n";
  }
}

BatchHeader read_batch_header(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error::io("batch file: missing header");
  }
  BatchHeader h;
  char type[16] = {0};
  if (std::sscanf(line.c_str(), "type=%15s d=%u q=%lu p=%lu m=%lu", type, &h.d, &h.q, &h.p,
                  &h.m) == 5 ||
      std::sscanf(line.c_str(), "type=%15s d=%u q=%lu m=%lu", type, &h.d, &h.q, &h.m) == 4) {
    h.type = type;
    return h;
  }
  throw Error::io("batch file: malformed header '" + line + "'");
}

}  // namespace hardlearn
