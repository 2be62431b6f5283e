#pragma once

#include <string>

#include "json.hpp"

namespace catbase::detail {

// Indented JSON where arrays without nested objects stay on one line, so
// subsets print as [0,2] instead of one element per line.
inline void write_json(const nlohmann::json& value, std::string& out, int depth) {
  auto inline_array = [](const nlohmann::json& a) {
    for (const auto& e : a) {
      if (e.is_object()) return false;
      if (e.is_array()) {
        for (const auto& x : e) {
          if (x.is_structured()) return false;
        }
      }
    }
    return true;
  };
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::json(it.key()).dump() + ": ";
      write_json(it.value(), out, depth + 1);
    }
    out += "\n" + close_pad + "}";
  } else if (value.is_array() && !inline_array(value)) {
    out += "[\n";
    bool first = true;
    for (const auto& e : value) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      write_json(e, out, depth + 1);
    }
    out += "\n" + close_pad + "]";
  } else {
    out += value.dump();
  }
}

inline std::string pretty_json(const nlohmann::json& value) {
  std::string out;
  write_json(value, out, 0);
  out += '\n';
  return out;
}

}  // namespace catbase::detail
