#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

namespace densekit::cli {

// Canonical serialisation: keys sorted (nlohmann's default object is ordered),
// floating point numbers printed at 12 significant digits.
inline void dump_canonical(const nlohmann::json& j, std::string& out) {
  using nlohmann::json;
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_canonical(v, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump_canonical(const nlohmann::json& j) {
  std::string out;
  dump_canonical(j, out);
  return out;
}

}  // namespace densekit::cli
