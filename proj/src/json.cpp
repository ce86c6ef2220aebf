#include "reactor/json.hpp"

#include <charconv>
#include <cmath>

namespace reactor {

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  if (value == 0) return "0";  // also folds -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

namespace {

void dump_into(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        dump_into(item, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(value.get<double>());
      break;
    default:
      out += value.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

}  // namespace reactor
