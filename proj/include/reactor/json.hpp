#pragma once

#include <string>

#include <json.hpp>

namespace reactor {

/// Structured values keep key insertion order so serialized text is stable.
using Json = nlohmann::ordered_json;

/// Compact JSON text with numbers in shortest round-trip form ("10", not "10.0").
/// Non-finite numbers are written as null.
std::string canonical_dump(const Json& value);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace reactor
