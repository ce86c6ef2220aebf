#pragma once

#include <string_view>
#include <vector>

#include "reactor/event.hpp"

namespace reactor {

/// Parses an event script: one event per line, either `tick` or
/// `key <name>`, where <name> is a key name or `space`. Blank lines and lines
/// starting with '#' are skipped. Throws MalformedScript naming the line.
std::vector<Event> parse_event_script(std::string_view text);

}  // namespace reactor
