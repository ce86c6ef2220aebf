#include "reactor/script.hpp"

#include <sstream>
#include <string>

#include "reactor/error.hpp"

namespace reactor {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<Event> parse_event_script(std::string_view text) {
  std::vector<Event> events;
  std::istringstream stream{std::string(text)};
  std::string raw;
  for (std::size_t line_no = 1; std::getline(stream, raw); ++line_no) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return MalformedScript("line " + std::to_string(line_no) + ": " + why + " in '" +
                             std::string(line) + "'");
    };
    if (line == "tick") {
      events.push_back(Event::tick());
    } else if (line.starts_with("key ") || line.starts_with("key\t")) {
      std::string_view name = trim(line.substr(4));
      if (name == "space") name = " ";
      if (!is_valid_key_name(name)) throw fail("invalid key name");
      events.push_back(Event::key(std::string(name)));
    } else {
      throw fail("expected 'tick' or 'key <name>'");
    }
  }
  return events;
}

}  // namespace reactor
