#include "reactor/event.hpp"

#include <algorithm>
#include <array>

#include "reactor/error.hpp"

namespace reactor {

namespace {

constexpr std::array<std::string_view, 8> kNamedKeys = {
    "left", "right", "up", "down", "enter", "escape", "backspace", "tab"};

}  // namespace

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::TimeTick:
      return "tick";
    case EventKind::KeyPress:
      return "key";
  }
  return "?";
}

bool is_valid_key_name(std::string_view name) {
  if (name.size() == 1) {
    unsigned char c = static_cast<unsigned char>(name[0]);
    return c >= 0x20 && c < 0x7f;
  }
  return std::find(kNamedKeys.begin(), kNamedKeys.end(), name) !=
         kNamedKeys.end();
}

Event Event::key(std::string name) {
  if (!is_valid_key_name(name)) {
    throw InvalidKey("invalid key name '" + name + "'");
  }
  return Event(EventKind::KeyPress, std::move(name));
}

std::string describe(const Event& event) {
  if (event.is_tick()) return "tick";
  return "key " + (event.key_name() == " " ? std::string("space")
                                           : event.key_name());
}

}  // namespace reactor
