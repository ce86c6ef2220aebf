#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace reactor {

enum class EventKind { TimeTick, KeyPress };

std::string_view to_string(EventKind kind);

/// A virtualized stimulus: a clock tick or a key press.
///
/// Key names are either one printable ASCII character ("a", "0", " ") or one
/// of the named keys left, right, up, down, enter, escape, backspace, tab.
class Event {
 public:
  static Event tick() { return Event(EventKind::TimeTick, {}); }
  /// Throws InvalidKey for names outside the key vocabulary.
  static Event key(std::string name);

  EventKind kind() const { return kind_; }
  bool is_tick() const { return kind_ == EventKind::TimeTick; }
  bool is_key() const { return kind_ == EventKind::KeyPress; }
  /// Empty for ticks.
  const std::string& key_name() const { return key_name_; }

  friend bool operator==(const Event&, const Event&) = default;

 private:
  Event(EventKind kind, std::string key_name)
      : kind_(kind), key_name_(std::move(key_name)) {}

  EventKind kind_;
  std::string key_name_;
};

bool is_valid_key_name(std::string_view name);

/// "tick" or "key <name>"; used in diagnostics and the CLI script format.
std::string describe(const Event& event);

using Subscriptions = std::set<EventKind>;

}  // namespace reactor
