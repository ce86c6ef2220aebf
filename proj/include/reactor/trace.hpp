#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "reactor/reactor.hpp"
#include "reactor/table.hpp"

namespace reactor {

/// Converts a state to a table cell. Numbers, booleans, strings, Scenes and
/// Json map to the matching cell kind; any other type is stored as a
/// structured value through its nlohmann `to_json` overload.
template <class S>
Cell state_to_cell(const S& state) {
  if constexpr (std::is_same_v<S, bool>) {
    return Cell(state);
  } else if constexpr (std::is_arithmetic_v<S>) {
    return Cell(static_cast<double>(state));
  } else if constexpr (std::is_convertible_v<const S&, std::string>) {
    return Cell(std::string(state));
  } else if constexpr (std::is_same_v<S, Scene> || std::is_same_v<S, Json>) {
    return Cell(state);
  } else {
    static_assert(std::is_constructible_v<Json, const S&>,
                  "state type needs a to_json(Json&, const S&) overload to appear in tables");
    return Cell(Json(state));
  }
}

/// Starts a fresh observation window: the current state becomes row zero.
template <class S>
Reactor<S> start_trace(const Reactor<S>& r) {
  return detail::ReactorAccess::start_trace(r);
}

/// Stops logging; the log recorded so far stays readable.
template <class S>
Reactor<S> stop_trace(const Reactor<S>& r) {
  return detail::ReactorAccess::stop_trace(r);
}

/// Logged states, oldest first. Throws NotTracing if start_trace was never
/// applied.
template <class S>
std::vector<S> get_trace(const Reactor<S>& r) {
  if (!r.has_trace()) throw NotTracing("reactor was never traced");
  return detail::ReactorAccess::log(r).to_vector();
}

inline TraceTable fresh_trace_table() { return TraceTable({"tick", "state"}); }

/// Rows (i, trace[i]) under the columns "tick" and "state".
template <class S>
TraceTable get_trace_as_table(const Reactor<S>& r) {
  std::vector<S> states = get_trace(r);
  std::vector<TraceTable::Row> rows;
  rows.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    rows.push_back({Cell(i), state_to_cell(states[i])});
  }
  return TraceTable({"tick", "state"}, std::move(rows));
}

}  // namespace reactor
