#include "reactor/display.hpp"

namespace reactor {

std::string_view to_string(CloseReason reason) {
  switch (reason) {
    case CloseReason::Stopped:
      return "stopped";
    case CloseReason::Interrupted:
      return "interrupted";
    case CloseReason::Exhausted:
      return "exhausted";
    case CloseReason::Failed:
      return "failed";
  }
  return "?";
}

ScriptedDisplay::ScriptedDisplay(std::vector<Event> events) {
  for (auto& e : events) bursts_.push_back({std::move(e)});
}

ScriptedDisplay ScriptedDisplay::with_bursts(std::vector<std::vector<Event>> bursts) {
  ScriptedDisplay d;
  for (auto& b : bursts) {
    if (!b.empty()) d.bursts_.emplace_back(b.begin(), b.end());
  }
  return d;
}

void ScriptedDisplay::session_opened(const SessionInfo& info) {
  session_log_.push_back("open " + std::to_string(info.depth));
}

void ScriptedDisplay::session_closed(std::size_t depth, CloseReason reason) {
  session_log_.push_back("close " + std::to_string(depth) + " " +
                         std::string(to_string(reason)));
}

Poll ScriptedDisplay::next_event(std::optional<Clock::time_point>) {
  if (!arrived_.empty()) return poll();
  if (bursts_.empty()) return Poll::exhausted();
  arrived_ = std::move(bursts_.front());
  bursts_.pop_front();
  return poll();
}

Poll ScriptedDisplay::poll() {
  if (arrived_.empty()) return Poll::idle();
  Event e = std::move(arrived_.front());
  arrived_.pop_front();
  return Poll::of(std::move(e));
}

std::size_t ScriptedDisplay::remaining() const {
  std::size_t n = arrived_.size();
  for (const auto& b : bursts_) n += b.size();
  return n;
}

}  // namespace reactor
