#include "reactor/engine.hpp"

#include <deque>

namespace reactor {

namespace {

using Clock = Display::Clock;

struct Frame {
  Subscriptions kinds;
  Clock::duration period;
  Clock::time_point next_tick;
  std::deque<Event> pending;
  bool interrupt_pending = false;
  bool in_update = false;
};

struct SessionStack {
  Display* display = nullptr;
  std::vector<Frame> frames;
};

thread_local SessionStack tls_stack;

Clock::duration to_duration(double seconds) {
  return std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(seconds));
}

}  // namespace

std::size_t session_depth() { return tls_stack.frames.size(); }

Subscriptions active_subscriptions() {
  if (tls_stack.frames.empty()) return {};
  return tls_stack.frames.back().kinds;
}

namespace detail {

Display* current_display() { return tls_stack.display; }

Session::Session(Display& display, Subscriptions kinds, double seconds_per_tick,
                 bool close_when_stop)
    : display_(&display), close_when_stop_(close_when_stop) {
  SessionStack& stack = tls_stack;
  if (!stack.frames.empty()) {
    if (stack.display != &display) {
      throw EngineReentrancy(
          "a session is already running on this thread with another display");
    }
    Frame& outer = stack.frames.back();
    if (!outer.in_update) {
      throw EngineReentrancy(
          "nested interact is only allowed from on-tick or on-key handlers");
    }
    // Whatever already arrived belongs to the session being suspended.
    for (;;) {
      Poll p = display.poll();
      if (p.kind == Poll::Kind::Event) {
        outer.pending.push_back(std::move(*p.event));
      } else if (p.kind == Poll::Kind::Interrupt) {
        outer.interrupt_pending = true;
      } else {
        break;
      }
    }
  } else {
    stack.display = &display;
  }
  auto period = to_duration(seconds_per_tick);
  stack.frames.push_back(Frame{kinds, period, Clock::now() + period, {}});
  depth_ = stack.frames.size();
  try {
    display.session_opened({depth_, close_when_stop, seconds_per_tick, std::move(kinds)});
  } catch (...) {
    stack.frames.pop_back();
    if (stack.frames.empty()) stack.display = nullptr;
    throw;
  }
}

Session::~Session() {
  if (closed_) return;
  try {
    close(CloseReason::Failed);
  } catch (...) {
  }
}

std::optional<Event> Session::next() {
  Frame& frame = tls_stack.frames.back();
  Display& display = *display_;
  for (;;) {
    if (frame.interrupt_pending) {
      frame.interrupt_pending = false;
      close(CloseReason::Interrupted);
      return std::nullopt;
    }
    if (!frame.pending.empty()) {
      Event e = std::move(frame.pending.front());
      frame.pending.pop_front();
      if (frame.kinds.count(e.kind())) return e;
      continue;
    }
    std::optional<Clock::time_point> deadline;
    const bool ticking = display.realtime() && frame.kinds.count(EventKind::TimeTick);
    if (ticking) deadline = frame.next_tick;
    Poll p = display.next_event(deadline);
    switch (p.kind) {
      case Poll::Kind::Event:
        frame.pending.push_back(std::move(*p.event));
        break;
      case Poll::Kind::Interrupt:
        close(CloseReason::Interrupted);
        return std::nullopt;
      case Poll::Kind::Exhausted:
        if (depth_ > 1) {
          throw ScriptExhaustedInNestedSession(
              "event source ran out while a nested session (depth " +
              std::to_string(depth_) + ") was still running");
        }
        close(CloseReason::Exhausted);
        return std::nullopt;
      case Poll::Kind::Idle: {
        if (!ticking) {
          close(CloseReason::Exhausted);
          return std::nullopt;
        }
        auto now = Clock::now();
        if (now < frame.next_tick) break;
        frame.next_tick += frame.period;
        // Do not replay ticks missed while a handler ran long.
        if (frame.next_tick < now) frame.next_tick = now + frame.period;
        return Event::tick();
      }
    }
  }
}

Session::UpdateScope::UpdateScope(Session& s) : session_(&s) {
  tls_stack.frames[s.depth_ - 1].in_update = true;
}

Session::UpdateScope::~UpdateScope() {
  if (tls_stack.frames.size() >= session_->depth_) {
    tls_stack.frames[session_->depth_ - 1].in_update = false;
  }
}

void Session::finish_stopped() {
  if (display_->holds_after_stop() && !close_when_stop_) {
    for (;;) {
      Poll p = display_->next_event(std::nullopt);
      if (p.kind == Poll::Kind::Interrupt || p.kind == Poll::Kind::Exhausted) break;
    }
  }
  close(CloseReason::Stopped);
}

void Session::close(CloseReason reason) {
  if (closed_) return;
  closed_ = true;
  SessionStack& stack = tls_stack;
  stack.frames.pop_back();
  if (stack.frames.empty()) {
    stack.display = nullptr;
  } else {
    // The resumed session's clock was paused while it was suspended.
    Frame& resumed = stack.frames.back();
    resumed.next_tick = Clock::now() + resumed.period;
  }
  display_->session_closed(depth_, reason);
}

}  // namespace detail
}  // namespace reactor
