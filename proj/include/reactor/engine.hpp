#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "reactor/display.hpp"
#include "reactor/reactor.hpp"
#include "reactor/trace.hpp"

namespace reactor {

/// Number of open sessions on the calling thread; 0 outside interact.
std::size_t session_depth();

/// Event kinds the top session subscribes to; empty when no session is open.
Subscriptions active_subscriptions();

namespace detail {

/// One frame of the calling thread's session stack. Opening a Session pushes
/// a frame and suspends the frame below it; closing pops it.
///
/// New events always queue on the top frame. Events that already arrived for
/// the frame being suspended stay queued on it and are handled, in order,
/// once it is back on top.
class Session {
 public:
  /// Throws EngineReentrancy when a session is already open on this thread
  /// and either `display` differs from that session's display or the caller
  /// is not inside an on-tick/on-key handler.
  Session(Display& display, Subscriptions kinds, double seconds_per_tick,
          bool close_when_stop);
  ~Session();

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Display& display() { return *display_; }

  /// Next event for this session, or nullopt once the session ended by
  /// interrupt or exhaustion (it is then already closed). Throws
  /// ScriptExhaustedInNestedSession when the source runs dry while this
  /// session is nested.
  std::optional<Event> next();

  /// Marks the span in which a state handler runs; nested interact calls are
  /// legal only inside it.
  class UpdateScope {
   public:
    explicit UpdateScope(Session& s);
    ~UpdateScope();

   private:
    Session* session_;
  };

  /// Closes as Stopped, first waiting for an interrupt when the display holds
  /// stopped sessions open and close_when_stop is false.
  void finish_stopped();
  void close(CloseReason reason);
  bool closed() const { return closed_; }

 private:
  Display* display_;
  std::size_t depth_;
  bool close_when_stop_;
  bool closed_ = false;
};

/// Display of the innermost open session on this thread, if any.
Display* current_display();

template <class S>
void show_state(Display& display, const Reactor<S>& r) {
  if (!display.renders()) return;
  display.show(r.handlers().to_draw ? r.handlers().to_draw(r.value()) : empty_scene());
}

}  // namespace detail

/// Runs `r` against `display` until stop_when fires, the user interrupts or
/// the display runs out of events, and returns the final reactor. A stopped
/// reactor comes back unchanged without opening a session.
///
/// A handler may itself call interact: the inner call opens a new session on
/// top of the stack and the handler blocks until it finishes. While it runs,
/// the outer session receives no events and its clock is paused.
template <class S>
Reactor<S> interact(Reactor<S> r, Display& display) {
  if (r.stopped()) return r;
  const HandlerSet<S>& h = r.handlers();
  detail::Session session(display, h.subscriptions(), h.seconds_per_tick,
                          h.close_when_stop);
  detail::show_state(display, r);
  while (auto event = session.next()) {
    {
      detail::Session::UpdateScope scope(session);
      r = react(r, *event);
    }
    detail::show_state(display, r);
    if (r.stopped()) {
      session.finish_stopped();
      break;
    }
  }
  return r;
}

/// Nested form: runs `r` on the display of the enclosing session. Call it
/// from an on-tick or on-key handler. Throws NoActiveSession when no
/// session is open on this thread.
template <class S>
Reactor<S> interact(Reactor<S> r) {
  Display* display = detail::current_display();
  if (display == nullptr) {
    if (r.stopped()) return r;
    throw NoActiveSession(
        "interact without a display needs an enclosing interactive session");
  }
  return interact(std::move(r), *display);
}

/// get_trace_as_table(interact(start_trace(r), display)).
template <class S>
TraceTable interact_trace(const Reactor<S>& r, Display& display) {
  return get_trace_as_table(interact(start_trace(r), display));
}

/// Folds `n` ticks through react.
template <class S>
Reactor<S> after_n_ticks(Reactor<S> r, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) r = react(r, Event::tick());
  return r;
}

/// Headless run of at most `n` ticks that ends early when stop_when fires.
/// Rows run from (0, initial state) to (k, state after k ticks). Throws
/// NoTickHandler if n > 0 and `r` has no on-tick handler.
template <class S>
TraceTable simulate_trace(const Reactor<S>& r, std::size_t n) {
  if (n > 0 && !r.handlers().on_tick) {
    throw NoTickHandler("simulate_trace needs an on-tick handler");
  }
  Reactor<S> t = start_trace(r);
  for (std::size_t i = 0; i < n && !t.stopped(); ++i) t = react(t, Event::tick());
  return get_trace_as_table(t);
}

/// interact(r, ScriptedDisplay(events)). Throws ScriptExhaustedInNestedSession
/// when the script ends while a nested session is still running.
template <class S>
Reactor<S> run_scripted(const Reactor<S>& r, std::vector<Event> events) {
  ScriptedDisplay display(std::move(events));
  return interact(r, display);
}

enum class HandlerKind { OnTick, OnKey, ToDraw, StopWhen, CloseWhenStop, SecondsPerTick };

/// One clause of a big_bang call.
template <class S>
struct Binding {
  HandlerKind kind;
  std::function<void(HandlerSet<S>&)> apply;
};

namespace bind {

template <class S>
Binding<S> on_tick(std::function<S(const S&)> f) {
  return {HandlerKind::OnTick, [f](HandlerSet<S>& h) { h.on_tick = f; }};
}
template <class S>
Binding<S> on_key(std::function<S(const S&, const std::string&)> f) {
  return {HandlerKind::OnKey, [f](HandlerSet<S>& h) { h.on_key = f; }};
}
template <class S>
Binding<S> to_draw(std::function<Scene(const S&)> f) {
  return {HandlerKind::ToDraw, [f](HandlerSet<S>& h) { h.to_draw = f; }};
}
template <class S>
Binding<S> stop_when(std::function<bool(const S&)> f) {
  return {HandlerKind::StopWhen, [f](HandlerSet<S>& h) { h.stop_when = f; }};
}
template <class S>
Binding<S> close_when_stop(bool flag) {
  return {HandlerKind::CloseWhenStop, [flag](HandlerSet<S>& h) { h.close_when_stop = flag; }};
}
template <class S>
Binding<S> seconds_per_tick(double seconds) {
  return {HandlerKind::SecondsPerTick,
          [seconds](HandlerSet<S>& h) { h.seconds_per_tick = seconds; }};
}

}  // namespace bind

/// Defines and immediately runs a reactor; evaluates to the last state.
/// Throws DuplicateHandler when two bindings have the same kind.
template <class S>
S big_bang(S init, const std::vector<Binding<S>>& bindings, Display& display) {
  HandlerSet<S> handlers{std::move(init)};
  std::vector<HandlerKind> seen;
  for (const auto& b : bindings) {
    for (HandlerKind k : seen) {
      if (k == b.kind) throw DuplicateHandler("handler clause given twice");
    }
    seen.push_back(b.kind);
    b.apply(handlers);
  }
  return interact(make_reactor(std::move(handlers)), display).value();
}

}  // namespace reactor
