#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reactor/error.hpp"
#include "reactor/event.hpp"
#include "reactor/scene.hpp"

namespace reactor {

/// 28 ticks per second.
inline constexpr double kDefaultSecondsPerTick = 1.0 / 28.0;

/// Handlers of a reactor. Every handler must be a pure function of its
/// arguments; the library relies on this but cannot check it.
template <class S>
struct HandlerSet {
  S init;
  std::function<S(const S&)> on_tick{};
  std::function<S(const S&, const std::string& key)> on_key{};
  std::function<Scene(const S&)> to_draw{};
  std::function<bool(const S&)> stop_when{};
  bool close_when_stop = false;
  double seconds_per_tick = kDefaultSecondsPerTick;

  Subscriptions subscriptions() const {
    Subscriptions kinds;
    if (on_tick) kinds.insert(EventKind::TimeTick);
    if (on_key) kinds.insert(EventKind::KeyPress);
    return kinds;
  }
};

/// Persistent, append-only list of states. Copies share structure, so
/// appending to a reactor's log never disturbs the log of an older reactor.
template <class S>
class TraceLog {
 public:
  TraceLog() = default;
  explicit TraceLog(S first) { tail_ = std::make_shared<const Node>(std::move(first), nullptr); }

  std::size_t size() const { return tail_ ? tail_->size : 0; }
  bool empty() const { return !tail_; }
  const S& back() const { return tail_->value; }

  TraceLog append(S value) const {
    TraceLog out;
    out.tail_ = std::make_shared<const Node>(std::move(value), tail_);
    return out;
  }

  /// Oldest first.
  std::vector<S> to_vector() const {
    std::vector<const S*> reversed;
    reversed.reserve(size());
    for (const Node* n = tail_.get(); n != nullptr; n = n->prev.get()) {
      reversed.push_back(&n->value);
    }
    std::vector<S> out;
    out.reserve(reversed.size());
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
      out.push_back(**it);
    }
    return out;
  }

 private:
  struct Node {
    Node(S v, std::shared_ptr<const Node> p)
        : value(std::move(v)), prev(std::move(p)), size(prev ? prev->size + 1 : 1) {}
    // Unlink iteratively so long logs do not recurse on destruction.
    ~Node() {
      auto next = std::move(prev);
      while (next && next.use_count() == 1) {
        auto after = std::move(next->prev);
        next = std::move(after);
      }
    }

    S value;
    mutable std::shared_ptr<const Node> prev;
    std::size_t size;
  };

  std::shared_ptr<const Node> tail_;
};

namespace detail {
struct ReactorAccess;
}

/// An event loop as a value: a state closed over by a handler set.
/// Reactors are immutable; every operation returns a new reactor.
template <class S>
class Reactor {
 public:
  using State = S;

  const S& value() const { return state_; }
  bool stopped() const { return stopped_; }
  bool tracing() const { return tracing_; }
  /// True once start_trace has been applied at some point in this reactor's
  /// history.
  bool has_trace() const { return has_trace_; }
  const HandlerSet<S>& handlers() const { return *handlers_; }
  Subscriptions subscriptions() const { return handlers_->subscriptions(); }

  Reactor react(const Event& event) const;
  Scene draw() const;

 private:
  friend struct detail::ReactorAccess;

  Reactor(S state, std::shared_ptr<const HandlerSet<S>> handlers, bool stopped)
      : state_(std::move(state)), handlers_(std::move(handlers)), stopped_(stopped) {}

  S state_;
  std::shared_ptr<const HandlerSet<S>> handlers_;
  bool stopped_ = false;
  bool tracing_ = false;
  bool has_trace_ = false;
  TraceLog<S> log_;
};

namespace detail {

struct ReactorAccess {
  template <class S>
  static Reactor<S> make(HandlerSet<S> handlers) {
    auto shared = std::make_shared<const HandlerSet<S>>(std::move(handlers));
    bool stopped = shared->stop_when && shared->stop_when(shared->init);
    return Reactor<S>(shared->init, shared, stopped);
  }

  template <class S>
  static Reactor<S> with_state(const Reactor<S>& r, S next) {
    Reactor<S> out = r;
    out.stopped_ = out.handlers_->stop_when && out.handlers_->stop_when(next);
    if (out.tracing_) out.log_ = out.log_.append(next);
    out.state_ = std::move(next);
    return out;
  }

  template <class S>
  static Reactor<S> start_trace(const Reactor<S>& r) {
    Reactor<S> out = r;
    out.tracing_ = true;
    out.has_trace_ = true;
    out.log_ = TraceLog<S>(r.state_);
    return out;
  }

  template <class S>
  static Reactor<S> stop_trace(const Reactor<S>& r) {
    Reactor<S> out = r;
    out.tracing_ = false;
    return out;
  }

  template <class S>
  static const TraceLog<S>& log(const Reactor<S>& r) {
    return r.log_;
  }
};

}  // namespace detail

/// Builds a reactor in its initial state. The reactor is born stopped when
/// stop_when already holds for init. Throws InvalidHandlerSet when
/// seconds_per_tick is not a positive finite number.
template <class S>
Reactor<S> make_reactor(HandlerSet<S> handlers) {
  if (!(handlers.seconds_per_tick > 0) ||
      handlers.seconds_per_tick == std::numeric_limits<double>::infinity()) {
    throw InvalidHandlerSet("seconds_per_tick must be positive");
  }
  return detail::ReactorAccess::make(std::move(handlers));
}

template <class S>
const S& get_value(const Reactor<S>& r) {
  return r.value();
}

template <class S>
bool is_stopped(const Reactor<S>& r) {
  return r.stopped();
}

/// Applies one event. Errors: ReactorStopped if `r` has stopped,
/// UnhandledEventKind if `r` has no handler for the event's kind.
template <class S>
Reactor<S> react(const Reactor<S>& r, const Event& event) {
  if (r.stopped()) {
    throw ReactorStopped("cannot react to '" + describe(event) +
                         "': reactor has stopped");
  }
  const HandlerSet<S>& h = r.handlers();
  if (event.is_tick()) {
    if (!h.on_tick) throw UnhandledEventKind("reactor has no on-tick handler");
    return detail::ReactorAccess::with_state(r, h.on_tick(r.value()));
  }
  if (!h.on_key) throw UnhandledEventKind("reactor has no on-key handler");
  return detail::ReactorAccess::with_state(r, h.on_key(r.value(), event.key_name()));
}

/// Renders the current state with to_draw. Throws NoDrawHandler.
template <class S>
Scene draw(const Reactor<S>& r) {
  if (!r.handlers().to_draw) throw NoDrawHandler("reactor has no to-draw handler");
  return r.handlers().to_draw(r.value());
}

template <class S>
Reactor<S> Reactor<S>::react(const Event& event) const {
  return reactor::react(*this, event);
}

template <class S>
Scene Reactor<S>::draw() const {
  return reactor::draw(*this);
}

}  // namespace reactor
