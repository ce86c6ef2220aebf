#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reactor/event.hpp"
#include "reactor/scene.hpp"

namespace reactor {

enum class CloseReason {
  Stopped,      // stop_when fired
  Interrupted,  // user interrupt or lost connection
  Exhausted,    // a scripted or headless source ran out of events
  Failed,       // a handler threw
};

std::string_view to_string(CloseReason reason);

/// Result of asking a display for input.
struct Poll {
  enum class Kind { Event, Interrupt, Idle, Exhausted };

  Kind kind;
  std::optional<Event> event;

  static Poll of(Event e) { return {Kind::Event, std::move(e)}; }
  static Poll interrupt() { return {Kind::Interrupt, std::nullopt}; }
  static Poll idle() { return {Kind::Idle, std::nullopt}; }
  static Poll exhausted() { return {Kind::Exhausted, std::nullopt}; }
};

struct SessionInfo {
  std::size_t depth;  // 1 for the outermost session
  bool close_when_stop;
  double seconds_per_tick;
  Subscriptions subscriptions;
};

/// Where a running interaction shows scenes and gets its events from.
///
/// The engine calls every member from the thread running the interaction.
class Display {
 public:
  using Clock = std::chrono::steady_clock;

  virtual ~Display() = default;

  virtual void show(const Scene& scene) = 0;
  virtual void session_opened(const SessionInfo& info) = 0;
  virtual void session_closed(std::size_t depth, CloseReason reason) = 0;

  /// Blocks until an event or interrupt arrives, the source is exhausted, or
  /// `deadline` passes (Idle).
  virtual Poll next_event(std::optional<Clock::time_point> deadline) = 0;
  /// An event that has already arrived, without blocking; Idle otherwise.
  virtual Poll poll() { return Poll::idle(); }

  /// Ticks come from the wall clock at each session's rate.
  virtual bool realtime() const { return false; }
  /// Scenes are drawn and shown.
  virtual bool renders() const { return true; }
  /// A session that stopped without close_when_stop stays open, showing its
  /// final scene, until interrupted.
  virtual bool holds_after_stop() const { return false; }
};

/// Shows nothing and never produces events.
class HeadlessDisplay final : public Display {
 public:
  void show(const Scene&) override {}
  void session_opened(const SessionInfo&) override {}
  void session_closed(std::size_t, CloseReason) override {}
  Poll next_event(std::optional<Clock::time_point>) override { return Poll::exhausted(); }
  bool renders() const override { return false; }
};

/// Replays a fixed list of events with no delay between them, then reports
/// exhaustion. Each event is handed out when the engine asks for one, so it
/// reaches whichever session is innermost at that moment.
///
/// A burst is a group of events that arrive together: the first is returned
/// by next_event and the rest are immediately available through poll, so
/// they queue on the session that was on top when the burst arrived.
class ScriptedDisplay final : public Display {
 public:
  explicit ScriptedDisplay(std::vector<Event> events);
  static ScriptedDisplay with_bursts(std::vector<std::vector<Event>> bursts);

  void show(const Scene& scene) override { shown_.push_back(scene); }
  void session_opened(const SessionInfo& info) override;
  void session_closed(std::size_t depth, CloseReason reason) override;
  Poll next_event(std::optional<Clock::time_point> deadline) override;
  Poll poll() override;

  const std::vector<Scene>& shown() const { return shown_; }
  /// "open <depth>" / "close <depth> <reason>" entries in order.
  const std::vector<std::string>& session_log() const { return session_log_; }
  std::size_t remaining() const;

 private:
  ScriptedDisplay() = default;

  std::deque<std::deque<Event>> bursts_;
  std::deque<Event> arrived_;
  std::vector<Scene> shown_;
  std::vector<std::string> session_log_;
};

}  // namespace reactor
