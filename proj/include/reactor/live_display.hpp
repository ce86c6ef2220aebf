#pragma once

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <functional>
#include <mutex>
#include <vector>

#include "reactor/display.hpp"
#include "reactor/protocol.hpp"

namespace reactor {

/// A display driven by a remote client.
///
/// Outgoing messages go to the sink from the engine thread. Input arrives from
/// another thread through deliver_key / deliver_interrupt / disconnect. Each
/// session gets a fresh, strictly increasing id; input is only accepted for
/// the innermost open session and stays with that session even if a nested
/// one opens before the engine reads it.
class LiveDisplay final : public Display {
 public:
  using Sink = std::function<void(const protocol::Message&)>;

  enum class Delivery { Accepted, NoSession, NotInnermost, InvalidKey };

  explicit LiveDisplay(Sink sink);

  void show(const Scene& scene) override;
  void session_opened(const SessionInfo& info) override;
  void session_closed(std::size_t depth, CloseReason reason) override;
  Poll next_event(std::optional<Clock::time_point> deadline) override;
  Poll poll() override;
  bool realtime() const override { return true; }
  bool holds_after_stop() const override { return true; }

  Delivery deliver_key(protocol::SessionId session, const std::string& name);
  Delivery deliver_interrupt(protocol::SessionId session);
  /// The client went away: every open session, and any opened later, is
  /// interrupted.
  void disconnect();

  /// Id of the first session opened, 0 if none.
  protocol::SessionId outermost_session() const;
  /// Id of the innermost open session, 0 if none.
  protocol::SessionId innermost_session() const;

 private:
  struct Pending {
    protocol::SessionId session;
    Poll poll;
  };

  Delivery enqueue(protocol::SessionId session, Poll p);
  // Caller holds mutex_.
  std::optional<Poll> take_locked();

  Sink sink_;
  mutable std::mutex mutex_;
  std::condition_variable arrived_;
  std::vector<protocol::SessionId> open_;
  std::deque<Pending> inbox_;
  protocol::SessionId last_id_ = 0;
  protocol::SessionId outermost_ = 0;
  bool disconnected_ = false;
};

std::string_view to_string(LiveDisplay::Delivery d);

}  // namespace reactor
