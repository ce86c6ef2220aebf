#include "reactor/live_display.hpp"

namespace reactor {

using protocol::SessionId;

std::string_view to_string(LiveDisplay::Delivery d) {
  switch (d) {
    case LiveDisplay::Delivery::Accepted:
      return "accepted";
    case LiveDisplay::Delivery::NoSession:
      return "no such open session";
    case LiveDisplay::Delivery::NotInnermost:
      return "session is not the innermost open session";
    case LiveDisplay::Delivery::InvalidKey:
      return "invalid key name";
  }
  return "?";
}

LiveDisplay::LiveDisplay(Sink sink) : sink_(std::move(sink)) {}

void LiveDisplay::show(const Scene& scene) {
  SessionId id;
  {
    std::lock_guard lock(mutex_);
    if (open_.empty()) return;
    id = open_.back();
  }
  sink_(protocol::Frame{id, scene});
}

void LiveDisplay::session_opened(const SessionInfo& info) {
  SessionId id;
  {
    std::lock_guard lock(mutex_);
    id = ++last_id_;
    if (outermost_ == 0) outermost_ = id;
    open_.push_back(id);
  }
  sink_(protocol::SessionOpen{id, static_cast<std::int64_t>(info.depth), info.close_when_stop});
}

void LiveDisplay::session_closed(std::size_t, CloseReason reason) {
  SessionId id;
  {
    std::lock_guard lock(mutex_);
    if (open_.empty()) return;
    id = open_.back();
    open_.pop_back();
    // Anything still addressed to the closed session can never be read.
    std::erase_if(inbox_, [id](const Pending& p) { return p.session == id; });
  }
  sink_(protocol::SessionClose{id, reason == CloseReason::Stopped
                                       ? protocol::WireCloseReason::Stopped
                                       : protocol::WireCloseReason::Interrupted});
}

std::optional<Poll> LiveDisplay::take_locked() {
  if (disconnected_) return Poll::interrupt();
  if (open_.empty()) return std::nullopt;
  const SessionId top = open_.back();
  for (auto it = inbox_.begin(); it != inbox_.end(); ++it) {
    if (it->session == top) {
      Poll p = std::move(it->poll);
      inbox_.erase(it);
      return p;
    }
  }
  return std::nullopt;
}

Poll LiveDisplay::next_event(std::optional<Clock::time_point> deadline) {
  std::unique_lock lock(mutex_);
  for (;;) {
    if (auto p = take_locked()) return *p;
    if (deadline) {
      if (arrived_.wait_until(lock, *deadline) == std::cv_status::timeout) {
        if (auto p = take_locked()) return *p;
        return Poll::idle();
      }
    } else {
      arrived_.wait(lock);
    }
  }
}

Poll LiveDisplay::poll() {
  std::lock_guard lock(mutex_);
  if (auto p = take_locked()) return *p;
  return Poll::idle();
}

LiveDisplay::Delivery LiveDisplay::enqueue(SessionId session, Poll p) {
  {
    std::lock_guard lock(mutex_);
    if (std::find(open_.begin(), open_.end(), session) == open_.end()) return Delivery::NoSession;
    if (open_.back() != session) return Delivery::NotInnermost;
    inbox_.push_back({session, std::move(p)});
  }
  arrived_.notify_all();
  return Delivery::Accepted;
}

LiveDisplay::Delivery LiveDisplay::deliver_key(SessionId session, const std::string& name) {
  if (!is_valid_key_name(name)) return Delivery::InvalidKey;
  return enqueue(session, Poll::of(Event::key(name)));
}

LiveDisplay::Delivery LiveDisplay::deliver_interrupt(SessionId session) {
  return enqueue(session, Poll::interrupt());
}

void LiveDisplay::disconnect() {
  {
    std::lock_guard lock(mutex_);
    disconnected_ = true;
  }
  arrived_.notify_all();
}

SessionId LiveDisplay::outermost_session() const {
  std::lock_guard lock(mutex_);
  return outermost_;
}

SessionId LiveDisplay::innermost_session() const {
  std::lock_guard lock(mutex_);
  return open_.empty() ? 0 : open_.back();
}

}  // namespace reactor
