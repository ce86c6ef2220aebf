#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reactor/json.hpp"
#include "reactor/scene.hpp"

namespace reactor::protocol {

using SessionId = std::int64_t;

// server -> client

struct SessionOpen {
  SessionId session_id;
  std::int64_t depth;
  bool close_when_stop;
  friend bool operator==(const SessionOpen&, const SessionOpen&) = default;
};

struct Frame {
  SessionId session_id;
  Scene scene;
  friend bool operator==(const Frame&, const Frame&) = default;
};

enum class WireCloseReason { Stopped, Interrupted };

struct SessionClose {
  SessionId session_id;
  WireCloseReason reason;
  friend bool operator==(const SessionClose&, const SessionClose&) = default;
};

/// Final state of the outermost session, through the scenario's state codec.
/// session_id is 0 when the reactor was already stopped and no session opened.
struct Result {
  SessionId session_id;
  Json state;
  friend bool operator==(const Result&, const Result&) = default;
};

struct ErrorReply {
  std::string code;  // e.g. "UnknownScenario"
  std::string message;
  friend bool operator==(const ErrorReply&, const ErrorReply&) = default;
};

struct Warning {
  std::string message;
  friend bool operator==(const Warning&, const Warning&) = default;
};

struct ScenarioList {
  std::vector<std::string> names;
  friend bool operator==(const ScenarioList&, const ScenarioList&) = default;
};

// client -> server

struct Key {
  SessionId session_id;
  std::string name;
  friend bool operator==(const Key&, const Key&) = default;
};

struct Interrupt {
  SessionId session_id;
  friend bool operator==(const Interrupt&, const Interrupt&) = default;
};

struct Start {
  std::string scenario;
  std::map<std::string, double> params;
  friend bool operator==(const Start&, const Start&) = default;
};

struct ListScenarios {
  friend bool operator==(const ListScenarios&, const ListScenarios&) = default;
};

using Message = std::variant<SessionOpen, Frame, SessionClose, Result, ErrorReply, Warning,
                             ScenarioList, Key, Interrupt, Start, ListScenarios>;

/// One line of JSON with a "type" discriminator, e.g.
/// {"type":"frame","session_id":1,"scene":{"kind":"circle",...}}.
std::string encode_message(const Message& message);

/// Inverse of encode_message. Throws MalformedMessage.
Message decode_message(std::string_view text);

std::string_view message_type(const Message& message);

}  // namespace reactor::protocol
