#include "reactor/protocol.hpp"

#include "reactor/error.hpp"

namespace reactor::protocol {

namespace {

struct Encoder {
  Json operator()(const SessionOpen& m) const {
    return {{"type", "session_open"},
            {"session_id", m.session_id},
            {"depth", m.depth},
            {"close_when_stop", m.close_when_stop}};
  }
  Json operator()(const Frame& m) const {
    return {{"type", "frame"}, {"session_id", m.session_id}, {"scene", scene_to_structured(m.scene)}};
  }
  Json operator()(const SessionClose& m) const {
    return {{"type", "session_close"},
            {"session_id", m.session_id},
            {"reason", m.reason == WireCloseReason::Stopped ? "stopped" : "interrupted"}};
  }
  Json operator()(const Result& m) const {
    return {{"type", "result"}, {"session_id", m.session_id}, {"state", m.state}};
  }
  Json operator()(const ErrorReply& m) const {
    return {{"type", "error"}, {"code", m.code}, {"message", m.message}};
  }
  Json operator()(const Warning& m) const {
    return {{"type", "warning"}, {"message", m.message}};
  }
  Json operator()(const ScenarioList& m) const {
    return {{"type", "scenarios"}, {"names", m.names}};
  }
  Json operator()(const Key& m) const {
    return {{"type", "key"}, {"session_id", m.session_id}, {"name", m.name}};
  }
  Json operator()(const Interrupt& m) const {
    return {{"type", "interrupt"}, {"session_id", m.session_id}};
  }
  Json operator()(const Start& m) const {
    Json j = {{"type", "start"}, {"scenario", m.scenario}};
    if (!m.params.empty()) {
      Json params = Json::object();
      for (const auto& [k, v] : m.params) params[k] = v;
      j["params"] = std::move(params);
    }
    return j;
  }
  Json operator()(const ListScenarios&) const { return {{"type", "list"}}; }
};

[[noreturn]] void malformed(const std::string& why) { throw MalformedMessage(why); }

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

SessionId id_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) malformed(std::string("field '") + name + "' must be an integer");
  return v.get<SessionId>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) malformed(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

bool bool_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_boolean()) malformed(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

void expect_size(const Json& j, std::size_t n) {
  if (j.size() != n) malformed("unexpected fields in " + canonical_dump(j));
}

}  // namespace

std::string encode_message(const Message& message) {
  return canonical_dump(std::visit(Encoder{}, message));
}

std::string_view message_type(const Message& message) {
  static constexpr std::string_view names[] = {
      "session_open", "frame", "session_close", "result", "error", "warning",
      "scenarios",    "key",   "interrupt",     "start",  "list"};
  return names[message.index()];
}

Message decode_message(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("message must be a JSON object");
  const std::string type = string_field(j, "type");

  if (type == "session_open") {
    expect_size(j, 4);
    return SessionOpen{id_field(j, "session_id"), id_field(j, "depth"),
                       bool_field(j, "close_when_stop")};
  }
  if (type == "frame") {
    expect_size(j, 3);
    try {
      return Frame{id_field(j, "session_id"), structured_to_scene(field(j, "scene"))};
    } catch (const MalformedScene& e) {
      malformed(std::string("bad scene: ") + e.what());
    }
  }
  if (type == "session_close") {
    expect_size(j, 3);
    const std::string reason = string_field(j, "reason");
    if (reason != "stopped" && reason != "interrupted") malformed("unknown close reason");
    return SessionClose{id_field(j, "session_id"), reason == "stopped"
                                                       ? WireCloseReason::Stopped
                                                       : WireCloseReason::Interrupted};
  }
  if (type == "result") {
    expect_size(j, 3);
    return Result{id_field(j, "session_id"), field(j, "state")};
  }
  if (type == "error") {
    expect_size(j, 3);
    return ErrorReply{string_field(j, "code"), string_field(j, "message")};
  }
  if (type == "warning") {
    expect_size(j, 2);
    return Warning{string_field(j, "message")};
  }
  if (type == "scenarios") {
    expect_size(j, 2);
    const Json& names = field(j, "names");
    if (!names.is_array()) malformed("names must be an array");
    ScenarioList list;
    for (const auto& n : names) {
      if (!n.is_string()) malformed("names must be strings");
      list.names.push_back(n.get<std::string>());
    }
    return list;
  }
  if (type == "key") {
    expect_size(j, 3);
    return Key{id_field(j, "session_id"), string_field(j, "name")};
  }
  if (type == "interrupt") {
    expect_size(j, 2);
    return Interrupt{id_field(j, "session_id")};
  }
  if (type == "start") {
    Start start{string_field(j, "scenario"), {}};
    std::size_t expected = 2;
    if (auto it = j.find("params"); it != j.end()) {
      ++expected;
      if (!it->is_object()) malformed("params must be an object");
      for (const auto& [k, v] : it->items()) {
        if (!v.is_number()) malformed("param '" + k + "' must be a number");
        start.params[k] = v.get<double>();
      }
    }
    expect_size(j, expected);
    return start;
  }
  if (type == "list") {
    expect_size(j, 1);
    return ListScenarios{};
  }
  malformed("unknown message type '" + type + "'");
}

}  // namespace reactor::protocol
