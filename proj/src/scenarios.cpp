#include "reactor/scenarios.hpp"

#include <algorithm>
#include <stdexcept>

#include "reactor/engine.hpp"
#include "reactor/error.hpp"

namespace reactor::scenarios {

// counter

double counter_tick(double w) { return w + 1; }

double counter_key(double w, const std::string& key) {
  if (key == "i") return w + 10;
  if (key == "m") return w - 10;
  return w;
}

// A negative count has no circle; draw it as a point.
Scene counter_draw(double w) { return circle(std::max(w, 0.0), Mode::Solid, "blue"); }

bool counter_stop(double w) { return w > 100; }

HandlerSet<double> counter_handlers() {
  HandlerSet<double> h{0.0};
  h.on_tick = counter_tick;
  h.on_key = counter_key;
  h.to_draw = counter_draw;
  h.stop_when = counter_stop;
  return h;
}

Reactor<double> counter_reactor() { return make_reactor(counter_handlers()); }

// increment

HandlerSet<double> increment_handlers() {
  HandlerSet<double> h{0.0};
  h.on_tick = [](double x) { return x + 1; };
  return h;
}

Reactor<double> increment_reactor() { return make_reactor(increment_handlers()); }

// trace-replay

Scene trace_replay_drawer1(double size) { return circle(size, Mode::Outline, "blue"); }
Scene trace_replay_drawer2(double size) { return circle(size, Mode::Solid, "red"); }

HandlerSet<double> trace_replay_handlers() {
  HandlerSet<double> h{0.0};
  h.on_tick = [](double w) { return w + 10; };
  h.to_draw = trace_replay_drawer1;
  h.stop_when = [](double w) { return w > 100; };
  return h;
}

Reactor<double> trace_replay_reactor() { return make_reactor(trace_replay_handlers()); }

// diff-motion

double x_at_t(double t) {
  if (!(t >= 0)) throw std::domain_error("x_at_t needs t >= 0");
  return kInitX + kVelocity * t;
}

double next_x(double x) { return x + kVelocity * kDeltaT; }

HandlerSet<double> diff_motion_handlers() {
  HandlerSet<double> h{kInitX};
  h.on_tick = next_x;
  return h;
}

Reactor<double> diff_motion_reactor() { return make_reactor(diff_motion_handlers()); }

// free-fall

void to_json(Json& j, const FallState& s) { j = Json{{"y", s.y}, {"vy", s.vy}}; }

void from_json(const Json& j, FallState& s) {
  s.y = j.at("y").get<double>();
  s.vy = j.at("vy").get<double>();
}

FallState fall_tick(const FallState& s) { return {s.y + s.vy, s.vy + kAccel}; }

HandlerSet<FallState> free_fall_handlers(double start_y) {
  HandlerSet<FallState> h{FallState{start_y, 0}};
  h.stop_when = [](const FallState& s) { return s.y < 0; };
  h.on_tick = fall_tick;
  return h;
}

Reactor<FallState> make_sim(double start_y) { return make_reactor(free_fall_handlers(start_y)); }

// digit-sum

void to_json(Json& j, const DigitSumState& s) { j = Json{{"sum", s.sum}, {"done", s.done}}; }

void from_json(const Json& j, DigitSumState& s) {
  s.sum = j.at("sum").get<double>();
  s.done = j.at("done").get<bool>();
}

std::optional<double> string_to_number(const std::string& key) {
  if (key.size() == 1 && key[0] >= '0' && key[0] <= '9') return key[0] - '0';
  return std::nullopt;
}

HandlerSet<std::optional<double>> digit_prompt_handlers(const std::string& prompt) {
  HandlerSet<std::optional<double>> h{std::nullopt};
  h.to_draw = [prompt](const std::optional<double>&) { return text(prompt, 30, "black"); };
  h.on_key = [](const std::optional<double>&, const std::string& k) { return string_to_number(k); };
  h.stop_when = [](const std::optional<double>& d) { return d.has_value(); };
  h.close_when_stop = true;
  return h;
}

double get_digit(const std::string& prompt) {
  auto done = interact(make_reactor(digit_prompt_handlers(prompt)));
  if (!done.value()) {
    // The prompt was interrupted before a digit arrived.
    throw Error("no digit was entered for '" + prompt + "'");
  }
  return *done.value();
}

DigitSumState digit_sum_tick(const DigitSumState& s) {
  double k = get_digit("next number");
  if (k == 0) return {s.sum, true};
  return {s.sum + k, false};
}

HandlerSet<DigitSumState> digit_sum_handlers() {
  HandlerSet<DigitSumState> h{DigitSumState{0, false}};
  h.on_tick = digit_sum_tick;
  h.stop_when = [](const DigitSumState& s) { return s.done; };
  return h;
}

Reactor<DigitSumState> digit_sum_reactor() { return make_reactor(digit_sum_handlers()); }

// registry

namespace {

template <class S>
AnyReactor finish(HandlerSet<S> h, const Params& params) {
  if (auto it = params.find(std::string(kTickRateParam)); it != params.end()) {
    h.seconds_per_tick = it->second;
  }
  return AnyReactor(make_reactor(std::move(h)));
}

double param_or(const Params& params, const std::string& name, double fallback) {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> scenarios = [] {
    std::vector<Scenario> v;
    v.push_back({"counter",
                 "Counter drawn as a blue circle: +1 per tick, keys i/m add/subtract 10, "
                 "stops above 100.",
                 {},
                 [](const Params& p) { return finish(counter_handlers(), p); }});
    v.push_back({"diff-motion",
                 "Uniform linear motion as a differential model: x + v*dt per tick (v = 10).",
                 {},
                 [](const Params& p) { return finish(diff_motion_handlers(), p); }});
    v.push_back({"digit-sum",
                 "Sums digits read by a modal prompt on each tick; entering 0 stops.",
                 {},
                 [](const Params& p) { return finish(digit_sum_handlers(), p); }});
    v.push_back({"free-fall",
                 "Free fall from start_y (default 200) with acceleration -0.3 per tick; "
                 "stops below 0.",
                 {"start_y"},
                 [](const Params& p) {
                   return finish(free_fall_handlers(param_or(p, "start_y", 200)), p);
                 }});
    v.push_back({"increment", "Adds one per tick, forever.", {},
                 [](const Params& p) { return finish(increment_handlers(), p); }});
    v.push_back({"trace-replay",
                 "+10 per tick drawn as a blue outline circle; stops above 100.",
                 {},
                 [](const Params& p) { return finish(trace_replay_handlers(), p); }});
    std::sort(v.begin(), v.end(),
              [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
    return v;
  }();
  return scenarios;
}

}  // namespace

AnyReactor Scenario::build(const Params& params) const {
  for (const auto& [key, value] : params) {
    if (key == kTickRateParam) {
      if (!(value > 0)) throw BadParameter("seconds_per_tick must be positive");
      continue;
    }
    if (std::find(parameters.begin(), parameters.end(), key) == parameters.end()) {
      throw BadParameter("scenario '" + name + "' has no parameter '" + key + "'");
    }
  }
  return make(params);
}

const Scenario& get_scenario(std::string_view name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s;
  }
  throw UnknownScenario("unknown scenario '" + std::string(name) + "'");
}

std::vector<std::string> list_scenarios() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

}  // namespace reactor::scenarios
