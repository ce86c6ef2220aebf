#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reactor/any_reactor.hpp"
#include "reactor/json.hpp"
#include "reactor/reactor.hpp"

namespace reactor::scenarios {

/// Flat name -> number parameters, e.g. {"start_y": 400}.
using Params = std::map<std::string, double>;

/// Every scenario accepts this parameter to override the tick rate.
inline constexpr std::string_view kTickRateParam = "seconds_per_tick";

struct Scenario {
  std::string name;
  std::string description;
  /// Scenario-specific parameter names, besides kTickRateParam.
  std::vector<std::string> parameters;
  std::function<AnyReactor(const Params&)> make;

  /// Throws BadParameter for unknown names or a non-positive tick rate.
  AnyReactor build(const Params& params = {}) const;
};

/// Throws UnknownScenario.
const Scenario& get_scenario(std::string_view name);
/// Sorted names of all registered scenarios.
std::vector<std::string> list_scenarios();

// --- counter: grows by one per tick, i/m add or subtract ten, stops past 100.

double counter_tick(double w);
double counter_key(double w, const std::string& key);
Scene counter_draw(double w);
bool counter_stop(double w);
HandlerSet<double> counter_handlers();
Reactor<double> counter_reactor();

// --- increment: a bare tick counter with no other handlers.

HandlerSet<double> increment_handlers();
Reactor<double> increment_reactor();

// --- trace-replay: +10 per tick, stops past 100, drawn as an outline.

Scene trace_replay_drawer1(double size);
/// Alternative rendering used when replaying a recorded trace.
Scene trace_replay_drawer2(double size);
HandlerSet<double> trace_replay_handlers();
Reactor<double> trace_replay_reactor();

// --- diff-motion: uniform linear motion, closed form vs. integrator.

inline constexpr double kInitX = 0;
inline constexpr double kDeltaT = 1;
inline constexpr double kVelocity = 10;

/// Position at time t >= 0 in closed form; throws std::domain_error for t < 0.
double x_at_t(double t);
/// One integration step of the differential model.
double next_x(double x);
HandlerSet<double> diff_motion_handlers();
Reactor<double> diff_motion_reactor();

// --- free-fall: parameterized initial height, constant acceleration.

inline constexpr double kAccel = -0.3;

struct FallState {
  double y;
  double vy;
  friend bool operator==(const FallState&, const FallState&) = default;
};
void to_json(Json& j, const FallState& s);
void from_json(const Json& j, FallState& s);

FallState fall_tick(const FallState& s);
HandlerSet<FallState> free_fall_handlers(double start_y);
Reactor<FallState> make_sim(double start_y);

// --- digit-sum: sums digits collected through a modal prompt until 0.

struct DigitSumState {
  double sum;
  bool done;
  friend bool operator==(const DigitSumState&, const DigitSumState&) = default;
};
void to_json(Json& j, const DigitSumState& s);
void from_json(const Json& j, DigitSumState& s);

/// The digit a key stands for, or nullopt for any other key.
std::optional<double> string_to_number(const std::string& key);
/// Prompts for a digit in a nested session and returns it. Must run inside
/// an on-tick/on-key handler of an interactive session.
double get_digit(const std::string& prompt);
HandlerSet<std::optional<double>> digit_prompt_handlers(const std::string& prompt);
DigitSumState digit_sum_tick(const DigitSumState& s);
HandlerSet<DigitSumState> digit_sum_handlers();
Reactor<DigitSumState> digit_sum_reactor();

}  // namespace reactor::scenarios
