#pragma once

// Random generators shared by the property tests. Every generator takes the
// engine explicitly so a failing case can be replayed from its seed.

#include <random>
#include <string>
#include <vector>

#include "reactor/event.hpp"
#include "reactor/reactor.hpp"
#include "reactor/scene.hpp"

namespace reactor::testing {

using Rng = std::mt19937_64;

inline constexpr int kPropertyCases = 1000;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Non-negative dimension with a mix of integral and fractional values.
inline double dimension(Rng& rng) {
  if (coin(rng)) return uniform_int(rng, 0, 500);
  return std::uniform_real_distribution<double>(0, 1000)(rng);
}

inline std::string color(Rng& rng) {
  static const std::vector<std::string> names = {"blue", "red", "black", "green",
                                                 "#00ff7f", "#a1b2c3", "white"};
  return names[uniform_int(rng, 0, static_cast<int>(names.size()) - 1)];
}

inline std::string key_name(Rng& rng) {
  static const std::vector<std::string> named = {"left", "right", "up", "down",
                                                 "enter", "escape", "backspace", "tab"};
  if (coin(rng, 0.2)) return named[uniform_int(rng, 0, 7)];
  return std::string(1, static_cast<char>(uniform_int(rng, 0x20, 0x7e)));
}

inline Scene scene(Rng& rng, int depth = 4) {
  int pick = uniform_int(rng, 0, depth > 0 ? 4 : 3);
  switch (pick) {
    case 0:
      return circle(dimension(rng), coin(rng) ? Mode::Solid : Mode::Outline, color(rng));
    case 1: {
      std::string content;
      for (int i = uniform_int(rng, 0, 12); i > 0; --i) {
        content += static_cast<char>(uniform_int(rng, 0x20, 0x7e));
      }
      if (coin(rng, 0.1)) content += "\"\\\n";
      return text(content, dimension(rng) + 0.5, color(rng));
    }
    case 2:
      return rectangle(dimension(rng), dimension(rng), coin(rng) ? Mode::Solid : Mode::Outline,
                       color(rng));
    case 3:
      return empty_scene(dimension(rng), dimension(rng));
    default:
      return overlay(scene(rng, depth - 1), scene(rng, depth - 1));
  }
}

/// Events drawn from a small alphabet so key handlers actually branch.
inline Event event(Rng& rng) {
  if (coin(rng, 0.4)) return Event::tick();
  static const std::vector<std::string> keys = {"i", "m", "x", "0", "left", " "};
  return Event::key(keys[uniform_int(rng, 0, static_cast<int>(keys.size()) - 1)]);
}

inline std::vector<Event> events(Rng& rng, int max_length) {
  std::vector<Event> out;
  for (int i = uniform_int(rng, 0, max_length); i > 0; --i) out.push_back(event(rng));
  return out;
}

/// Plain description of a random integer-valued reactor, kept separate from
/// the HandlerSet so oracles can evaluate it without going through the library.
struct ReactorSpec {
  double init;
  double tick_step;
  double i_step;
  double m_step;
  bool has_stop;
  double stop_above;

  double tick(double x) const { return x + tick_step; }
  double key(double x, const std::string& k) const {
    if (k == "i") return x + i_step;
    if (k == "m") return x + m_step;
    return x;
  }
  bool stops(double x) const { return has_stop && x > stop_above; }

  HandlerSet<double> handlers() const {
    HandlerSet<double> h{init};
    auto self = *this;
    h.on_tick = [self](double x) { return self.tick(x); };
    h.on_key = [self](double x, const std::string& k) { return self.key(x, k); };
    h.to_draw = [](double x) { return circle(x < 0 ? -x : x, Mode::Solid, "blue"); };
    if (has_stop) h.stop_when = [self](double x) { return self.stops(x); };
    return h;
  }
};

inline ReactorSpec reactor_spec(Rng& rng) {
  ReactorSpec s;
  s.init = uniform_int(rng, -20, 20);
  s.tick_step = uniform_int(rng, -3, 5);
  s.i_step = uniform_int(rng, -10, 10);
  s.m_step = uniform_int(rng, -10, 10);
  s.has_stop = coin(rng, 0.7);
  s.stop_above = uniform_int(rng, 10, 80);
  return s;
}

}  // namespace reactor::testing
