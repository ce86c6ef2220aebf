// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Expected values come from folds written here, not from library output.

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "reactor/any_reactor.hpp"
#include "reactor/scenarios.hpp"
#include "support/gen_protocol.hpp"

using namespace reactor;
using namespace reactor::scenarios;
namespace gen = reactor::testing;

namespace {

// Collects the first few mismatches of one criterion.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (count_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    return notes_.str() + (count_ > 3 ? " (+" + std::to_string(count_ - 3) + " more)" : "");
  }

 private:
  int count_ = 0;
  std::ostringstream notes_;
};

int failed = 0;

void criterion(const std::string& name, const std::function<void(Failures&)>& body) {
  Failures f;
  try {
    body(f);
  } catch (const std::exception& e) {
    f.expect(false, std::string("threw: ") + e.what());
  }
  if (f.ok()) {
    std::cout << "PASS  " << name << "\n";
  } else {
    ++failed;
    std::cout << "FAIL  " << name << ": " << f.summary() << "\n";
  }
}

std::string str(double x) { return format_number(x); }

}  // namespace

int main() {
  criterion("increment reactor: react returns a new value and leaves the original alone",
            [](Failures& f) {
              const auto r = increment_reactor();
              f.expect(get_value(r) == 0, "initial value " + str(get_value(r)));
              const auto next = react(r, Event::tick());
              f.expect(get_value(next) == 1, "after one tick " + str(get_value(next)));
              f.expect(get_value(r) == 0, "original changed to " + str(get_value(r)));
            });

  criterion("counter: ten ticks, and two mixed event chains", [](Failures& f) {
    const auto r = counter_reactor();
    f.expect(after_n_ticks(r, 10).value() == 10, "after_n_ticks(10)");
    const auto a = react(react(react(r, Event::tick()), Event::tick()), Event::key("i"));
    f.expect(a.value() == 12, "tick,tick,i gave " + str(a.value()));
    const auto b = react(react(react(r, Event::key("i")), Event::key("m")), Event::tick());
    f.expect(b.value() == 1, "i,m,tick gave " + str(b.value()));
  });

  criterion("diff-motion: closed form equals the integrator for t = 0..100", [](Failures& f) {
    const auto r = diff_motion_reactor();
    for (int i = 0; i <= 100; ++i) {
      const double stepped = after_n_ticks(r, static_cast<std::size_t>(i)).value();
      f.expect(x_at_t(i) == stepped, "t=" + std::to_string(i));
      // Independent arithmetic: kInitX + i * kVelocity * kDeltaT.
      f.expect(stepped == kInitX + i * kVelocity * kDeltaT, "integrator at t=" + std::to_string(i));
    }
  });

  criterion("trace-replay: trace table, derived screenshot column, full run", [](Failures& f) {
    const auto r = trace_replay_reactor();
    const TraceTable two = simulate_trace(r, 2);
    f.expect(render_table(two, TableFormat::Csv) == "tick,state\n0,0\n1,10\n2,20",
             "two ticks rendered as " + render_table(two, TableFormat::Csv));

    const TraceTable shots = build_column(two, "screenshot", [](const RowView& row) {
      return Cell(trace_replay_drawer2(row["state"].as_number()));
    });
    for (std::size_t i = 0; i < shots.row_count(); ++i) {
      const double state = 10.0 * static_cast<double>(i);
      f.expect(shots.rows()[i][2].as_scene() == circle(state, Mode::Solid, "red"),
               "screenshot row " + std::to_string(i));
    }

    // Oracle: fold +10 per tick until the value passes 100.
    std::vector<std::pair<double, double>> expected;
    for (double tick = 0, x = 0;; ++tick, x += 10) {
      expected.emplace_back(tick, x);
      if (x > 100) break;
    }
    const TraceTable full = simulate_trace(r, 1000);
    f.expect(full.row_count() == expected.size(),
             "full run has " + std::to_string(full.row_count()) + " rows");
    f.expect(expected.size() == 12 && expected.back() == std::pair<double, double>{11, 110},
             "oracle disagrees with the documented end row");
    for (std::size_t i = 0; i < std::min(full.row_count(), expected.size()); ++i) {
      f.expect(full.rows()[i][0].as_number() == expected[i].first &&
                   full.rows()[i][1].as_number() == expected[i].second,
               "row " + std::to_string(i));
    }
  });

  criterion("free-fall: trajectories from 200 and 400 differ only by height", [](Failures& f) {
    const auto low = make_sim(200);
    const auto high = make_sim(400);
    for (std::size_t n : {1u, 2u}) {
      const FallState a = after_n_ticks(low, n).value();
      const FallState b = after_n_ticks(high, n).value();
      f.expect(std::abs(a.vy - b.vy) <= 1e-9, "vy after " + std::to_string(n));
      f.expect(std::abs(a.y - (b.y - 200)) <= 1e-9, "y after " + std::to_string(n));
    }
  });

  criterion("tracing identity on 100 random scripted reactors", [](Failures& f) {
    gen::Rng rng(0xacce55);
    for (int c = 0; c < 100; ++c) {
      const auto spec = gen::reactor_spec(rng);
      const auto script = gen::events(rng, 60);
      const auto r = make_reactor(spec.handlers());
      ScriptedDisplay a(script);
      ScriptedDisplay b(script);
      f.expect(interact_trace(r, a) == get_trace_as_table(interact(start_trace(r), b)),
               "case " + std::to_string(c));
    }
  });

  criterion("digit-sum: nested prompts sum to 7 without touching the outer session",
            [](Failures& f) {
              int outer_calls = 0;
              int outer_calls_while_nested = 0;
              auto note = [&] {
                ++outer_calls;
                if (session_depth() > 1) ++outer_calls_while_nested;
              };
              auto h = digit_sum_handlers();
              auto tick = h.on_tick;
              auto stop = h.stop_when;
              h.on_tick = [&, tick](const DigitSumState& s) {
                note();
                return tick(s);
              };
              h.stop_when = [&, stop](const DigitSumState& s) {
                note();
                return stop(s);
              };
              const auto r = run_scripted(make_reactor(h), {Event::tick(), Event::key("3"),
                                                            Event::tick(), Event::key("4"),
                                                            Event::tick(), Event::key("0")});
              f.expect(r.value() == DigitSumState{7, true},
                       "final state " + canonical_dump(Json(r.value())));
              f.expect(outer_calls > 0, "instrumentation saw no calls");
              f.expect(outer_calls_while_nested == 0,
                       std::to_string(outer_calls_while_nested) + " outer calls while nested");
              f.expect(active_subscriptions().empty(), "subscriptions left after the run");
              f.expect(session_depth() == 0, "sessions left open");
            });

  criterion("stopped reactors: interacting again calls no handlers", [](Failures& f) {
    int calls = 0;
    HandlerSet<double> h{0.0};
    h.on_tick = [&](double x) { return ++calls, x + 1; };
    h.on_key = [&](double x, const std::string&) { return ++calls, x + 5; };
    h.stop_when = [&](double x) { return ++calls, x >= 2; };
    h.to_draw = [&](double x) { return ++calls, circle(x, Mode::Solid, "blue"); };
    ScriptedDisplay first({Event::tick(), Event::tick(), Event::tick()});
    const auto once = interact(make_reactor(h), first);
    f.expect(once.stopped() && once.value() == 2, "script did not stop at 2");
    calls = 0;
    ScriptedDisplay second({Event::tick(), Event::key("a")});
    const auto twice = interact(once, second);
    f.expect(twice.value() == once.value() && twice.stopped(), "state changed");
    f.expect(calls == 0, std::to_string(calls) + " handler calls");
    f.expect(second.remaining() == 2, "events were consumed");
  });

  criterion("property suite, 1000 cases per law", [](Failures& f) {
    gen::Rng rng(0x9e3779b97f4a7c15ULL);
    for (int c = 0; c < gen::kPropertyCases; ++c) {
      const std::string at = " (case " + std::to_string(c) + ")";
      const auto spec = gen::reactor_spec(rng);
      const auto r = make_reactor(spec.handlers());

      // react is pure and deterministic.
      const Event e = gen::event(rng);
      if (!spec.stops(spec.init)) {
        const double expected = e.is_tick() ? spec.tick(spec.init) : spec.key(spec.init, e.key_name());
        const auto a = react(r, e);
        const auto b = react(r, e);
        f.expect(a.value() == expected && b.value() == expected, "react value" + at);
        f.expect(a.stopped() == spec.stops(expected), "stop flag" + at);
        f.expect(r.value() == spec.init && !r.stopped(), "original modified" + at);
      }

      // Scripted runs agree with a plain fold.
      const auto script = gen::events(rng, 200);
      double x = spec.init;
      if (!spec.stops(x)) {
        for (const auto& ev : script) {
          x = ev.is_tick() ? spec.tick(x) : spec.key(x, ev.key_name());
          if (spec.stops(x)) break;
        }
      }
      const auto run = run_scripted(r, script);
      f.expect(run.value() == x && run.stopped() == spec.stops(x), "scripted vs fold" + at);

      // Scenes survive the structured form and its text.
      const Scene s = gen::scene(rng);
      const Json structured = scene_to_structured(s);
      f.expect(structured_to_scene(structured) == s, "scene round trip" + at);
      f.expect(structured_to_scene(Json::parse(canonical_dump(structured))) == s,
               "scene text round trip" + at);

      // Messages survive encoding.
      const auto m = gen::random_message(rng);
      f.expect(protocol::decode_message(protocol::encode_message(m)) == m, "message round trip" + at);

      // simulate_trace has one row per tick taken, plus the initial row.
      const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 0, 80));
      std::size_t taken = 0;
      for (double y = spec.init; taken < n && !spec.stops(y); ++taken) y = spec.tick(y);
      f.expect(simulate_trace(r, n).row_count() == taken + 1, "row count" + at);
    }
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed") << "\n";
  return failed == 0 ? 0 : 1;
}
