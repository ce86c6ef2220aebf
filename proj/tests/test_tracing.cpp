#include <string>

#include "doctest.h"
#include "reactor/trace.hpp"
#include "support/gen.hpp"

using namespace reactor;

namespace {

HandlerSet<double> increment() {
  HandlerSet<double> h{0.0};
  h.on_tick = [](double x) { return x + 1; };
  return h;
}

HandlerSet<double> replay() {
  HandlerSet<double> h{0.0};
  h.on_tick = [](double w) { return w + 10; };
  h.to_draw = [](double sz) { return circle(sz, Mode::Outline, "blue"); };
  h.stop_when = [](double w) { return w > 100; };
  return h;
}

Reactor<double> ticks(Reactor<double> r, int n) {
  for (int i = 0; i < n; ++i) r = react(r, Event::tick());
  return r;
}

}  // namespace

TEST_CASE("start_trace") {
  auto r = start_trace(make_reactor(increment()));
  CHECK(r.tracing());
  CHECK(get_trace(r) == std::vector<double>{0});
  CHECK(get_trace(ticks(r, 2)) == std::vector<double>{0, 1, 2});

  auto twice = start_trace(start_trace(ticks(r, 3)));
  auto once = start_trace(ticks(r, 3));
  CHECK(get_trace(twice) == get_trace(once));
  CHECK(get_trace(once) == std::vector<double>{3});
}

TEST_CASE("stop_trace") {
  auto traced = ticks(start_trace(make_reactor(increment())), 2);
  auto stopped = ticks(stop_trace(traced), 3);
  CHECK_FALSE(stopped.tracing());
  CHECK(stopped.value() == 5);
  CHECK(get_trace(stopped) == std::vector<double>{0, 1, 2});

  auto never = make_reactor(increment());
  auto same = stop_trace(never);
  CHECK(same.value() == never.value());
  CHECK_FALSE(same.has_trace());
}

TEST_CASE("get_trace") {
  CHECK(get_trace(ticks(start_trace(make_reactor(increment())), 3)) ==
        std::vector<double>{0, 1, 2, 3});
  CHECK_THROWS_AS(get_trace(make_reactor(increment())), NotTracing);
  CHECK_THROWS_AS(get_trace_as_table(make_reactor(increment())), NotTracing);
}

TEST_CASE("traced reactors stay independent") {
  auto base = ticks(start_trace(make_reactor(increment())), 2);
  auto a = ticks(base, 1);
  auto b = ticks(base, 3);
  CHECK(get_trace(base) == std::vector<double>{0, 1, 2});
  CHECK(get_trace(a) == std::vector<double>{0, 1, 2, 3});
  CHECK(get_trace(b) == std::vector<double>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("get_trace_as_table") {
  auto t = get_trace_as_table(ticks(start_trace(make_reactor(replay())), 2));
  CHECK(t.columns() == std::vector<std::string>{"tick", "state"});
  CHECK(t == TraceTable({"tick", "state"}, {{0, 0}, {1, 10}, {2, 20}}));

  HandlerSet<double> seven{7.0};
  auto single = get_trace_as_table(start_trace(make_reactor(seven)));
  CHECK(single == TraceTable({"tick", "state"}, {{0, 7}}));

}

TEST_CASE("property: table rows agree with the log and its tail") {
  testing::Rng rng(3);
  for (int c = 0; c < testing::kPropertyCases; ++c) {
    auto spec = testing::reactor_spec(rng);
    auto r = start_trace(make_reactor(spec.handlers()));
    std::size_t events = 0;
    for (const auto& e : testing::events(rng, 25)) {
      if (r.stopped()) break;
      r = react(r, e);
      ++events;
      CHECK(get_trace(r).back() == r.value());
    }
    auto log = get_trace(r);
    auto table = get_trace_as_table(r);
    REQUIRE(table.row_count() == 1 + events);
    for (std::size_t i = 0; i < log.size(); ++i) {
      CHECK(table.rows()[i][0] == Cell(i));
      CHECK(table.rows()[i][1] == Cell(log[i]));
    }
  }
}

TEST_CASE("build_column") {
  auto t = get_trace_as_table(ticks(start_trace(make_reactor(replay())), 2));
  auto drawer2 = [](double sz) { return circle(sz, Mode::Solid, "red"); };
  auto shots = build_column(t, "screenshot", [&](const RowView& row) {
    return Cell(drawer2(row["state"].as_number()));
  });
  CHECK(shots.columns() == std::vector<std::string>{"tick", "state", "screenshot"});
  REQUIRE(shots.row_count() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(shots.rows()[i][2] == Cell(circle(10.0 * i, Mode::Solid, "red")));
    CHECK(shots.rows()[i][1] == t.rows()[i][1]);
  }
  CHECK(t.columns().size() == 2);

  auto zeros = build_column(t, "zero", [](const RowView&) { return Cell(0); });
  for (const auto& row : zeros.rows()) CHECK(row[2] == Cell(0));

  auto empty = build_column(fresh_trace_table(), "x", [](const RowView&) { return Cell(1); });
  CHECK(empty.columns().size() == 3);
  CHECK(empty.row_count() == 0);

  CHECK_THROWS_AS(build_column(t, "state", [](const RowView&) { return Cell(0); }),
                  DuplicateColumn);
  CHECK_THROWS_AS(build_column(t, "y", [](const RowView& row) { return row["nope"]; }),
                  UnknownColumn);
}

TEST_CASE("render_table") {
  auto t = get_trace_as_table(ticks(start_trace(make_reactor(replay())), 2));
  CHECK(render_table(t, TableFormat::Csv) == "tick,state\n0,0\n1,10\n2,20");
  CHECK(render_table(t, TableFormat::Json) ==
        R"({"columns":["tick","state"],"rows":[[0,0],[1,10],[2,20]]})");
  CHECK(render_table(fresh_trace_table(), TableFormat::Json) ==
        R"({"columns":["tick","state"],"rows":[]})");
  CHECK(render_table(fresh_trace_table(), TableFormat::Csv) == "tick,state");

  TraceTable mixed({"tick", "state", "note"},
                   {{0, Json{{"sum", 7}, {"done", true}}, "a,\"b\""},
                    {1, true, Cell(circle(1, Mode::Solid, "red"))}});
  CHECK(render_table(mixed, TableFormat::Csv) ==
        "tick,state,note\n"
        "0,\"{\"\"sum\"\":7,\"\"done\"\":true}\",\"a,\"\"b\"\"\"\n"
        "1,true,\"{\"\"kind\"\":\"\"circle\"\",\"\"radius\"\":1,\"\"mode\"\":\"\"solid\"\","
        "\"\"color\"\":\"\"red\"\"}\"");
  CHECK(render_table(mixed, TableFormat::Json) ==
        R"({"columns":["tick","state","note"],"rows":[[0,{"sum":7,"done":true},"a,\"b\""],)"
        R"([1,true,{"kind":"circle","radius":1,"mode":"solid","color":"red"}]]})");

  CHECK(parse_table_format("csv") == TableFormat::Csv);
  CHECK_THROWS(parse_table_format("xml"));
}

TEST_CASE("property: scalar tables round-trip through JSON") {
  testing::Rng rng(5);
  for (int c = 0; c < testing::kPropertyCases; ++c) {
    const int cols = testing::uniform_int(rng, 1, 4);
    std::vector<std::string> names;
    for (int i = 0; i < cols; ++i) names.push_back("c" + std::to_string(i));
    std::vector<TraceTable::Row> rows;
    for (int r = testing::uniform_int(rng, 0, 6); r > 0; --r) {
      TraceTable::Row row;
      for (int i = 0; i < cols; ++i) {
        switch (testing::uniform_int(rng, 0, 2)) {
          case 0:
            row.emplace_back(std::uniform_real_distribution<double>(-1e6, 1e6)(rng));
            break;
          case 1:
            row.emplace_back(testing::key_name(rng) + ",\"x");
            break;
          default:
            row.emplace_back(testing::coin(rng));
        }
      }
      rows.push_back(std::move(row));
    }
    TraceTable t(names, rows);
    CHECK(parse_table_json(render_table(t, TableFormat::Json)) == t);
  }
}

TEST_CASE("table construction errors") {
  CHECK_THROWS_AS(TraceTable({"a", "a"}), DuplicateColumn);
  CHECK_THROWS_AS(TraceTable({"a"}, {{1, 2}}), MalformedTable);
  CHECK_THROWS_AS(parse_table_json("{"), MalformedTable);
  CHECK_THROWS_AS(parse_table_json(R"({"columns":[1],"rows":[]})"), MalformedTable);
}
