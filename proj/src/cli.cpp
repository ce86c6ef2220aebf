#include "reactor/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "reactor/error.hpp"
#include "reactor/scenarios.hpp"
#include "reactor/script.hpp"
#include "reactor/server.hpp"

namespace reactor {

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeFailure = 1;
constexpr int kUsage = 2;

scenarios::Params parse_params(const std::vector<std::string>& assignments) {
  scenarios::Params params;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw BadParameter("expected name=value, got '" + a + "'");
    }
    const std::string name = a.substr(0, eq);
    const std::string text = a.substr(eq + 1);
    double value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
      throw BadParameter("parameter '" + name + "' is not a number: '" + text + "'");
    }
    params[name] = value;
  }
  return params;
}

TableFormat format_from(const std::string& name) {
  return name == "json" ? TableFormat::Json : TableFormat::Csv;
}

struct RunOptions {
  std::string scenario;
  std::vector<std::string> params;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("scenario", o.scenario, "Scenario name (see `list`)")->required();
  cmd->add_option("-p,--param", o.params, "Scenario parameter as name=value (repeatable)");
}

void add_format(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("-f,--format", o.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int cmd_list(std::ostream& out) {
  for (const auto& name : scenarios::list_scenarios()) {
    out << name << "\t" << scenarios::get_scenario(name).description << "\n";
  }
  return kOk;
}

int cmd_simulate(const RunOptions& o, std::size_t ticks, std::ostream& out) {
  const AnyReactor r = scenarios::get_scenario(o.scenario).build(parse_params(o.params));
  out << render_table(r.simulate_trace(ticks), format_from(o.format));
  return kOk;
}

int cmd_trace(const RunOptions& o, const std::string& script_path, std::ostream& out,
              std::ostream& err) {
  const AnyReactor r = scenarios::get_scenario(o.scenario).build(parse_params(o.params));
  std::string text;
  if (!script_path.empty()) {
    std::ifstream file(script_path, std::ios::binary);
    if (!file) {
      err << "error: cannot read script '" << script_path << "'\n";
      return kRuntimeFailure;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  ScriptedDisplay display(parse_event_script(text));
  out << render_table(r.interact_trace(display), format_from(o.format));
  return kOk;
}

// Reads commands from `in` and steps the reactor outside any live session.
int cmd_step(const RunOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  AnyReactor r = scenarios::get_scenario(o.scenario).build(parse_params(o.params)).start_trace();
  out << canonical_dump(r.value_json()) << "\n";
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string command;
    words >> command;
    if (command.empty() || command.front() == '#') continue;
    try {
      if (command == "quit" || command == "exit") {
        break;
      } else if (command == "value") {
        out << canonical_dump(r.value_json()) << "\n";
      } else if (command == "draw") {
        out << canonical_dump(scene_to_structured(r.draw())) << "\n";
      } else if (command == "trace") {
        out << render_table(r.trace_table(), TableFormat::Csv) << "\n";
      } else if (command == "tick" || command == "key") {
        r = r.react(parse_event_script(line).front());
        out << canonical_dump(r.value_json()) << (r.stopped() ? " (stopped)" : "") << "\n";
      } else if (command == "help") {
        out << "commands: tick, key <name>, value, draw, trace, quit\n";
      } else {
        err << "unknown command '" << command << "' (try help)\n";
      }
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
  }
  return kOk;
}

int cmd_serve(std::uint16_t port, std::ostream& out) {
  Server server(port);
  out << "serving live sessions on ws://0.0.0.0:" << server.port() << "/session" << std::endl;
  server.run();
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Run, trace and serve reactor scenarios", "reactor"};
  app.require_subcommand(1);

  RunOptions run;
  std::size_t ticks = 10;
  std::string script_path;
  std::uint16_t port = kDefaultPort;

  auto* list = app.add_subcommand("list", "List the built-in scenarios");

  auto* simulate = app.add_subcommand("simulate", "Tick a scenario N times and print its trace");
  add_common(simulate, run);
  add_format(simulate, run);
  simulate->add_option("-n,--ticks", ticks, "Number of ticks")->capture_default_str();

  auto* trace = app.add_subcommand("trace", "Run a scenario against an event script");
  add_common(trace, run);
  add_format(trace, run);
  trace->add_option("-s,--script", script_path,
                    "Event script: lines of `tick` or `key <name>`; empty when omitted");

  auto* step = app.add_subcommand("step", "Step a scenario interactively from stdin");
  add_common(step, run);

  auto* serve = app.add_subcommand("serve", "Serve live sessions over WebSocket");
  serve->add_option("--port", port, "Port to listen on")
      ->envname("REACTOR_PORT")
      ->capture_default_str();

  std::vector<const char*> argv{"reactor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list(out);
    if (*simulate) return cmd_simulate(run, ticks, out);
    if (*trace) return cmd_trace(run, script_path, out, err);
    if (*step) return cmd_step(run, in, out, err);
    if (*serve) return cmd_serve(port, out);
  } catch (const UnknownScenario& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadParameter& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedScript& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  return kUsage;
}

}  // namespace reactor
