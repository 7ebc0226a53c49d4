// Copyright 2026 The qse-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the steering-ellipsoid toolkit.  Talks to the
// library exclusively through the C API in qse/qse.h.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification failure.

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qse/qse.h>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyFailed = 3;

struct StateDeleter {
  void operator()(qse_state* s) const { qse_state_free(s); }
};
struct ChannelDeleter {
  void operator()(qse_channel* c) const { qse_channel_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { qse_string_free(s); }
};
using StatePtr = std::unique_ptr<qse_state, StateDeleter>;
using ChannelPtr = std::unique_ptr<qse_channel, ChannelDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_input_error(const std::string& context, qse_status status) {
  std::fprintf(stderr, "error: %s: %s (%s)\n", context.c_str(), qse_last_error(),
               qse_status_name(status));
  return kExitInvalidInput;
}

// Writes to `path`, or to stdout when the path is empty.  Returns an exit code.
int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    return kExitInvalidInput;
  }
  return 0;
}

// Shared input options: a state source plus an optional channel to push it
// through before analysis.
struct StateArgs {
  std::string state_path;
  std::vector<double> bell;
  std::string channel_path;
  std::optional<double> ad_p;
};

void add_state_options(CLI::App* cmd, StateArgs& args) {
  auto* source = cmd->add_option_group("state source");
  source->add_option("--state", args.state_path,
                     "state JSON file (bell_diag / theta / density)");
  source
      ->add_option("--bell", args.bell,
                   "Bell-diagonal coefficients c1 c2 c3")
      ->expected(3);
  source->require_option(1);

  auto* channel = cmd->add_option_group("channel (optional)");
  channel->add_option("--channel", args.channel_path, "channel JSON file");
  channel->add_option("--ad", args.ad_p,
                      "amplitude damping with decay probability p");
  channel->require_option(0, 1);
}

// Builds the (possibly channel-mapped) state; on failure returns an exit code
// in `error` and null.
StatePtr make_state(const StateArgs& args, int& error) {
  qse_state* raw = nullptr;
  qse_status status;
  if (!args.state_path.empty()) {
    status = qse_state_load(args.state_path.c_str(), &raw);
    if (status != QSE_OK) {
      error = report_input_error("loading " + args.state_path, status);
      return nullptr;
    }
  } else {
    status = qse_state_bell_diagonal(args.bell[0], args.bell[1], args.bell[2], &raw);
    if (status != QSE_OK) {
      error = report_input_error("building the Bell-diagonal state", status);
      return nullptr;
    }
  }
  StatePtr state(raw);

  ChannelPtr channel;
  if (!args.channel_path.empty()) {
    qse_channel* ch = nullptr;
    status = qse_channel_load(args.channel_path.c_str(), &ch);
    if (status != QSE_OK) {
      error = report_input_error("loading " + args.channel_path, status);
      return nullptr;
    }
    channel.reset(ch);
  } else if (args.ad_p) {
    qse_channel* ch = nullptr;
    status = qse_channel_amplitude_damping(*args.ad_p, &ch);
    if (status != QSE_OK) {
      error = report_input_error("building the damping channel", status);
      return nullptr;
    }
    channel.reset(ch);
  }

  if (channel) {
    qse_state* mapped = nullptr;
    status = qse_apply_local_b(state.get(), channel.get(), &mapped);
    if (status != QSE_OK) {
      error = report_input_error("applying the channel", status);
      return nullptr;
    }
    state.reset(mapped);
  }
  error = 0;
  return state;
}

json ellipsoid_json(const qse_ellipsoid& e) {
  StringPtr text;
  {
    char* raw = nullptr;
    if (qse_ellipsoid_to_json(&e, &raw) != QSE_OK) return json();
    text.reset(raw);
  }
  return json::parse(text.get());
}

int run_qse(const StateArgs& args, bool with_theorem, const std::string& out_path) {
  int error = 0;
  const StatePtr state = make_state(args, error);
  if (!state) return error;

  json doc;
  for (int side = 0; side < 2; ++side) {
    const char* label = side == 0 ? "a" : "b";
    qse_ellipsoid e;
    if (const qse_status st = qse_steering_ellipsoid(state.get(), side, &e);
        st != QSE_OK)
      return report_input_error("computing the steering ellipsoid", st);
    qse_size size;
    qse_ellipsoid_size(&e, &size);
    json entry = ellipsoid_json(e);
    entry["length"] = size.length;
    entry["area"] = size.area;
    entry["volume"] = size.volume;
    if (e.dim <= 1) {
      int radial = 0;
      qse_is_radial_segment(&e, 1e-8, &radial);
      entry["radial"] = radial != 0;
    }
    int origin = 0;
    qse_contains_origin(&e, 1e-9, &origin);
    entry["contains_origin"] = origin != 0;
    doc[std::string("ellipsoid_") + label] = entry;

    double bloch[3];
    qse_state_reduced_bloch(state.get(), side, bloch);
    doc[std::string("reduced_") + label] = {bloch[0], bloch[1], bloch[2]};
  }

  qse_discord d;
  if (const qse_status st = qse_discord_b(state.get(), &d); st != QSE_OK)
    return report_input_error("computing the discord", st);
  doc["discord_b"] = d.discord;
  doc["discord_direction"] = {d.direction[0], d.direction[1], d.direction[2]};
  doc["discord_method"] = d.analytic ? "analytic_x" : "numeric";

  double value = 0.0;
  qse_concurrence(state.get(), &value);
  doc["concurrence"] = value;
  qse_mutual_information(state.get(), &value);
  doc["mutual_information"] = value;
  qse_entropy(state.get(), &value);
  doc["entropy"] = value;

  if (with_theorem) {
    char* raw = nullptr;
    if (const qse_status st = qse_theorem_report_json(state.get(), &raw);
        st != QSE_OK)
      return report_input_error("building the theorem report", st);
    const StringPtr text(raw);
    doc["theorem"] = json::parse(text.get());
  }

  return write_output(doc.dump(2) + "\n", out_path);
}

// Reads --config (when given) and layers explicitly passed flags on top.
int load_config(const std::string& path, json& doc) {
  doc = json::object();
  if (path.empty()) return 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    return kExitInvalidInput;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  doc = json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    std::fprintf(stderr, "error: %s is not a JSON object\n", path.c_str());
    return kExitInvalidInput;
  }
  return 0;
}

struct ScanArgs {
  std::string config_path;
  std::vector<double> bell;
  std::string state_path;
  std::string channel_kind;
  std::string channel_path;
  double p_start = 0.0, p_end = 1.0;
  int steps = 201;
  double gamma = 0.0, t_start = 0.0, t_end = 1.0;
  std::vector<std::string> columns;
  unsigned long long seed = 42;
  std::string out_path;
};

int run_scan(const CLI::App* cmd, const ScanArgs& args) {
  json config;
  if (const int rc = load_config(args.config_path, config); rc != 0) return rc;

  if (cmd->count("--bell")) {
    config["bell_c"] = args.bell;
    config.erase("state_path");
  }
  if (cmd->count("--state")) {
    config["state_path"] = args.state_path;
    config.erase("bell_c");
  }
  if (cmd->count("--channel-kind")) config["channel_kind"] = args.channel_kind;
  if (cmd->count("--channel")) {
    config["channel_path"] = args.channel_path;
    if (!cmd->count("--channel-kind")) config["channel_kind"] = "file";
  }
  if (cmd->count("--p-start")) config["p_start"] = args.p_start;
  if (cmd->count("--p-end")) config["p_end"] = args.p_end;
  if (cmd->count("--steps")) config["steps"] = args.steps;
  if (cmd->count("--gamma")) config["gamma"] = args.gamma;
  if (cmd->count("--t-start")) config["t_start"] = args.t_start;
  if (cmd->count("--t-end")) config["t_end"] = args.t_end;
  if (cmd->count("--columns")) config["columns"] = args.columns;
  if (cmd->count("--seed")) config["seed"] = args.seed;

  char* raw = nullptr;
  if (const qse_status st = qse_run_p_scan(config.dump().c_str(), &raw);
      st != QSE_OK)
    return report_input_error("running the scan", st);
  const StringPtr csv(raw);
  return write_output(csv.get(), args.out_path);
}

struct C3Args {
  std::string config_path;
  double c1 = 0.9, c2 = -0.1;
  double c3_start = 0.0, c3_end = 0.2;
  int c3_steps = 21, p_steps = 201;
  unsigned long long seed = 42;
  std::string out_path;
};

int run_c3scan(const CLI::App* cmd, const C3Args& args) {
  json config;
  if (const int rc = load_config(args.config_path, config); rc != 0) return rc;

  if (cmd->count("--c1")) config["c1"] = args.c1;
  if (cmd->count("--c2")) config["c2"] = args.c2;
  if (cmd->count("--c3-start")) config["c3_start"] = args.c3_start;
  if (cmd->count("--c3-end")) config["c3_end"] = args.c3_end;
  if (cmd->count("--c3-steps")) config["c3_steps"] = args.c3_steps;
  if (cmd->count("--p-steps")) config["p_steps"] = args.p_steps;
  if (cmd->count("--seed")) config["seed"] = args.seed;

  char* raw = nullptr;
  if (const qse_status st = qse_run_c3_scan(config.dump().c_str(), &raw);
      st != QSE_OK)
    return report_input_error("running the c3 scan", st);
  const StringPtr csv(raw);
  return write_output(csv.get(), args.out_path);
}

int run_demo(double delta, const std::string& out_path) {
  char* raw = nullptr;
  if (const qse_status st = qse_needle_demo(delta, &raw); st != QSE_OK)
    return report_input_error("running the demo", st);
  const StringPtr text(raw);
  return write_output(std::string(text.get()) + "\n", out_path);
}

int run_verify(int trials, unsigned long long seed, const std::string& out_path) {
  char* raw = nullptr;
  int all_passed = 0;
  if (const qse_status st = qse_run_verify(trials, seed, &raw, &all_passed);
      st != QSE_OK)
    return report_input_error("running the verification", st);
  const StringPtr report(raw);
  if (const int rc = write_output(report.get(), out_path); rc != 0) return rc;
  return all_passed ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Steering ellipsoids, local channels, and discord for two-qubit states"};
  app.set_version_flag("--version", qse_version());
  app.require_subcommand(1);

  // qse: single-state analysis --------------------------------------------
  auto* qse_cmd = app.add_subcommand(
      "qse", "ellipsoids, discord, and entanglement of one state");
  StateArgs qse_args;
  add_state_options(qse_cmd, qse_args);
  bool with_theorem = false;
  qse_cmd->add_flag("--theorem", with_theorem,
                    "include the needle-decomposition report");
  std::string qse_out;
  qse_cmd->add_option("--out", qse_out, "write JSON here instead of stdout");

  // scan: damping sweep ------------------------------------------------------
  auto* scan_cmd =
      app.add_subcommand("scan", "sweep a one-parameter channel family to CSV");
  ScanArgs scan_args;
  scan_cmd->add_option("--config", scan_args.config_path, "config JSON file");
  scan_cmd->add_option("--bell", scan_args.bell, "Bell-diagonal c1 c2 c3")
      ->expected(3);
  scan_cmd->add_option("--state", scan_args.state_path, "state JSON file");
  scan_cmd->add_option("--channel-kind", scan_args.channel_kind,
                       "ad | identity | file");
  scan_cmd->add_option("--channel", scan_args.channel_path,
                       "channel JSON file (kind \"file\")");
  scan_cmd->add_option("--p-start", scan_args.p_start, "grid start (default 0)");
  scan_cmd->add_option("--p-end", scan_args.p_end, "grid end (default 1)");
  scan_cmd->add_option("--steps", scan_args.steps, "grid points (default 201)");
  scan_cmd->add_option("--gamma", scan_args.gamma,
                       "decay rate: sweep time instead of p (p = 1 - exp(-gamma t))");
  scan_cmd->add_option("--t-start", scan_args.t_start, "time grid start");
  scan_cmd->add_option("--t-end", scan_args.t_end, "time grid end");
  scan_cmd->add_option("--columns", scan_args.columns, "comma-separated columns")
      ->delimiter(',');
  scan_cmd->add_option("--seed", scan_args.seed, "minimizer seed (default 42)");
  scan_cmd->add_option("--out", scan_args.out_path,
                       "write CSV here instead of stdout");

  // c3scan: revival summary over c3 -----------------------------------------
  auto* c3_cmd = app.add_subcommand(
      "c3scan", "summarize discord revival across Bell-diagonal c3");
  C3Args c3_args;
  c3_cmd->add_option("--config", c3_args.config_path, "config JSON file");
  c3_cmd->add_option("--c1", c3_args.c1, "c1 (default 0.9)");
  c3_cmd->add_option("--c2", c3_args.c2, "c2 (default -0.1)");
  c3_cmd->add_option("--c3-start", c3_args.c3_start, "c3 grid start (default 0)");
  c3_cmd->add_option("--c3-end", c3_args.c3_end, "c3 grid end (default 0.2)");
  c3_cmd->add_option("--c3-steps", c3_args.c3_steps, "c3 grid points (default 21)");
  c3_cmd->add_option("--p-steps", c3_args.p_steps,
                     "damping grid points per c3 (default 201)");
  c3_cmd->add_option("--seed", c3_args.seed, "minimizer seed (default 42)");
  c3_cmd->add_option("--out", c3_args.out_path,
                     "write CSV here instead of stdout");

  // demo-needle: the two-mixture comparison ----------------------------------
  auto* demo_cmd = app.add_subcommand(
      "demo-needle",
      "compare a radially blurred two-product mixture with its sharp variant");
  double delta = 0.1;
  demo_cmd->add_option("--delta", delta, "blur parameter in [0, 1) (default 0.1)");
  std::string demo_out;
  demo_cmd->add_option("--out", demo_out, "write JSON here instead of stdout");

  // verify: randomized property suites ---------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "run the randomized self-check suites");
  int trials = 100;
  unsigned long long seed = 42;
  verify_cmd->add_option("--trials", trials, "samples per suite (default 100)");
  verify_cmd->add_option("--seed", seed, "master seed (default 42)");
  std::string verify_out;
  verify_cmd->add_option("--out", verify_out,
                         "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (qse_cmd->parsed()) return run_qse(qse_args, with_theorem, qse_out);
  if (scan_cmd->parsed()) return run_scan(scan_cmd, scan_args);
  if (c3_cmd->parsed()) return run_c3scan(c3_cmd, c3_args);
  if (demo_cmd->parsed()) return run_demo(delta, demo_out);
  if (verify_cmd->parsed()) {
    if (trials <= 0) {
      std::fprintf(stderr, "error: --trials must be positive\n");
      return kExitUsage;
    }
    return run_verify(trials, seed, verify_out);
  }
  return kExitUsage;
}
