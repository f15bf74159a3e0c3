// Command-line frontend. Talks to the toolkit exclusively through the C API
// in randers/capi.h; config parsing, all geometry, and report generation
// live behind that boundary.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "randers/capi.h"

namespace {

using nlohmann::json;

struct RunDeleter {
  void operator()(randers_run* r) const { randers_run_free(r); }
};
using RunPtr = std::unique_ptr<randers_run, RunDeleter>;

struct CommonOpts {
  std::string config_path;
  std::string example;
  std::vector<std::string> points;
  std::string output;
  bool raw_json = false;
  int64_t seed = -1;
  int steps = 0;
  int samples = 0;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_steps) {
  auto* cfg = cmd->add_option("--config", opts.config_path, "path to a config JSON file");
  auto* ex = cmd->add_option("--example", opts.example,
                             "built-in example name (flat-const, helical, shear, warped-2d)");
  cfg->excludes(ex);
  cmd->add_option("--point", opts.points,
                  "evaluation point \"x1,x2,...\" (repeatable; replaces config points)");
  cmd->add_option("--seed", opts.seed, "override the sampling seed");
  cmd->add_option("--samples", opts.samples, "override the criterion sample count");
  if (with_steps) cmd->add_option("--steps", opts.steps, "override curve step counts");
  cmd->add_option("--output", opts.output, "write the JSON report to this path");
  cmd->add_flag("--json", opts.raw_json, "print the raw JSON report instead of a summary");
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  randers_string_free(s);
  return out;
}

// exit code 1 on any malformed input, matching the status table
int fail_config(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return RANDERS_ERR_CONFIG;
}

RunPtr load_run(const CommonOpts& opts, int& error_code) {
  char* errmsg = nullptr;
  RunPtr run;
  if (!opts.example.empty()) {
    run.reset(randers_run_from_example(opts.example.c_str(), &errmsg));
  } else if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      error_code = fail_config("cannot open config file: " + opts.config_path);
      return nullptr;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    run.reset(randers_run_from_json(buf.str().c_str(), &errmsg));
  } else {
    error_code = fail_config("one of --config or --example is required");
    return nullptr;
  }
  if (!run) {
    error_code = fail_config(take_string(errmsg));
    return nullptr;
  }

  if (opts.seed >= 0) randers_run_set_seed(run.get(), static_cast<uint64_t>(opts.seed));
  if (opts.samples > 0) randers_run_set_samples(run.get(), opts.samples);
  if (opts.steps > 0) randers_run_set_steps(run.get(), opts.steps);

  if (!opts.points.empty()) {
    randers_run_clear_points(run.get());
    for (const std::string& spec : opts.points) {
      std::vector<double> coords;
      std::stringstream ss(spec);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          coords.push_back(std::stod(tok));
        } catch (...) {
          error_code = fail_config("malformed --point: " + spec);
          return nullptr;
        }
      }
      char* perr = nullptr;
      if (randers_run_add_point(run.get(), coords.data(),
                                static_cast<int>(coords.size()), &perr) != RANDERS_OK) {
        error_code = fail_config(take_string(perr));
        return nullptr;
      }
    }
  }
  error_code = 0;
  return run;
}

void print_check_summary(const json& rep) {
  const auto& gb = rep["gb"];
  std::cout << "verdict: " << gb["verdict"].get<std::string>() << "\n"
            << "K:       " << gb["K"].get<double>() << "\n";
  const auto& st = gb["length_stats"];
  std::cout << "|beta#|: min " << st["min"].get<double>() << ", max "
            << st["max"].get<double>() << ", mean " << st["mean"].get<double>()
            << ", std " << st["std"].get<double>() << "  (" << gb["samples"]
            << " samples, seed " << gb["seed"] << ")\n";
}

void print_connection_summary(const json& rep) {
  print_check_summary(rep);
  if (!rep.contains("points")) return;
  for (const auto& entry : rep["points"]) {
    std::cout << "\npoint [";
    const auto& p = entry["point"];
    for (size_t i = 0; i < p.size(); ++i)
      std::cout << (i ? ", " : "") << p[i].get<double>();
    std::cout << "]\n";
    if (entry.contains("norm_sq")) {
      std::cout << "  |T_circ|^2    = " << entry["norm_sq"]["torsion_circ"].get<double>()
                << "\n"
                << "  |T_extremal|^2 = "
                << entry["norm_sq"]["extremal_torsion"].get<double>() << "\n";
    }
    if (entry.contains("integrability_defect"))
      std::cout << "  integrability defect = "
                << entry["integrability_defect"].get<double>() << "\n";
  }
}

void print_transport_summary(const json& rep) {
  print_check_summary(rep);
  if (!rep.contains("transports")) return;
  for (const auto& tr : rep["transports"]) {
    std::cout << "curve " << tr["curve"] << " under "
              << tr["connection"].get<std::string>() << ": drift alpha "
              << tr["drift_alpha"].get<double>() << ", beta "
              << tr["drift_beta"].get<double>() << ", F " << tr["drift_F"].get<double>()
              << " (" << tr["steps"] << " steps)\n";
  }
}

void print_verify_summary(const json& rep) {
  print_check_summary(rep);
  for (const auto& c : rep["checks"]) {
    const bool skipped = c.contains("skipped") && c["skipped"].get<bool>();
    const char* mark = skipped ? "SKIP" : (c["pass"].get<bool>() ? "PASS" : "FAIL");
    std::cout << "[" << mark << "] " << c["name"].get<std::string>();
    if (!skipped) std::cout << "  (residual " << c["residual"].get<double>() << ")";
    if (c.contains("note")) std::cout << "  -- " << c["note"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << (rep["all_pass"].get<bool>() ? "all checks passed"
                                            : "SOME CHECKS FAILED")
            << "\n";
}

using CommandFn = randers_status (*)(const randers_run*, char**, char**);
using SummaryFn = void (*)(const json&);

int dispatch(const CommonOpts& opts, CommandFn command, SummaryFn summary) {
  int error_code = 0;
  RunPtr run = load_run(opts, error_code);
  if (!run) return error_code;

  char* report = nullptr;
  char* errmsg = nullptr;
  const randers_status status = command(run.get(), &report, &errmsg);
  const std::string report_text = take_string(report);
  const std::string error_text = take_string(errmsg);

  if (report_text.empty()) {
    std::cerr << "error: " << (error_text.empty() ? "no report produced" : error_text)
              << "\n";
    return status;
  }

  if (!opts.output.empty()) {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) return fail_config("cannot write report to " + opts.output);
    out << report_text << "\n";
  }

  if (opts.raw_json) {
    std::cout << report_text << "\n";
  } else {
    summary(json::parse(report_text));
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randers metric compatible-connection toolkit"};
  app.set_version_flag("--version", std::string(randers_version()));
  app.require_subcommand(1);

  CommonOpts opts;

  auto* check = app.add_subcommand(
      "check", "decide the generalized Berwald criterion (constant |beta#|)");
  add_common_flags(check, opts, false);

  auto* connection = app.add_subcommand(
      "connection",
      "construct the difference tensor, nabla°, and the extremal torsion at points");
  add_common_flags(connection, opts, false);

  auto* transport = app.add_subcommand(
      "transport", "parallel transport along the configured curves with drift diagnostics");
  add_common_flags(transport, opts, true);

  auto* verify = app.add_subcommand(
      "verify", "run the full formula-vs-oracle and invariant check suites");
  add_common_flags(verify, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : RANDERS_ERR_CONFIG;
  }

  if (check->parsed()) return dispatch(opts, randers_run_check, print_check_summary);
  if (connection->parsed())
    return dispatch(opts, randers_run_connection, print_connection_summary);
  if (transport->parsed())
    return dispatch(opts, randers_run_transport, print_transport_summary);
  if (verify->parsed()) return dispatch(opts, randers_run_verify, print_verify_summary);
  return RANDERS_ERR_CONFIG;
}
