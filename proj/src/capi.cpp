#include "randers/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "randers/config.hpp"
#include "randers/error.hpp"
#include "randers/report.hpp"

struct randers_run {
  randers::RunConfig cfg;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_msg(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = copy_string(msg);
}

randers_status status_of(const std::exception& e) {
  if (dynamic_cast<const randers::ConfigError*>(&e)) return RANDERS_ERR_CONFIG;
  if (dynamic_cast<const randers::InvalidRandersError*>(&e))
    return RANDERS_ERR_INVALID_RANDERS;
  if (dynamic_cast<const randers::NotBerwaldError*>(&e)) return RANDERS_ERR_NOT_BERWALD;
  return RANDERS_ERR_NUMERICAL;
}

using CommandFn = randers::RunOutcome (*)(const randers::RunConfig&);

randers_status run_command(const randers_run* run, CommandFn fn, char** report_json,
                           char** errmsg) {
  if (report_json) *report_json = nullptr;
  if (errmsg) *errmsg = nullptr;
  if (!run) {
    set_msg(errmsg, "null run handle");
    return RANDERS_ERR_CONFIG;
  }
  try {
    const randers::RunOutcome outcome = fn(run->cfg);
    if (report_json) *report_json = copy_string(outcome.report.dump(2));
    return static_cast<randers_status>(outcome.status);
  } catch (const std::exception& e) {
    set_msg(errmsg, e.what());
    return status_of(e);
  }
}

}  // namespace

extern "C" {

const char* randers_version(void) { return "0.1.0"; }

int randers_example_count(void) {
  return static_cast<int>(randers::example_names().size());
}

const char* randers_example_name(int index) {
  static const std::vector<std::string> names = randers::example_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<size_t>(index)].c_str();
}

randers_run* randers_run_from_json(const char* json_text, char** errmsg) {
  if (errmsg) *errmsg = nullptr;
  if (!json_text) {
    set_msg(errmsg, "null config text");
    return nullptr;
  }
  try {
    auto* run = new randers_run{randers::RunConfig::from_json_text(json_text)};
    return run;
  } catch (const std::exception& e) {
    set_msg(errmsg, e.what());
    return nullptr;
  }
}

randers_run* randers_run_from_example(const char* name, char** errmsg) {
  if (errmsg) *errmsg = nullptr;
  if (!name) {
    set_msg(errmsg, "null example name");
    return nullptr;
  }
  try {
    auto* run = new randers_run{randers::RunConfig::from_example(name)};
    return run;
  } catch (const std::exception& e) {
    set_msg(errmsg, e.what());
    return nullptr;
  }
}

void randers_run_free(randers_run* run) { delete run; }

void randers_run_set_seed(randers_run* run, uint64_t seed) {
  if (run) run->cfg.seed = seed;
}

void randers_run_set_samples(randers_run* run, int samples) {
  if (run && samples >= 2) run->cfg.samples = samples;
}

void randers_run_set_steps(randers_run* run, int steps) {
  if (!run || steps < 1) return;
  for (auto& c : run->cfg.curves) c.steps = steps;
}

randers_status randers_run_clear_points(randers_run* run) {
  if (!run) return RANDERS_ERR_CONFIG;
  run->cfg.points.clear();
  run->cfg.random_points = 0;
  return RANDERS_OK;
}

randers_status randers_run_add_point(randers_run* run, const double* coords,
                                     int dimension, char** errmsg) {
  if (errmsg) *errmsg = nullptr;
  if (!run || !coords) {
    set_msg(errmsg, "null argument");
    return RANDERS_ERR_CONFIG;
  }
  if (dimension != run->cfg.dimension) {
    set_msg(errmsg, "point dimension " + std::to_string(dimension) +
                        " does not match field dimension " +
                        std::to_string(run->cfg.dimension));
    return RANDERS_ERR_CONFIG;
  }
  randers::Vec p(coords, coords + dimension);
  if (!run->cfg.spec().domain().contains(p)) {
    set_msg(errmsg, "point lies outside the domain box");
    return RANDERS_ERR_CONFIG;
  }
  run->cfg.points.push_back(std::move(p));
  return RANDERS_OK;
}

randers_status randers_run_check(const randers_run* run, char** report_json,
                                 char** errmsg) {
  return run_command(run, randers::run_check, report_json, errmsg);
}

randers_status randers_run_connection(const randers_run* run, char** report_json,
                                      char** errmsg) {
  return run_command(run, randers::run_connection, report_json, errmsg);
}

randers_status randers_run_transport(const randers_run* run, char** report_json,
                                     char** errmsg) {
  return run_command(run, randers::run_transport, report_json, errmsg);
}

randers_status randers_run_verify(const randers_run* run, char** report_json,
                                  char** errmsg) {
  return run_command(run, randers::run_verify, report_json, errmsg);
}

void randers_string_free(char* s) { std::free(s); }

}  // extern "C"
