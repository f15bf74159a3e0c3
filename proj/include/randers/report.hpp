#pragma once

// Command implementations shared by the C API and (through it) the CLI:
// each runs one workflow on a RunConfig and produces a status code plus a
// machine-readable JSON report. Status codes: 0 success, 2 invalid Randers
// metric, 3 not generalized Berwald; config and numerical errors (1, 4)
// surface as exceptions.

#include <json.hpp>

#include "randers/config.hpp"

namespace randers {

struct RunOutcome {
  int status = 0;
  nlohmann::ordered_json report;
};

RunOutcome run_check(const RunConfig& cfg);
RunOutcome run_connection(const RunConfig& cfg);
RunOutcome run_transport(const RunConfig& cfg);
RunOutcome run_verify(const RunConfig& cfg);

}  // namespace randers
