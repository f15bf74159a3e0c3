#pragma once

// Cross-module consistency suites: every algebraic identity, oracle
// agreement, and transport drift bound the toolkit promises, evaluated at
// the configured points. The pass condition is consistency — on a field
// that is not generalized Berwald the criterion and the oracle must agree
// on the failure.

#include <string>
#include <vector>

#include "randers/config.hpp"
#include "randers/gb.hpp"

namespace randers {

struct VerifyCheck {
  std::string name;
  bool pass = true;
  bool skipped = false;  // not applicable for this field (never a failure)
  double residual = 0.0;
  std::string note;
};

struct VerifyRun {
  GBReport gb;
  std::vector<VerifyCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

VerifyRun run_verify_checks(const RunConfig& cfg);

}  // namespace randers
