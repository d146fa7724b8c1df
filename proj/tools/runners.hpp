#pragma once

#include <string>

#include "run_config.hpp"

namespace vacrad::cli {

// What a run produced: the document for stdout/file, a message for
// stderr, and the process exit code (0 ok, 1 usage/config, 2 domain or
// numeric, 3 audit fail policy).
struct RunOutcome {
  int exit_code = 0;
  std::string output;
  std::string error;
};

RunOutcome run_compute(const RunConfig& config);
RunOutcome run_sweep(const RunConfig& config);
RunOutcome run_simulate(const RunConfig& config);
RunOutcome run_audit(const RunConfig& config);

// Validate, dispatch, and map library errors to exit codes.
RunOutcome run(const RunConfig& config);

}  // namespace vacrad::cli
