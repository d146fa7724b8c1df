#pragma once

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "run_config.hpp"

namespace vacrad::cli {

// Parse target: the RunConfig plus staging slots for values that need a
// post-parse conversion (vectors given as "x,y,z", presence-sensitive
// scalars, per-subcommand format defaults).
struct CliState {
  RunConfig config;

  double e_value = 0.0;
  double d_value = 0.0;
  double b_value = 0.0;

  std::vector<double> sim_e{0.0, 0.0, 0.0};
  std::vector<double> sim_b{0.0, 0.0, 0.0};
  std::vector<double> sim_direction{1.0, 0.0, 0.0};

  OutputFormat compute_format = OutputFormat::csv;
  OutputFormat sweep_format = OutputFormat::csv;
  OutputFormat simulate_format = OutputFormat::csv;
  OutputFormat audit_format = OutputFormat::table;

  std::string config_path;
};

// Wire the four subcommands and their flags onto the app.  Each
// subcommand accepts --config pointing at a flat `key = value` file
// (`#` comments) whose keys mirror the flags; explicit flags override
// file values.  After a successful parse, state.config is fully
// populated for run().
void attach_cli(CLI::App& app, CliState& state);

}  // namespace vacrad::cli
