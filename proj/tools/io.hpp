#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"
#include "vacrad/audit.hpp"
#include "vacrad/dynamics.hpp"
#include "vacrad/vacuum_radiation.hpp"

namespace vacrad::cli {

// 17 significant digits: every double round-trips exactly through the
// text output.
std::string fmt17(double v);

// One evaluated sweep row.  When ok is false the numeric cells besides
// induction are meaningless and status carries the message.
struct SweepRow {
  double induction = 0.0;
  double omega = 0.0;
  double omega_display = 0.0;
  double energy = 0.0;
  double intensity = 0.0;
  bool ok = true;
  std::string status = "ok";
};

// CSV: header row, comma separator, newline-terminated rows.  JSON: the
// {tool_version, config_echo, results|findings} envelope.  All renderers
// are deterministic for identical inputs.
std::string render_compute_csv(const RadiationReport& report, const RunConfig& config);
std::string render_compute_json(const RadiationReport& report, const RunConfig& config);

std::string render_sweep_csv(const std::vector<SweepRow>& rows, const RunConfig& config);
std::string render_sweep_json(const std::vector<SweepRow>& rows, const RunConfig& config);

std::string render_simulate_csv(const Trajectory& trajectory, const RunConfig& config);
std::string render_simulate_json(const Trajectory& trajectory, const RunConfig& config);

std::string render_audit_table(const std::vector<AuditFinding>& findings);
std::string render_audit_json(const std::vector<AuditFinding>& findings, const RunConfig& config);

}  // namespace vacrad::cli
