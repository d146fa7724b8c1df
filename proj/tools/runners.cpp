#include "runners.hpp"

#include <algorithm>
#include <cmath>

#include "io.hpp"
#include "vacrad/audit.hpp"
#include "vacrad/errors.hpp"
#include "vacrad/vacuum_radiation.hpp"

namespace vacrad::cli {

RunOutcome run_compute(const RunConfig& config) {
  const ConstantsTable& k = constants();
  const double D = config.D ? *config.D
                            : (config.E ? k.eps0.magnitude() * *config.E : 0.0);
  const double B = config.B.value_or(0.0);
  const RadiationReport report =
      full_report(D, B, config.mode, config.intensity_b4_variant, k);
  return {0,
          config.format == OutputFormat::json ? render_compute_json(report, config)
                                              : render_compute_csv(report, config),
          ""};
}

RunOutcome run_sweep(const RunConfig& config) {
  const ConstantsTable& k = constants();
  const SweepGrid& g = config.grid;
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(g.points));
  int failed = 0;
  for (int i = 0; i < g.points; ++i) {
    const double f = static_cast<double>(i) / (g.points - 1);
    const double x = g.log_spacing
                         ? std::exp(std::log(g.min) + f * (std::log(g.max) - std::log(g.min)))
                         : g.min + f * (g.max - g.min);
    SweepRow row;
    row.induction = x;
    try {
      const RadiationReport report =
          config.sweep_kind == FieldKind::electric
              ? full_report(x, 0.0, config.mode, config.intensity_b4_variant, k)
              : full_report(0.0, x, config.mode, config.intensity_b4_variant, k);
      const VacuumRadiationResult& r =
          config.sweep_kind == FieldKind::electric ? report.electric : report.magnetic;
      row.omega = r.omega;
      row.omega_display = ghz_display(r.omega, config.ghz);
      row.energy = r.energy;
      row.intensity = r.intensity;
    } catch (const Error& ex) {
      row.ok = false;
      row.status = std::string("domain_error: ") + ex.what();
      ++failed;
    }
    rows.push_back(std::move(row));
  }
  RunOutcome outcome;
  outcome.output = config.format == OutputFormat::json ? render_sweep_json(rows, config)
                                                       : render_sweep_csv(rows, config);
  if (failed > 0) {
    outcome.exit_code = 2;
    outcome.error = "sweep: " + std::to_string(failed) + " of " + std::to_string(g.points) +
                    " rows failed the domain check";
  }
  return outcome;
}

RunOutcome run_simulate(const RunConfig& config) {
  const ConstantsTable& k = constants();
  const SimulateBlock& s = config.sim;
  const Vec3 v0 = s.v0 * k.c.magnitude() * (s.direction / norm(s.direction));
  const ElectronState initial{{0.0, 0.0, 0.0}, v0, 0.0};
  const FieldConfig fields{s.E, s.B};
  const Trajectory trajectory = integrate(initial, fields, s.dt, s.steps, s.dynamics, k);
  return {0,
          config.format == OutputFormat::json ? render_simulate_json(trajectory, config)
                                              : render_simulate_csv(trajectory, config),
          ""};
}

RunOutcome run_audit(const RunConfig& config) {
  const std::vector<AuditFinding> findings = run_full_audit();
  const bool any_fail = std::any_of(findings.begin(), findings.end(), [](const AuditFinding& f) {
    return f.severity == Severity::fail;
  });
  RunOutcome outcome;
  outcome.output = config.format == OutputFormat::json ? render_audit_json(findings, config)
                                                       : render_audit_table(findings);
  if (config.fail_on_findings && any_fail) {
    outcome.exit_code = 3;
    outcome.error = "audit: fail-severity findings present";
  }
  return outcome;
}

RunOutcome run(const RunConfig& config) {
  const std::string problem = validate(config);
  if (!problem.empty()) return {1, "", "invalid configuration: " + problem};
  try {
    switch (config.command) {
      case Command::compute: return run_compute(config);
      case Command::sweep: return run_sweep(config);
      case Command::simulate: return run_simulate(config);
      case Command::audit: return run_audit(config);
    }
  } catch (const StepRejected& ex) {
    return {2, "", std::string("step rejected: ") + ex.what()};
  } catch (const Error& ex) {
    return {2, "", std::string("domain error: ") + ex.what()};
  }
  return {1, "", "invalid configuration: unknown command"};
}

}  // namespace vacrad::cli
