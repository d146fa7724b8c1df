#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include <nlohmann/json.hpp>

#include "vacrad/quantities.hpp"

namespace vacrad::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// The echoed configuration covers every field that shaped the run, so a
// reader can reproduce it; the output path is not part of the result.
ordered_json config_echo(const RunConfig& c) {
  ordered_json e;
  e["command"] = to_string(c.command);
  switch (c.command) {
    case Command::compute:
      if (c.E) e["E"] = *c.E;
      if (c.D) e["D"] = *c.D;
      if (c.B) e["B"] = *c.B;
      e["mode"] = mode_name(c.mode);
      e["format"] = to_string(c.format);
      e["ghz_convention"] = ghz_name(c.ghz);
      e["intensity_b4_variant"] = c.intensity_b4_variant;
      break;
    case Command::sweep:
      e["kind"] = kind_name(c.sweep_kind);
      e["min"] = c.grid.min;
      e["max"] = c.grid.max;
      e["points"] = c.grid.points;
      e["spacing"] = c.grid.log_spacing ? "log" : "linear";
      e["mode"] = mode_name(c.mode);
      e["format"] = to_string(c.format);
      e["ghz_convention"] = ghz_name(c.ghz);
      e["intensity_b4_variant"] = c.intensity_b4_variant;
      break;
    case Command::simulate:
      e["E"] = {c.sim.E.x, c.sim.E.y, c.sim.E.z};
      e["B"] = {c.sim.B.x, c.sim.B.y, c.sim.B.z};
      e["v0"] = c.sim.v0;
      e["direction"] = {c.sim.direction.x, c.sim.direction.y, c.sim.direction.z};
      e["dt"] = c.sim.dt;
      e["steps"] = c.sim.steps;
      e["dynamics"] = dynamics_name(c.sim.dynamics);
      e["format"] = to_string(c.format);
      break;
    case Command::audit:
      e["format"] = to_string(c.format);
      e["fail_on_findings"] = c.fail_on_findings;
      break;
  }
  return e;
}

ordered_json envelope(const RunConfig& config) {
  ordered_json doc;
  doc["tool_version"] = tool_version;
  doc["config_echo"] = config_echo(config);
  return doc;
}

ordered_json result_row(const VacuumRadiationResult& r, const LambComparison& lamb,
                        GhzConvention ghz) {
  ordered_json row;
  row["field_kind"] = kind_name(r.field_kind);
  row["induction"] = r.induction;
  row["omega"] = r.omega;
  row["omega_display_ghz"] = ghz_display(r.omega, ghz);
  row["energy_J"] = r.energy;
  row["intensity_J_per_s"] = r.intensity;
  row["lamb_ratios"] = {{"energy", lamb.energy_ratio},
                        {"intensity", lamb.intensity_ratio},
                        {"frequency", lamb.frequency_ratio}};
  row["mode"] = mode_name(r.mode);
  return row;
}

void append_compute_row(std::string& out, const VacuumRadiationResult& r,
                        const LambComparison& lamb, GhzConvention ghz) {
  out += kind_name(r.field_kind);
  out += ',' + fmt17(r.induction);
  out += ',' + fmt17(r.omega);
  out += ',' + fmt17(ghz_display(r.omega, ghz));
  out += ',' + fmt17(r.energy);
  out += ',' + fmt17(r.intensity);
  out += ',' + fmt17(lamb.energy_ratio);
  out += ',' + fmt17(lamb.intensity_ratio);
  out += ',' + fmt17(lamb.frequency_ratio);
  out += ',';
  out += mode_name(r.mode);
  out += '\n';
}

// Keep CSV cells comma-free.
std::string sanitize_cell(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  return text;
}

struct SimSummary {
  double radiated_energy = 0.0;
  double final_speed = 0.0;
  double final_speed_over_c = 0.0;
  std::optional<double> speed_drift_rel;  // standard-mode pure-B runs only
};

SimSummary summarize(const Trajectory& t, const RunConfig& config) {
  const double c_light = constants().c.magnitude();
  SimSummary s;
  s.radiated_energy = t.radiated_energy;
  const Vec3& v_first = t.samples.front().state.velocity;
  const Vec3& v_last = t.samples.back().state.velocity;
  s.final_speed = norm(v_last);
  s.final_speed_over_c = s.final_speed / c_light;
  const bool pure_b = config.sim.dynamics == DynamicsMode::standard_lorentz &&
                      norm_sq(config.sim.E) == 0.0 && norm_sq(config.sim.B) > 0.0;
  if (pure_b) {
    const double v0 = norm(v_first);
    s.speed_drift_rel = v0 > 0.0 ? (s.final_speed - v0) / v0 : 0.0;
  }
  return s;
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string render_compute_csv(const RadiationReport& report, const RunConfig& config) {
  std::string out =
      "field_kind,induction,omega,omega_display_ghz,energy_J,intensity_J_per_s,"
      "energy_vs_lamb,intensity_vs_lamb,omega_vs_lamb,mode\n";
  append_compute_row(out, report.electric, report.electric_vs_lamb, config.ghz);
  append_compute_row(out, report.magnetic, report.magnetic_vs_lamb, config.ghz);
  return out;
}

std::string render_compute_json(const RadiationReport& report, const RunConfig& config) {
  ordered_json doc = envelope(config);
  ordered_json results;
  results["electric"] = result_row(report.electric, report.electric_vs_lamb, config.ghz);
  results["magnetic"] = result_row(report.magnetic, report.magnetic_vs_lamb, config.ghz);
  results["lamb_reference"] = {{"energy_J", report.lamb.energy},
                               {"intensity_J_per_s", report.lamb.intensity},
                               {"frequency_per_s", report.lamb.frequency}};
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows, const RunConfig& config) {
  std::string out = "induction,omega,omega_display,energy_J,intensity_J_per_s,mode,status\n";
  for (const SweepRow& r : rows) {
    out += fmt17(r.induction);
    if (r.ok) {
      out += ',' + fmt17(r.omega);
      out += ',' + fmt17(r.omega_display);
      out += ',' + fmt17(r.energy);
      out += ',' + fmt17(r.intensity);
    } else {
      out += ",,,,";
    }
    out += ',';
    out += mode_name(config.mode);
    out += ',' + sanitize_cell(r.status) + '\n';
  }
  return out;
}

std::string render_sweep_json(const std::vector<SweepRow>& rows, const RunConfig& config) {
  ordered_json doc = envelope(config);
  ordered_json out_rows = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json row;
    row["induction"] = r.induction;
    if (r.ok) {
      row["omega"] = r.omega;
      row["omega_display"] = r.omega_display;
      row["energy_J"] = r.energy;
      row["intensity_J_per_s"] = r.intensity;
    }
    row["mode"] = mode_name(config.mode);
    row["status"] = r.status;
    out_rows.push_back(std::move(row));
  }
  doc["results"] = {{"kind", kind_name(config.sweep_kind)}, {"rows", std::move(out_rows)}};
  return doc.dump(2) + "\n";
}

std::string render_simulate_csv(const Trajectory& trajectory, const RunConfig& config) {
  std::string out = "t_s,x_m,y_m,z_m,vx_m_per_s,vy_m_per_s,vz_m_per_s,power_W\n";
  for (const TrajectorySample& s : trajectory.samples) {
    out += fmt17(s.state.t);
    out += ',' + fmt17(s.state.position.x);
    out += ',' + fmt17(s.state.position.y);
    out += ',' + fmt17(s.state.position.z);
    out += ',' + fmt17(s.state.velocity.x);
    out += ',' + fmt17(s.state.velocity.y);
    out += ',' + fmt17(s.state.velocity.z);
    out += ',' + fmt17(s.power) + '\n';
  }
  const SimSummary sum = summarize(trajectory, config);
  out += "# radiated_energy_J = " + fmt17(sum.radiated_energy) + '\n';
  out += "# final_speed_m_per_s = " + fmt17(sum.final_speed) + '\n';
  out += "# final_speed_over_c = " + fmt17(sum.final_speed_over_c) + '\n';
  if (sum.speed_drift_rel)
    out += "# speed_drift_rel = " + fmt17(*sum.speed_drift_rel) + '\n';
  return out;
}

std::string render_simulate_json(const Trajectory& trajectory, const RunConfig& config) {
  ordered_json doc = envelope(config);
  ordered_json samples = ordered_json::array();
  for (const TrajectorySample& s : trajectory.samples)
    samples.push_back({s.state.t, s.state.position.x, s.state.position.y, s.state.position.z,
                       s.state.velocity.x, s.state.velocity.y, s.state.velocity.z, s.power});
  const SimSummary sum = summarize(trajectory, config);
  ordered_json summary;
  summary["radiated_energy_J"] = sum.radiated_energy;
  summary["final_speed_m_per_s"] = sum.final_speed;
  summary["final_speed_over_c"] = sum.final_speed_over_c;
  if (sum.speed_drift_rel) summary["speed_drift_rel"] = *sum.speed_drift_rel;
  doc["results"] = {{"columns", {"t_s", "x_m", "y_m", "z_m", "vx_m_per_s", "vy_m_per_s",
                                 "vz_m_per_s", "power_W"}},
                    {"samples", std::move(samples)},
                    {"summary", std::move(summary)}};
  return doc.dump(2) + "\n";
}

std::string render_audit_table(const std::vector<AuditFinding>& findings) {
  return render_report(findings, ReportFormat::table);
}

std::string render_audit_json(const std::vector<AuditFinding>& findings,
                              const RunConfig& config) {
  ordered_json doc = envelope(config);
  // Reuse the structured renderer so the CLI's findings array and the
  // library's schema can never drift apart.
  doc["findings"] = ordered_json::parse(render_report(findings, ReportFormat::structured));
  return doc.dump(2) + "\n";
}

}  // namespace vacrad::cli
