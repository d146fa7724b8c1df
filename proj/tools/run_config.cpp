#include "run_config.hpp"

#include <cmath>

namespace vacrad::cli {

namespace {

std::string bad_number(const char* field, double value) {
  return std::string(field) + " must be finite and nonnegative (got " +
         std::to_string(value) + ")";
}

}  // namespace

std::string validate(const RunConfig& config) {
  if (config.command == Command::audit) {
    if (config.format == OutputFormat::csv)
      return "format: audit renders table or json, not csv";
    return "";
  }
  if (config.format == OutputFormat::table)
    return "format: table is the audit renderer; numeric commands use csv or json";

  if (config.command == Command::compute) {
    if (config.E && config.D)
      return "E and D are both set; give the electric side exactly one of them";
    if (config.E && !(std::isfinite(*config.E) && *config.E >= 0.0))
      return bad_number("E", *config.E);
    if (config.D && !(std::isfinite(*config.D) && *config.D >= 0.0))
      return bad_number("D", *config.D);
    if (config.B && !(std::isfinite(*config.B) && *config.B >= 0.0))
      return bad_number("B", *config.B);
    return "";
  }

  if (config.command == Command::sweep) {
    const SweepGrid& g = config.grid;
    if (g.points < 2) return "points must be at least 2 (got " + std::to_string(g.points) + ")";
    if (!(std::isfinite(g.min) && std::isfinite(g.max)))
      return "min/max must be finite";
    if (!(g.min < g.max)) return "min must be less than max";
    if (g.min < 0.0) return bad_number("min", g.min);
    if (g.log_spacing && g.min <= 0.0)
      return "min must be positive for log spacing (got " + std::to_string(g.min) + ")";
    return "";
  }

  // simulate
  const SimulateBlock& s = config.sim;
  if (!(std::isfinite(s.v0) && s.v0 >= 0.0 && s.v0 < 1.0))
    return "v0 must lie in [0, 1) as a fraction of c (got " + std::to_string(s.v0) + ")";
  if (norm_sq(s.direction) == 0.0) return "direction must be a nonzero vector";
  if (!(std::isfinite(s.dt) && s.dt > 0.0))
    return "dt must be positive (got " + std::to_string(s.dt) + ")";
  if (s.steps < 1) return "steps must be at least 1 (got " + std::to_string(s.steps) + ")";
  for (const double comp : {s.direction.x, s.direction.y, s.direction.z,
                            s.E.x, s.E.y, s.E.z, s.B.x, s.B.y, s.B.z})
    if (!std::isfinite(comp)) return "field and direction components must be finite";
  return "";
}

const char* to_string(Command command) {
  switch (command) {
    case Command::compute: return "compute";
    case Command::sweep: return "sweep";
    case Command::simulate: return "simulate";
    case Command::audit: return "audit";
  }
  return "unknown";
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::table: return "table";
  }
  return "unknown";
}

const char* mode_name(EvalMode mode) {
  return mode == EvalMode::paper_coefficients ? "paper_coefficients" : "literal_formulas";
}

const char* kind_name(FieldKind kind) {
  return kind == FieldKind::electric ? "electric" : "magnetic";
}

const char* dynamics_name(DynamicsMode mode) {
  return mode == DynamicsMode::paper_literal ? "paper_literal" : "standard_lorentz";
}

const char* ghz_name(GhzConvention convention) {
  return convention == GhzConvention::direct ? "direct" : "angular";
}

}  // namespace vacrad::cli
