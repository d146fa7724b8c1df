#pragma once

#include <optional>
#include <string>

#include "vacrad/dynamics.hpp"
#include "vacrad/vacuum_radiation.hpp"
#include "vacrad/vec3.hpp"

namespace vacrad::cli {

inline constexpr const char* tool_version = "1.0.0";

enum class Command { compute, sweep, simulate, audit };

// table is the audit subcommand's text rendering; csv applies to the
// numeric subcommands.  json carries the {tool_version, config_echo,
// results|findings} envelope everywhere.
enum class OutputFormat { csv, json, table };

struct SweepGrid {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log_spacing = false;
};

struct SimulateBlock {
  double v0 = 0.0;               // initial speed as a fraction of c
  Vec3 direction{1.0, 0.0, 0.0}; // initial velocity direction, any nonzero length
  Vec3 E{0.0, 0.0, 0.0};         // V/m
  Vec3 B{0.0, 0.0, 0.0};         // T
  double dt = 0.0;               // s
  long steps = 0;
  DynamicsMode dynamics = DynamicsMode::standard_lorentz;
};

// Everything a run needs.  Identical configs give bitwise-identical
// output; nothing here or downstream draws randomness.
struct RunConfig {
  Command command = Command::compute;

  // Scalar field inputs for compute: at most one of E and D supplies the
  // electric side (explicit unit tags, no inference), B the magnetic side.
  std::optional<double> E;  // V/m
  std::optional<double> D;  // C/m^2
  std::optional<double> B;  // T

  EvalMode mode = EvalMode::paper_coefficients;

  FieldKind sweep_kind = FieldKind::electric;
  SweepGrid grid;

  SimulateBlock sim;

  std::string output_path;  // empty writes to stdout
  OutputFormat format = OutputFormat::csv;

  GhzConvention ghz = GhzConvention::direct;
  bool intensity_b4_variant = false;
  bool fail_on_findings = false;
};

// Empty string when the config is valid; otherwise one message naming the
// offending field.  Checks cross-field rules the flag parser cannot.
std::string validate(const RunConfig& config);

const char* to_string(Command command);
const char* to_string(OutputFormat format);
const char* mode_name(EvalMode mode);
const char* kind_name(FieldKind kind);
const char* dynamics_name(DynamicsMode mode);
const char* ghz_name(GhzConvention convention);

}  // namespace vacrad::cli
