#include "cli_app.hpp"

#include <cctype>
#include <fstream>
#include <initializer_list>
#include <map>
#include <string>

namespace vacrad::cli {

namespace {

const std::map<std::string, EvalMode> mode_map{
    {"paper", EvalMode::paper_coefficients},
    {"paper_coefficients", EvalMode::paper_coefficients},
    {"literal", EvalMode::literal_formulas},
    {"literal_formulas", EvalMode::literal_formulas},
};

const std::map<std::string, GhzConvention> ghz_map{
    {"direct", GhzConvention::direct},
    {"angular", GhzConvention::angular},
};

const std::map<std::string, FieldKind> kind_map{
    {"electric", FieldKind::electric},
    {"magnetic", FieldKind::magnetic},
};

const std::map<std::string, DynamicsMode> dynamics_map{
    {"standard", DynamicsMode::standard_lorentz},
    {"standard_lorentz", DynamicsMode::standard_lorentz},
    {"literal", DynamicsMode::paper_literal},
    {"paper_literal", DynamicsMode::paper_literal},
};

const std::map<std::string, bool> spacing_map{
    {"linear", false},
    {"log", true},
};

const std::map<std::string, OutputFormat> numeric_format_map{
    {"csv", OutputFormat::csv},
    {"json", OutputFormat::json},
};

const std::map<std::string, OutputFormat> audit_format_map{
    {"table", OutputFormat::table},
    {"json", OutputFormat::json},
};

CLI::Option* add_config_option(CLI::App* sub, CliState& state) {
  return sub->add_option("--config", state.config_path,
                         "flat `key = value` file mirroring these flags (# comments); "
                         "explicit flags override file values")
      ->check(CLI::ExistingFile);
}

// Feeds `key = value` lines into the subcommand's own options, so file values
// pass the same checks and transforms as flags. Keys already set on the
// command line are skipped, which is what gives flags precedence.
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError(path + ": cannot open config file");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string text = CLI::detail::trim_copy(line);
    const auto hash = text.find('#');
    if (hash != std::string::npos &&
        (hash == 0 || std::isspace(static_cast<unsigned char>(text[hash - 1])) != 0)) {
      text = CLI::detail::trim_copy(text.substr(0, hash));
    }
    if (text.empty()) continue;
    const std::string where = path + " line " + std::to_string(lineno);
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw CLI::ConfigError(where + ": expected `key = value`");
    const std::string key = CLI::detail::trim_copy(text.substr(0, eq));
    std::string value = CLI::detail::trim_copy(text.substr(eq + 1));
    CLI::detail::remove_quotes(value);
    if (key.empty() || value.empty()) throw CLI::ConfigError(where + ": empty key or value");
    if (key == "config") throw CLI::ConfigError(where + ": config files cannot be nested");
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) opt = sub->get_option_no_throw(key);
    if (opt == nullptr) throw CLI::ConfigError(where + ": unknown key `" + key + "`");
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

// Requiredness is checked here, after the config file has been applied,
// rather than with ->required(): CLI11 validates required options before a
// file value could satisfy them.
void require_set(CLI::App* sub, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (sub->count(name) == 0) throw CLI::RequiredError(name);
  }
}

void add_mode_option(CLI::App* sub, CliState& state) {
  sub->add_option("--mode", state.config.mode,
                  "evaluation mode: paper (printed powers of ten) or literal "
                  "(closed forms evaluated from constants)")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
}

void add_display_options(CLI::App* sub, CliState& state) {
  sub->add_option("--ghz-convention", state.config.ghz,
                  "GHz display: direct reads the omega numeral as Hz, angular "
                  "divides by 2 pi")
      ->transform(CLI::CheckedTransformer(ghz_map, CLI::ignore_case));
  sub->add_flag("--intensity-b4-variant", state.config.intensity_b4_variant,
                "evaluate the magnetic intensity as 1e-7 B^4 (the labeled "
                "alternative reading) instead of 1e-7 B as printed");
}

void add_output_options(CLI::App* sub, CliState& state, OutputFormat& format_slot,
                        const std::map<std::string, OutputFormat>& formats) {
  sub->add_option("--output", state.config.output_path,
                  "output file path (default: stdout)");
  sub->add_option("--format", format_slot, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

void attach_cli(CLI::App& app, CliState& state) {
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("vacrad ") + tool_version);

  // compute ----------------------------------------------------------
  CLI::App* compute = app.add_subcommand(
      "compute", "vacuum-radiation frequency, energy, and intensity at one field point");
  auto* opt_e = compute->add_option("--E", state.e_value, "electric field magnitude, V/m")
                    ->check(CLI::NonNegativeNumber);
  auto* opt_d = compute->add_option("--D", state.d_value,
                                    "electric displacement magnitude, C/m^2")
                    ->check(CLI::NonNegativeNumber);
  compute->add_option("--B", state.b_value, "magnetic flux density magnitude, T")
      ->check(CLI::NonNegativeNumber);
  opt_e->excludes(opt_d);
  opt_d->excludes(opt_e);
  add_mode_option(compute, state);
  add_display_options(compute, state);
  add_output_options(compute, state, state.compute_format, numeric_format_map);
  CLI::Option* compute_cfg = add_config_option(compute, state);
  compute->callback([&state, compute, opt_e, opt_d, compute_cfg] {
    if (compute_cfg->count() > 0) apply_config_file(compute, state.config_path);
    state.config.command = Command::compute;
    state.config.format = state.compute_format;
    if (opt_e->count() > 0) state.config.E = state.e_value;
    if (opt_d->count() > 0) state.config.D = state.d_value;
    if (compute->count("--B") > 0) state.config.B = state.b_value;
  });

  // sweep ------------------------------------------------------------
  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate the field-point quantities over an induction grid");
  sweep->add_option("--kind", state.config.sweep_kind,
                    "which induction to sweep: electric (D, C/m^2) or magnetic (B, T)")
      ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));
  sweep->add_option("--min", state.config.grid.min, "grid start");
  sweep->add_option("--max", state.config.grid.max, "grid end");
  sweep->add_option("--points", state.config.grid.points, "grid size (>= 2)");
  sweep->add_option("--spacing", state.config.grid.log_spacing, "grid spacing: linear or log")
      ->transform(CLI::CheckedTransformer(spacing_map, CLI::ignore_case));
  add_mode_option(sweep, state);
  add_display_options(sweep, state);
  add_output_options(sweep, state, state.sweep_format, numeric_format_map);
  CLI::Option* sweep_cfg = add_config_option(sweep, state);
  sweep->callback([&state, sweep, sweep_cfg] {
    if (sweep_cfg->count() > 0) apply_config_file(sweep, state.config_path);
    require_set(sweep, {"--kind", "--min", "--max", "--points"});
    state.config.command = Command::sweep;
    state.config.format = state.sweep_format;
  });

  // simulate ---------------------------------------------------------
  CLI::App* simulate = app.add_subcommand(
      "simulate", "integrate an electron trajectory in uniform fields and its radiated power");
  simulate->add_option("--E", state.sim_e, "electric field vector, V/m, as Ex,Ey,Ez")
      ->delimiter(',')
      ->expected(3);
  simulate->add_option("--B", state.sim_b, "magnetic flux density vector, T, as Bx,By,Bz")
      ->delimiter(',')
      ->expected(3);
  simulate->add_option("--v0", state.config.sim.v0,
                       "initial speed as a fraction of c, in [0, 1)");
  simulate
      ->add_option("--direction", state.sim_direction,
                   "initial velocity direction as x,y,z (any nonzero length)")
      ->delimiter(',')
      ->expected(3);
  simulate->add_option("--dt", state.config.sim.dt, "time step, s")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--steps", state.config.sim.steps, "number of steps (>= 1)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--dynamics", state.config.sim.dynamics,
                       "force laws: standard (relativistic Lorentz) or literal "
                       "(the as-printed Newtonian laws)")
      ->transform(CLI::CheckedTransformer(dynamics_map, CLI::ignore_case));
  add_output_options(simulate, state, state.simulate_format, numeric_format_map);
  CLI::Option* simulate_cfg = add_config_option(simulate, state);
  simulate->callback([&state, simulate, simulate_cfg] {
    if (simulate_cfg->count() > 0) apply_config_file(simulate, state.config_path);
    require_set(simulate, {"--v0", "--dt", "--steps"});
    state.config.command = Command::simulate;
    state.config.format = state.simulate_format;
    state.config.sim.E = {state.sim_e[0], state.sim_e[1], state.sim_e[2]};
    state.config.sim.B = {state.sim_b[0], state.sim_b[1], state.sim_b[2]};
    state.config.sim.direction = {state.sim_direction[0], state.sim_direction[1],
                                  state.sim_direction[2]};
  });

  // audit ------------------------------------------------------------
  CLI::App* audit = app.add_subcommand(
      "audit", "dimension, coefficient, and cross-equation consistency report");
  audit->add_flag("--fail-on-findings", state.config.fail_on_findings,
                  "exit 3 when any fail-severity finding is present");
  add_output_options(audit, state, state.audit_format, audit_format_map);
  CLI::Option* audit_cfg = add_config_option(audit, state);
  audit->callback([&state, audit, audit_cfg] {
    if (audit_cfg->count() > 0) apply_config_file(audit, state.config_path);
    state.config.command = Command::audit;
    state.config.format = state.audit_format;
  });
}

}  // namespace vacrad::cli
