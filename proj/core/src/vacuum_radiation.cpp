#include "vacrad/vacuum_radiation.hpp"

#include <cmath>

namespace vacrad {

namespace {

double cube(double x) { return x * x * x; }
double quart(double x) {
  const double s = x * x;
  return s * s;
}

// e^4 / (eps0 m_e^2 c^4): the constant group the closed forms are built on.
double constant_group(const ConstantsTable& k) {
  const double e = k.e.magnitude();
  const double m = k.m_e.magnitude();
  const double c = k.c.magnitude();
  return (e * e) * (e * e) / (k.eps0.magnitude() * m * m * (c * c) * (c * c));
}

double require_nonnegative(double induction, const char* who) {
  if (induction < 0.0 || !std::isfinite(induction))
    throw DomainError(std::string(who) + ": induction must be finite and >= 0");
  return induction;
}

// Common literal-mode energy body: field_over_const is D/eps0 (electric)
// or B/mu0 (magnetic), which is also the literal frequency-law argument.
double literal_energy(double field_over_const, const ConstantsTable& k) {
  const double X = constant_group(k);
  const double omega = frequency_law_coefficient(k) * field_over_const;
  const double dr_sq = mean_square_displacement(omega, k).delta_r_sq;
  const double inv_hbar_c =
      1.0 / (k.hbar.magnitude() * k.c.magnitude());
  return (2.0 / 3.0) * std::pow(X, 1.5) * cube(field_over_const) *
         std::sqrt(inv_hbar_c) * dr_sq;
}

}  // namespace

double fluct_power_electric(double E, double dv_sq_rate, double beta,
                            const ConstantsTable& k) {
  const double m = k.m_e.magnitude();
  const double c = k.c.magnitude();
  const double e = k.e.magnitude();
  const double e4 = (e * e) * (e * e);
  return std::sin(beta) * (2.0 / 3.0) * e4 /
         (k.eps0.magnitude() * m * m * cube(c)) * (E * E) * dv_sq_rate /
         (c * c);
}

double fluct_power_magnetic(double H, double dv_sq_rate, double beta,
                            const ConstantsTable& k) {
  // Same printed shape with H in place of E.
  return fluct_power_electric(H, dv_sq_rate, beta, k);
}

double fluct_energy_electric(double E, double delta_r_sq, double omega,
                             const ConstantsTable& k) {
  const double c = k.c.magnitude();
  return (2.0 / 3.0) * constant_group(k) * (E * E) * delta_r_sq * (omega / c);
}

double fluct_energy_magnetic(double H, double delta_r_sq, double omega,
                             const ConstantsTable& k) {
  return fluct_energy_electric(H, delta_r_sq, omega, k);
}

double frequency_law_coefficient(const ConstantsTable& k) {
  return std::sqrt((2.0 / 3.0) * (k.c.magnitude() / k.hbar.magnitude()) *
                   constant_group(k));
}

double omega_electric(double field_value, EvalMode mode,
                      const ConstantsTable& k) {
  if (mode == EvalMode::paper_coefficients)
    return printed::omega_per_field * field_value;
  return frequency_law_coefficient(k) * field_value;
}

double omega_magnetic(double field_value, EvalMode mode,
                      const ConstantsTable& k) {
  // The printed law has the same coefficient for both field kinds.
  return omega_electric(field_value, mode, k);
}

double vacuum_energy_electric(double D, EvalMode mode,
                              const ConstantsTable& k) {
  require_nonnegative(D, "vacuum_energy_electric");
  if (D == 0.0) return 0.0;
  if (mode == EvalMode::paper_coefficients)
    return printed::electric_energy * cube(D);
  return literal_energy(D / k.eps0.magnitude(), k);
}

double vacuum_energy_magnetic(double B, EvalMode mode,
                              const ConstantsTable& k) {
  require_nonnegative(B, "vacuum_energy_magnetic");
  if (B == 0.0) return 0.0;
  if (mode == EvalMode::paper_coefficients)
    return printed::magnetic_energy * cube(B);
  return literal_energy(B / k.mu0.magnitude(), k);
}

double vacuum_intensity(FieldKind kind, double induction, EvalMode mode,
                        bool b4_variant, const ConstantsTable& k) {
  require_nonnegative(induction, "vacuum_intensity");
  if (induction == 0.0) return 0.0;
  if (mode == EvalMode::paper_coefficients) {
    if (kind == FieldKind::electric)
      return printed::electric_intensity * quart(induction);
    return b4_variant ? printed::magnetic_intensity * quart(induction)
                      : printed::magnetic_intensity * induction;
  }
  if (kind == FieldKind::electric) {
    return vacuum_energy_electric(induction, mode, k) *
           omega_electric(induction / k.eps0.magnitude(), mode, k);
  }
  return vacuum_energy_magnetic(induction, mode, k) *
         omega_magnetic(induction / k.mu0.magnitude(), mode, k);
}

LambReference lamb_reference() { return LambReference{}; }

namespace {

VacuumRadiationResult field_block(FieldKind kind, double induction,
                                  EvalMode mode, bool b4_variant,
                                  const ConstantsTable& k) {
  VacuumRadiationResult r;
  r.field_kind = kind;
  r.induction = require_nonnegative(induction, "full_report");
  r.mode = mode;
  if (induction == 0.0) return r;

  if (mode == EvalMode::paper_coefficients) {
    // Both blocks read the quoted frequency law against the induction; for
    // the electric case that is the reading under which intensity equals
    // energy x omega identically.
    r.omega = omega_electric(induction, mode, k);
  } else {
    const double field_over_const =
        kind == FieldKind::electric ? induction / k.eps0.magnitude()
                                    : induction / k.mu0.magnitude();
    r.omega = frequency_law_coefficient(k) * field_over_const;
  }
  r.energy = kind == FieldKind::electric
                 ? vacuum_energy_electric(induction, mode, k)
                 : vacuum_energy_magnetic(induction, mode, k);
  r.intensity = vacuum_intensity(kind, induction, mode, b4_variant, k);
  return r;
}

LambComparison compare_with_lamb(const VacuumRadiationResult& r,
                                 const LambReference& lamb) {
  LambComparison c;
  c.energy_ratio = r.energy / lamb.energy;
  c.intensity_ratio = r.intensity / lamb.intensity;
  c.frequency_ratio = r.omega / lamb.frequency;
  return c;
}

}  // namespace

RadiationReport full_report(double D, double B, EvalMode mode, bool b4_variant,
                            const ConstantsTable& k) {
  RadiationReport rep;
  rep.electric = field_block(FieldKind::electric, D, mode, b4_variant, k);
  rep.magnetic = field_block(FieldKind::magnetic, B, mode, b4_variant, k);
  rep.lamb = lamb_reference();
  rep.electric_vs_lamb = compare_with_lamb(rep.electric, rep.lamb);
  rep.magnetic_vs_lamb = compare_with_lamb(rep.magnetic, rep.lamb);
  return rep;
}

RadiationReport full_report(const FieldConfig& config, EvalMode mode,
                            bool b4_variant, const ConstantsTable& k) {
  const Induction ind = induction(config, k);
  return full_report(ind.D, ind.B, mode, b4_variant, k);
}

double ghz_display(double omega, GhzConvention convention) {
  return convention == GhzConvention::direct ? omega / 1e9
                                             : omega / (2.0 * M_PI * 1e9);
}

}  // namespace vacrad
