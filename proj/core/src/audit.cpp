#include "vacrad/audit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <tuple>

#include <nlohmann/json.hpp>

#include "vacrad/bremsstrahlung.hpp"
#include "vacrad/dynamics.hpp"
#include "vacrad/errors.hpp"
#include "vacrad/fields.hpp"
#include "vacrad/vacuum_radiation.hpp"
#include "vacrad/zpf.hpp"

namespace vacrad {

namespace {

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Gaussian field dimension shared by E, H, B and D: M^1/2 L^-1/2 T^-1.
Dimension gauss_field() {
  return Dimension(Rational(-1, 2), Rational(1, 2), Rational(-1), Rational(0));
}

// Name the residual dimension when it is one of the usual suspects.
std::string residual_name(const Dimension& r) {
  struct Entry {
    Dimension dim;
    const char* name;
  };
  const Dimension eps = dims::permittivity();
  const Dimension epsc = eps * dims::velocity();
  const Entry entries[] = {
      {eps, "eps0"},
      {eps.pow(-1), "1/eps0"},
      {epsc, "eps0 c"},
      {epsc.pow(2), "(eps0 c)^2"},
      {epsc.pow(3), "(eps0 c)^3"},
      {epsc.pow(-1), "1/(eps0 c)"},
      {dims::time(), "T"},
      {dims::time().pow(2), "T^2"},
      {dims::frequency(), "1/T"},
  };
  for (const auto& entry : entries)
    if (r == entry.dim) return std::string(" (the dimension of ") + entry.name + ")";
  return "";
}

// Eq-numbered ids sort numerically (suffix letters after the bare number),
// named ids follow alphabetically; ties keep insertion order.
std::tuple<int, long, std::string, int> sort_key(const AuditFinding& f) {
  const std::string& id = f.equation_id;
  long num = -1;
  std::string tail = id;
  if (id.size() > 2 && id.compare(0, 2, "Eq") == 0) {
    size_t i = 2;
    while (i < id.size() && std::isdigit(static_cast<unsigned char>(id[i]))) ++i;
    if (i > 2) {
      num = std::stol(id.substr(2, i - 2));
      tail = id.substr(i);
    }
  }
  return {num >= 0 ? 0 : 1, num, tail, static_cast<int>(f.kind)};
}

void sort_findings(std::vector<AuditFinding>& findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const AuditFinding& a, const AuditFinding& b) {
                     return sort_key(a) < sort_key(b);
                   });
}

std::optional<FindingKind> kind_from_string(const std::string& s) {
  if (s == "dimension_mismatch") return FindingKind::dimension_mismatch;
  if (s == "coefficient_mismatch") return FindingKind::coefficient_mismatch;
  if (s == "cross_check_failure") return FindingKind::cross_check_failure;
  if (s == "orientation_flip") return FindingKind::orientation_flip;
  if (s == "notation_anomaly") return FindingKind::notation_anomaly;
  return std::nullopt;
}

std::optional<Severity> severity_from_string(const std::string& s) {
  if (s == "info") return Severity::info;
  if (s == "warn") return Severity::warn;
  if (s == "fail") return Severity::fail;
  return std::nullopt;
}

}  // namespace

const char* to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::dimension_mismatch: return "dimension_mismatch";
    case FindingKind::coefficient_mismatch: return "coefficient_mismatch";
    case FindingKind::cross_check_failure: return "cross_check_failure";
    case FindingKind::orientation_flip: return "orientation_flip";
    case FindingKind::notation_anomaly: return "notation_anomaly";
  }
  return "unknown";
}

const char* to_string(Severity severity) {
  switch (severity) {
    case Severity::info: return "info";
    case Severity::warn: return "warn";
    case Severity::fail: return "fail";
  }
  return "unknown";
}

const char* to_string(Interpretation interp) {
  switch (interp) {
    case Interpretation::si_literal: return "si_literal";
    case Interpretation::gaussian: return "gaussian";
    case Interpretation::si_textbook: return "si_textbook";
  }
  return "unknown";
}

Dimension symbol_dimension(Sym sym, Interpretation interp) {
  const bool gaussian = interp == Interpretation::gaussian;
  switch (sym) {
    case Sym::charge:
      return gaussian ? Dimension(Rational(3, 2), Rational(1, 2), Rational(-1), Rational(0))
                      : dims::charge();
    case Sym::mass: return dims::mass();
    case Sym::light_speed: return dims::velocity();
    case Sym::planck_hbar: return dims::action();
    case Sym::eps0: return gaussian ? dims::none() : dims::permittivity();
    case Sym::mu0: return gaussian ? dims::none() : dims::permeability();
    case Sym::alpha_const: return dims::none();
    case Sym::e_field: return gaussian ? gauss_field() : dims::electric_field();
    case Sym::h_field: return gaussian ? gauss_field() : dims::magnetic_field_h();
    case Sym::b_flux: return gaussian ? gauss_field() : dims::magnetic_flux_density();
    case Sym::d_induction: return gaussian ? gauss_field() : dims::electric_displacement();
    case Sym::velocity: return dims::velocity();
    case Sym::accel: return dims::acceleration();
    case Sym::omega: return dims::frequency();
    case Sym::duration: return dims::time();
    case Sym::displacement_sq: return dims::area();
    case Sym::vel_sq_rate: return Dimension(2, 0, -3, 0);
    case Sym::energy_sym: return dims::energy();
    case Sym::unity: return dims::none();
  }
  throw Error("symbol_dimension: unhandled symbol");
}

Dimension term_dimension(const DimTerm& term, Interpretation interp) {
  Dimension d;
  for (const auto& sp : term) d = d * symbol_dimension(sp.sym, interp).pow(sp.exp);
  return d;
}

std::vector<EquationRecord> equation_registry(const ConstantsTable& k) {
  using S = Sym;
  const Rational half(1, 2);

  auto cat = [](DimTerm a, const DimTerm& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  // Shared constant groups: e^4/(eps0 m^2 c^3) for the power laws and
  // e^4/(eps0 m^2 c^4) for the energy laws.
  const DimTerm power_pref = {{S::charge, 4}, {S::eps0, -1}, {S::mass, -2}, {S::light_speed, -3}};
  const DimTerm energy_pref = {{S::charge, 4}, {S::eps0, -1}, {S::mass, -2}, {S::light_speed, -4}};
  // alpha (hbar/(m c))^2, the zero-point mean-square displacement scale.
  const DimTerm zpf_scale = {{S::alpha_const, 1}, {S::planck_hbar, 2}, {S::mass, -2}, {S::light_speed, -2}};
  const DimTerm rate_lhs = {{S::energy_sym, 1}, {S::duration, -1}};

  // Reference points for the coefficient claims; both sit inside the
  // literal formulas' validity domain.
  const double d_ref = 3.0e4;   // C/m^2
  const double b_ref = 100.0;   // T
  const double c12 = frequency_law_coefficient(k);
  const double e_energy = vacuum_energy_electric(d_ref, EvalMode::literal_formulas, k) /
                          (d_ref * d_ref * d_ref);
  const double e_intensity = vacuum_intensity(FieldKind::electric, d_ref,
                                              EvalMode::literal_formulas, false, k) /
                             (d_ref * d_ref * d_ref * d_ref);
  const double m_energy = vacuum_energy_magnetic(b_ref, EvalMode::literal_formulas, k) /
                          (b_ref * b_ref * b_ref);
  const double m_intensity = vacuum_intensity(FieldKind::magnetic, b_ref,
                                              EvalMode::literal_formulas, false, k) /
                             b_ref;

  std::vector<EquationRecord> reg;

  reg.push_back({"Eq1",
                 "electric equation of motion as printed: m dV/dt = e E / eps0",
                 {{S::mass, 1}, {S::accel, 1}},
                 {{{S::charge, 1}, {S::e_field, 1}, {S::eps0, -1}}},
                 {{{S::charge, 1}, {S::e_field, 1}}},
                 {}});

  reg.push_back({"Eq2",
                 "magnetic equation of motion as printed: m dV/dt = (e/c) H x V",
                 {{S::mass, 1}, {S::accel, 1}},
                 {{{S::charge, 1}, {S::light_speed, -1}, {S::h_field, 1}, {S::velocity, 1}}},
                 {{{S::charge, 1}, {S::velocity, 1}, {S::b_flux, 1}}},
                 {}});

  reg.push_back(
      {"Eq3",
       "field-form radiated power with the bracket (E + V x H/c)^2 - (E.H)/c^2",
       rate_lhs,
       {cat(power_pref, {{S::e_field, 2}}),
        cat(power_pref, {{S::velocity, 2}, {S::h_field, 2}, {S::light_speed, -2}}),
        cat(power_pref, {{S::e_field, 1}, {S::velocity, 1}, {S::h_field, 1}, {S::light_speed, -1}}),
        cat(power_pref, {{S::e_field, 1}, {S::h_field, 1}, {S::light_speed, -2}})},
       {cat(power_pref, {{S::e_field, 2}}),
        cat(power_pref, {{S::velocity, 2}, {S::b_flux, 2}}),
        cat(power_pref, {{S::e_field, 1}, {S::velocity, 1}, {S::b_flux, 1}}),
        cat(power_pref, {{S::e_field, 2}, {S::velocity, 2}, {S::light_speed, -2}})},
       {}});

  reg.push_back(
      {"Eq3p",
       "kinematic radiated power: (2/3)(e^2/c^3)[a^2 - (V x a)^2/c^2](1 - beta^2)^-3",
       rate_lhs,
       {{{S::charge, 2}, {S::light_speed, -3}, {S::accel, 2}},
        {{S::charge, 2}, {S::light_speed, -5}, {S::velocity, 2}, {S::accel, 2}}},
       {{{S::charge, 2}, {S::eps0, -1}, {S::light_speed, -3}, {S::accel, 2}},
        {{S::charge, 2}, {S::eps0, -1}, {S::light_speed, -5}, {S::velocity, 2}, {S::accel, 2}}},
       {}});

  reg.push_back({"Eq4",
                 "zero-point mean-square displacement: (2/pi) alpha (hbar/(m c))^2 log factor",
                 {{S::displacement_sq, 1}},
                 {zpf_scale},
                 {},
                 {}});

  reg.push_back({"AlphaDef",
                 "fine-structure constant quoted as e^2/(hbar c)",
                 {{S::unity, 1}},
                 {{{S::charge, 2}, {S::planck_hbar, -1}, {S::light_speed, -1}}},
                 {{{S::charge, 2}, {S::eps0, -1}, {S::planck_hbar, -1}, {S::light_speed, -1}}},
                 {}});

  reg.push_back({"NuE",
                 "frequency cutoff quoted as hbar/(m c^2) but used as m c^2/hbar",
                 {{S::omega, 1}},
                 {{{S::planck_hbar, 1}, {S::mass, -1}, {S::light_speed, -2}}},
                 {{{S::mass, 1}, {S::light_speed, 2}, {S::planck_hbar, -1}}},
                 {}});

  reg.push_back({"Eq5",
                 "electric loss-gain balance; both sides are energy rates, their own "
                 "structure is audited under Eq3 and Eq6",
                 rate_lhs,
                 {rate_lhs},
                 {},
                 {}});

  reg.push_back({"Eq6",
                 "electric fluctuation gain rate: (2/3) e^4 E^2/(eps0 m^2 c^5) d<dv^2>/dt",
                 rate_lhs,
                 {cat(power_pref, {{S::e_field, 2}, {S::vel_sq_rate, 1}, {S::light_speed, -2}})},
                 {},
                 {}});

  reg.push_back({"Eq7",
                 "magnetic loss-gain balance; both sides are energy rates, their own "
                 "structure is audited under Eq3 and Eq8",
                 rate_lhs,
                 {rate_lhs},
                 {},
                 {}});

  reg.push_back({"Eq8",
                 "magnetic fluctuation gain rate with H^2 in the field slot",
                 rate_lhs,
                 {cat(power_pref, {{S::h_field, 2}, {S::vel_sq_rate, 1}, {S::light_speed, -2}})},
                 {},
                 {}});

  reg.push_back({"Eq9",
                 "electric fluctuation energy per event: (2/3) e^4 E^2/(eps0 m^2 c^4) "
                 "<dr^2> omega/c",
                 {{S::energy_sym, 1}},
                 {cat(energy_pref,
                      {{S::e_field, 2}, {S::displacement_sq, 1}, {S::omega, 1}, {S::light_speed, -1}})},
                 {},
                 {}});

  reg.push_back({"Eq10",
                 "magnetic fluctuation energy per event with H^2 in the field slot",
                 {{S::energy_sym, 1}},
                 {cat(energy_pref,
                      {{S::h_field, 2}, {S::displacement_sq, 1}, {S::omega, 1}, {S::light_speed, -1}})},
                 {cat(energy_pref,
                      {{S::b_flux, 2}, {S::light_speed, 2}, {S::displacement_sq, 1}, {S::omega, 1},
                       {S::light_speed, -1}})},
                 {}});

  reg.push_back({"Eq11",
                 "electric frequency condition: omega = (2/3)(c/(omega hbar)) e^4 "
                 "E^2/(eps0 m^2 c^4)",
                 {{S::omega, 1}},
                 {cat(energy_pref,
                      {{S::e_field, 2}, {S::light_speed, 1}, {S::omega, -1}, {S::planck_hbar, -1}})},
                 {},
                 {}});

  reg.push_back({"Eq12",
                 "electric frequency law: omega = sqrt((2/3)(c/hbar) e^4/(eps0 m^2 c^4)) E, "
                 "quoted as omega = 1e12 E",
                 {{S::omega, 1}},
                 {{{S::charge, 2},
                   {S::eps0, -half},
                   {S::mass, -1},
                   {S::light_speed, Rational(-3, 2)},
                   {S::planck_hbar, -half},
                   {S::e_field, 1}}},
                 {},
                 {{"frequency per unit electric field", 1.0e12, c12,
                   "closed-form constant in SI, s^-1 per V/m"}}});

  reg.push_back({"Eq13",
                 "magnetic frequency condition with H^2 in the field slot",
                 {{S::omega, 1}},
                 {cat(energy_pref,
                      {{S::h_field, 2}, {S::light_speed, 1}, {S::omega, -1}, {S::planck_hbar, -1}})},
                 {cat(energy_pref,
                      {{S::b_flux, 2}, {S::light_speed, 2}, {S::light_speed, 1}, {S::omega, -1},
                       {S::planck_hbar, -1}})},
                 {}});

  reg.push_back({"Eq14",
                 "magnetic frequency law with H in the field slot, quoted as omega = 1e12 H",
                 {{S::omega, 1}},
                 {{{S::charge, 2},
                   {S::eps0, -half},
                   {S::mass, -1},
                   {S::light_speed, Rational(-3, 2)},
                   {S::planck_hbar, -half},
                   {S::h_field, 1}}},
                 {{{S::charge, 2},
                   {S::eps0, -half},
                   {S::mass, -1},
                   {S::light_speed, Rational(-3, 2)},
                   {S::planck_hbar, -half},
                   {S::b_flux, 1},
                   {S::light_speed, 1}}},
                 {{"frequency per unit magnetizing field", 1.0e12, c12,
                   "the closed-form constant does not depend on the field kind"}}});

  reg.push_back({"Eq15",
                 "electric fluctuation energy with the zero-point displacement inserted",
                 {{S::energy_sym, 1}},
                 {cat(cat(energy_pref, {{S::e_field, 2}}),
                      cat(zpf_scale, {{S::omega, 1}, {S::light_speed, -1}}))},
                 {},
                 {}});

  reg.push_back({"Eq16",
                 "magnetic fluctuation energy with the zero-point displacement inserted",
                 {{S::energy_sym, 1}},
                 {cat(cat(energy_pref, {{S::h_field, 2}}),
                      cat(zpf_scale, {{S::omega, 1}, {S::light_speed, -1}}))},
                 {cat(cat(energy_pref, {{S::b_flux, 2}, {S::light_speed, 2}}),
                      cat(zpf_scale, {{S::omega, 1}, {S::light_speed, -1}}))},
                 {}});

  // The closed-form energies: (2/3) X^{3/2} with X = e^4/(eps0 m^2 c^4),
  // times (D/eps0)^3 resp. (B/mu0)^3, times (1/(hbar c))^{1/2}, times the
  // zero-point displacement.
  const DimTerm closed_const = {{S::charge, 6},
                                {S::eps0, Rational(-3, 2)},
                                {S::mass, -3},
                                {S::light_speed, -6},
                                {S::planck_hbar, -half},
                                {S::light_speed, -half}};

  reg.push_back({"Eq17",
                 "closed-form electric energy per event in terms of D = eps0 E",
                 {{S::energy_sym, 1}},
                 {cat(cat(closed_const, {{S::d_induction, 3}, {S::eps0, -3}}), zpf_scale)},
                 {},
                 {}});

  reg.push_back({"Eq18",
                 "closed-form magnetic energy per event in terms of B = mu0 H",
                 {{S::energy_sym, 1}},
                 {cat(cat(closed_const, {{S::b_flux, 3}, {S::mu0, -3}}), zpf_scale)},
                 {cat(cat(closed_const, {{S::b_flux, 3}, {S::light_speed, 3}}), zpf_scale)},
                 {}});

  reg.push_back({"Eq19",
                 "quoted electric coefficients: energy 1e-34 D^3, intensity 1e-22 D^4",
                 {},
                 {},
                 {},
                 {{"energy per cubed induction", printed::electric_energy, e_energy,
                   "literal closed form at D = 3e4 C/m^2"},
                  {"intensity per fourth power of induction", printed::electric_intensity,
                   e_intensity, "literal energy x frequency at D = 3e4 C/m^2"}}});

  reg.push_back({"Eq20",
                 "quoted magnetic coefficients: energy 1e-25 B^3, intensity 1e-7 B",
                 {},
                 {},
                 {},
                 {{"energy per cubed induction", printed::magnetic_energy, m_energy,
                   "literal closed form at B = 100 T"},
                  {"intensity per first power of induction as printed",
                   printed::magnetic_intensity, m_intensity,
                   "literal energy x frequency at B = 100 T"}}});

  return reg;
}

std::vector<AuditFinding> audit_dimensions(Interpretation interp,
                                           const std::vector<EquationRecord>& registry) {
  std::vector<AuditFinding> out;
  for (const auto& rec : registry) {
    if (rec.rhs_terms.empty()) continue;  // pure coefficient claims
    const bool corrected = interp == Interpretation::si_textbook && !rec.textbook_rhs.empty();
    const auto& terms = corrected ? rec.textbook_rhs : rec.rhs_terms;

    const Dimension lhs = term_dimension(rec.lhs, interp);
    std::vector<Dimension> rhs;
    rhs.reserve(terms.size());
    for (const auto& t : terms) rhs.push_back(term_dimension(t, interp));

    bool consistent = true;
    bool uniform = true;
    for (const auto& d : rhs) {
      if (d != lhs) consistent = false;
      if (d != rhs.front()) uniform = false;
    }

    AuditFinding f;
    f.equation_id = rec.id;
    f.kind = FindingKind::dimension_mismatch;
    std::string detail = std::string(to_string(interp));
    detail += corrected ? " (registered corrected form): " : ": ";
    if (consistent) {
      f.severity = Severity::info;
      detail += "consistent, both sides [" + lhs.str() + "]";
    } else {
      f.severity = Severity::warn;
      detail += "lhs [" + lhs.str() + "]";
      if (uniform) {
        const Dimension residual = rhs.front() / lhs;
        detail += ", rhs [" + rhs.front().str() + "], residual rhs/lhs [" + residual.str() + "]" +
                  residual_name(residual);
      } else {
        detail += ", rhs terms";
        std::string offenders;
        for (size_t i = 0; i < rhs.size(); ++i) {
          detail += " " + std::to_string(i + 1) + ":[" + rhs[i].str() + "]";
          if (rhs[i] != lhs) {
            if (!offenders.empty()) offenders += ",";
            offenders += std::to_string(i + 1);
          }
        }
        detail += "; term(s) " + offenders + " off";
      }
    }
    f.detail = detail;
    out.push_back(f);
  }
  return out;
}

std::vector<AuditFinding> audit_dimensions(Interpretation interp) {
  return audit_dimensions(interp, equation_registry());
}

std::vector<AuditFinding> audit_coefficients(const std::vector<EquationRecord>& registry) {
  std::vector<AuditFinding> out;
  for (const auto& rec : registry) {
    for (const auto& claim : rec.coefficients) {
      const double ratio = claim.printed / claim.computed;
      AuditFinding f;
      f.equation_id = rec.id;
      f.kind = FindingKind::coefficient_mismatch;
      f.magnitude = ratio;
      f.severity = (ratio > 0.1 && ratio < 10.0) ? Severity::info : Severity::fail;
      f.detail = claim.label + ": printed " + fmt_g(claim.printed) + " vs computed " +
                 fmt_g(claim.computed) + " (" + claim.note +
                 "), printed/computed = " + fmt_g(ratio);
      out.push_back(f);
    }
  }
  return out;
}

std::vector<AuditFinding> audit_coefficients() {
  return audit_coefficients(equation_registry());
}

std::vector<AuditFinding> audit_crosschecks(const ConstantsTable& k) {
  std::vector<AuditFinding> out;
  const double eps0 = k.eps0.magnitude();

  // Electric intensity vs energy x frequency under both readings of the
  // quoted frequency law.
  {
    const double product = printed::electric_energy * printed::omega_per_field;
    AuditFinding f;
    f.equation_id = "Eq19";
    f.kind = FindingKind::cross_check_failure;
    f.magnitude = product / printed::electric_intensity;
    f.severity = std::fabs(*f.magnitude - 1.0) < 1e-12 ? Severity::info : Severity::fail;
    f.detail = "intensity = energy x frequency holds when the frequency law is read per "
               "unit induction: 1e-34 x 1e12 = 1e-22 per D^4";
    out.push_back(f);
  }
  {
    const double product = printed::electric_energy * printed::omega_per_field / eps0;
    AuditFinding f;
    f.equation_id = "Eq19";
    f.kind = FindingKind::cross_check_failure;
    f.magnitude = product / printed::electric_intensity;
    f.severity = Severity::fail;
    f.detail = "read per unit electric field (omega = 1e12 E, E = D/eps0), energy x "
               "frequency overshoots the quoted intensity coefficient by 1/eps0";
    out.push_back(f);
  }

  // Magnetic intensity: printed law, energy x frequency, and the stated
  // value at B = 100 T disagree.
  {
    const double b = 100.0;
    const double law = printed::magnetic_intensity * b;
    const double product = printed::magnetic_energy * b * b * b * printed::omega_per_field * b;
    const double stated = 10.0;  // quoted order of magnitude at this induction
    AuditFinding f;
    f.equation_id = "Eq20";
    f.kind = FindingKind::cross_check_failure;
    f.magnitude = stated / law;
    f.severity = Severity::fail;
    f.detail = "at B = 100 T the printed law 1e-7 B gives " + fmt_g(law) +
               " J/s and energy x frequency (1e-13 B^4) gives " + fmt_g(product) +
               " J/s, but the stated intensity there is ~10 J/s; reading the law as "
               "1e-7 B^4 reproduces the stated value, hence the provided B^4 variant";
    out.push_back(f);
  }

  // Push the printed force laws through the kinematic power law and compare
  // with the corresponding field-form term.
  {
    const Vec3 E{1.0e5, 0.0, 0.0};
    const QuantityVec a = accel_electric_literal(E, k);
    const PowerResult kin =
        power_kinematic_form({0.0, 0.0, 0.0}, a.value, PowerVariant::paper_literal, k);
    const PowerResult field =
        power_field_form(FieldConfig{E, {0.0, 0.0, 0.0}}, {0.0, 0.0, 0.0},
                         PowerVariant::paper_literal, k);
    AuditFinding f;
    f.equation_id = "Eq3p";
    f.kind = FindingKind::cross_check_failure;
    f.magnitude = field.power / kin.power;
    f.severity = Severity::fail;
    f.detail = "electric route: acceleration e E/(eps0 m) through the kinematic form vs "
               "the field form's E^2 term differ by eps0 = " + fmt_g(*f.magnitude) +
               "; the two printed power forms cannot both be right";
    out.push_back(f);
  }
  {
    const Vec3 v{1.0e6, 0.0, 0.0};
    const FieldConfig cfg{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
    const Vec3 H = cfg.B / k.mu0.magnitude();
    const QuantityVec a = accel_magnetic_literal(v, H, k);
    const PowerResult kin = power_kinematic_form(v, a.value, PowerVariant::paper_literal, k);
    const PowerResult field = power_field_form(cfg, v, PowerVariant::paper_literal, k);
    AuditFinding f;
    f.equation_id = "Eq3p";
    f.kind = FindingKind::cross_check_failure;
    f.magnitude = field.power / kin.power;
    f.severity = Severity::fail;
    f.detail = "magnetic route: acceleration (e/(m c)) H x V through the kinematic form vs "
               "the field form's (V x H/c)^2 term differ by 1/eps0 = " + fmt_g(*f.magnitude);
    out.push_back(f);
  }

  // Exponent bookkeeping between the two power forms.
  {
    AuditFinding f;
    f.equation_id = "Eq3";
    f.kind = FindingKind::notation_anomaly;
    f.severity = Severity::warn;
    f.detail = "the field form divides by (1 - beta^2)^2 where the standard field form "
               "carries a single 1/(1 - beta^2); the kinematic form's (1 - beta^2)^-3 is "
               "the standard exponent";
    out.push_back(f);
  }

  // Bracket structure of the field form.
  {
    AuditFinding f;
    f.equation_id = "Eq3";
    f.kind = FindingKind::notation_anomaly;
    f.severity = Severity::warn;
    f.detail = "the bracket subtracts (E.H)/c^2, linear in each field where every other "
               "term is quadratic; the standard bracket subtracts (E.V)^2/c^2";
    out.push_back(f);
  }

  // Ordering of the magnetic force cross product.
  {
    AuditFinding f;
    f.equation_id = "Eq2";
    f.kind = FindingKind::notation_anomaly;
    f.severity = Severity::warn;
    f.detail = "the magnetic force is printed as H x V, opposite in sign to the "
               "conventional V x H ordering; the literal dynamics mode follows the "
               "printed ordering";
    out.push_back(f);
  }

  // Log orientation of the displacement law.
  {
    AuditFinding f;
    f.equation_id = "Eq4";
    f.kind = FindingKind::orientation_flip;
    f.severity = Severity::warn;
    f.detail = "printed with ln(omega/nu_e), negative on the whole validity range "
               "0 < omega < nu_e; the downstream energy formulas need ln(nu_e/omega), "
               "which this library adopts";
    out.push_back(f);
  }

  // Cutoff misprint.
  {
    const double nu = k.nu_e.magnitude();
    const double printed_reading =
        k.hbar.magnitude() / (k.m_e.magnitude() * k.c.magnitude() * k.c.magnitude());
    AuditFinding f;
    f.equation_id = "NuE";
    f.kind = FindingKind::notation_anomaly;
    f.severity = Severity::warn;
    f.magnitude = nu;
    f.detail = "quoted as hbar/(m c^2) ~ " + fmt_g(nu) + " s^-1, but hbar/(m c^2) = " +
               fmt_g(printed_reading) + " s is a time; the quoted number is m c^2/hbar";
    out.push_back(f);
  }

  // Closed form vs the energy law chained through the frequency law.
  {
    const double d_ref = 3.0e4;
    const double omega = omega_electric(d_ref / eps0, EvalMode::literal_formulas, k);
    const double dr_sq = mean_square_displacement(omega, k).delta_r_sq;
    const double chained = fluct_energy_electric(d_ref / eps0, dr_sq, omega, k);
    const double closed = vacuum_energy_electric(d_ref, EvalMode::literal_formulas, k);
    AuditFinding f;
    f.equation_id = "Eq17";
    f.kind = FindingKind::cross_check_failure;
    f.magnitude = closed / chained;
    f.severity = Severity::info;
    f.detail = "closed form vs the energy law chained through the frequency law: ratio " +
               fmt_g(*f.magnitude) + " = sqrt(3/2); the closed form keeps the flat (2/3) "
               "prefactor outside the 3/2 power, exact substitution would raise it too";
    out.push_back(f);
  }

  return out;
}

std::vector<AuditFinding> run_full_audit(const ConstantsTable& k) {
  const auto reg = equation_registry(k);
  std::vector<AuditFinding> out;
  for (const auto interp :
       {Interpretation::si_literal, Interpretation::gaussian, Interpretation::si_textbook}) {
    auto f = audit_dimensions(interp, reg);
    out.insert(out.end(), f.begin(), f.end());
  }
  auto coeff = audit_coefficients(reg);
  out.insert(out.end(), coeff.begin(), coeff.end());
  auto cross = audit_crosschecks(k);
  out.insert(out.end(), cross.begin(), cross.end());
  sort_findings(out);
  return out;
}

std::string render_report(const std::vector<AuditFinding>& findings, ReportFormat format) {
  if (format == ReportFormat::structured) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : findings) {
      nlohmann::ordered_json row;
      row["equation_id"] = f.equation_id;
      row["kind"] = to_string(f.kind);
      row["severity"] = to_string(f.severity);
      row["detail"] = f.detail;
      if (f.magnitude) row["magnitude"] = *f.magnitude;
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }

  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-9s  %-20s  %-8s  %-13s  %s\n", "equation", "kind",
                "severity", "magnitude", "detail");
  out += line;
  std::snprintf(line, sizeof line, "%-9s  %-20s  %-8s  %-13s  %s\n", "---------",
                "--------------------", "--------", "-------------", "------");
  out += line;
  int n_fail = 0, n_warn = 0, n_info = 0;
  for (const auto& f : findings) {
    char mag[32];
    if (f.magnitude)
      std::snprintf(mag, sizeof mag, "%.6e", *f.magnitude);
    else
      std::snprintf(mag, sizeof mag, "-");
    std::snprintf(line, sizeof line, "%-9s  %-20s  %-8s  %-13s  ", f.equation_id.c_str(),
                  to_string(f.kind), to_string(f.severity), mag);
    out += line;
    out += f.detail;
    out += '\n';
    switch (f.severity) {
      case Severity::fail: ++n_fail; break;
      case Severity::warn: ++n_warn; break;
      case Severity::info: ++n_info; break;
    }
  }
  std::snprintf(line, sizeof line, "total %zu (fail %d, warn %d, info %d)\n", findings.size(),
                n_fail, n_warn, n_info);
  out += line;
  return out;
}

std::vector<AuditFinding> parse_findings(const std::string& structured) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(structured);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("parse_findings: ") + ex.what());
  }
  if (!doc.is_array()) throw Error("parse_findings: top-level value must be an array");

  std::vector<AuditFinding> out;
  for (const auto& row : doc) {
    if (!row.is_object()) throw Error("parse_findings: row is not an object");
    AuditFinding f;
    try {
      f.equation_id = row.at("equation_id").get<std::string>();
      const auto kind = kind_from_string(row.at("kind").get<std::string>());
      const auto severity = severity_from_string(row.at("severity").get<std::string>());
      if (!kind) throw Error("parse_findings: unknown kind");
      if (!severity) throw Error("parse_findings: unknown severity");
      f.kind = *kind;
      f.severity = *severity;
      f.detail = row.at("detail").get<std::string>();
      if (row.contains("magnitude")) f.magnitude = row.at("magnitude").get<double>();
    } catch (const nlohmann::json::exception& ex) {
      throw Error(std::string("parse_findings: ") + ex.what());
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace vacrad
