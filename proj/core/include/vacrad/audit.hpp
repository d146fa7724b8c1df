#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vacrad/quantities.hpp"

namespace vacrad {

// Unit systems an equation can be read in.  si_literal takes every symbol
// at SI face value.  gaussian gives charge and the field symbols their
// Gaussian dimensions (eps0/mu0 dimensionless) -- several of the printed
// forms only cohere there.  si_textbook replaces a printed form with its
// standard SI counterpart where one is registered, showing what the
// correction would be.
enum class Interpretation { si_literal, gaussian, si_textbook };

// kind is the category of check; severity carries the outcome.  A
// consistent dimension check is kind=dimension_mismatch, severity=info.
enum class FindingKind {
  dimension_mismatch,
  coefficient_mismatch,
  cross_check_failure,
  orientation_flip,
  notation_anomaly,
};

enum class Severity { info, warn, fail };

struct AuditFinding {
  std::string equation_id;
  FindingKind kind = FindingKind::dimension_mismatch;
  Severity severity = Severity::info;
  std::string detail;
  std::optional<double> magnitude;  // ratio or delta where the check has one

  bool operator==(const AuditFinding&) const = default;
};

// Symbols the registered equations are built from.
enum class Sym {
  charge,       // e
  mass,         // m_e
  light_speed,  // c
  planck_hbar,  // hbar
  eps0,
  mu0,
  alpha_const,
  e_field,      // E, V/m
  h_field,      // H, A/m
  b_flux,       // B, T
  d_induction,  // D, C/m^2
  velocity,
  accel,
  omega,
  duration,
  displacement_sq,  // mean-square displacement, m^2
  vel_sq_rate,      // d<v^2>/dt, m^2/s^3
  energy_sym,
  unity,
};

struct SymPower {
  Sym sym;
  Rational exp;
};

// One additive term as a product of symbol powers; numeric prefactors are
// the coefficient checks' business, not the dimension algebra's.
using DimTerm = std::vector<SymPower>;

// A printed numeric coefficient claim paired with what the literal SI
// evaluation of the owning closed form gives at a stated reference point.
struct CoefficientClaim {
  std::string label;
  double printed = 0.0;
  double computed = 0.0;
  std::string note;
};

struct EquationRecord {
  std::string id;           // stable: "Eq1" ... "Eq20", "Eq3p", "AlphaDef", "NuE"
  std::string description;  // what the equation does, not where it's from
  DimTerm lhs;
  std::vector<DimTerm> rhs_terms;     // additive terms as printed
  std::vector<DimTerm> textbook_rhs;  // empty = no registered correction
  std::vector<CoefficientClaim> coefficients;
};

Dimension symbol_dimension(Sym sym, Interpretation interp);
Dimension term_dimension(const DimTerm& term, Interpretation interp);

// The registered equation set of the audited formulation, coefficient
// claims evaluated against the given constants.
std::vector<EquationRecord> equation_registry(const ConstantsTable& k = constants());

// One finding per registered equation with dimension structure: warn when
// any RHS term disagrees with the LHS (or terms disagree among themselves)
// under the interpretation, info pass record otherwise.
std::vector<AuditFinding> audit_dimensions(Interpretation interp,
                                           const std::vector<EquationRecord>& registry);
std::vector<AuditFinding> audit_dimensions(Interpretation interp);

// Printed power-of-ten coefficients vs their literal evaluations; gaps
// beyond a factor 10 are severity fail (exit policy is the CLI's call).
std::vector<AuditFinding> audit_coefficients(const std::vector<EquationRecord>& registry);
std::vector<AuditFinding> audit_coefficients();

// Fixed cross-equation checks: intensity-vs-energy x omega under both
// readings of the frequency law, the magnetic intensity-vs-text conflict,
// force-law-into-power substitution residuals, the log-orientation flip,
// and the notation anomalies.
std::vector<AuditFinding> audit_crosschecks(const ConstantsTable& k = constants());

// Dimensions under all three interpretations + coefficients + crosschecks,
// deterministically ordered (by equation, then kind, then detail).
std::vector<AuditFinding> run_full_audit(const ConstantsTable& k = constants());

enum class ReportFormat { table, structured };

// table: fixed-width human-readable text.  structured: a JSON array with
// fields {equation_id, kind, severity, detail, magnitude?} that
// parse_findings() inverts exactly.
std::string render_report(const std::vector<AuditFinding>& findings,
                          ReportFormat format);
std::vector<AuditFinding> parse_findings(const std::string& structured);

const char* to_string(FindingKind kind);
const char* to_string(Severity severity);
const char* to_string(Interpretation interp);

}  // namespace vacrad
