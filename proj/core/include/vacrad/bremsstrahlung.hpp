#pragma once

#include "vacrad/fields.hpp"
#include "vacrad/quantities.hpp"
#include "vacrad/vec3.hpp"

namespace vacrad {

enum class PowerForm { field_form, kinematic_form };

// paper_literal evaluates the force/power expressions exactly as printed in
// the source formulation (stray permittivity factors, mixed-symbol bracket
// terms, as-printed relativistic exponents and all -- the audit module is
// where those get flagged).  textbook evaluates the standard SI counterpart.
enum class PowerVariant { paper_literal, textbook };

// Radiated power plus bookkeeping: which route produced it and the tracked
// dimension of the number (the literal variants are not watts).
struct PowerResult {
  double power = 0.0;
  PowerForm form = PowerForm::field_form;
  PowerVariant variant = PowerVariant::textbook;
  Dimension dim;  // dimension of `power` as evaluated
};

// Radiated power from the external fields and the instantaneous velocity.
//
// paper_literal: (2/3) e^4/(eps0 m^2 c^3) [(E + v x H / c)^2 - (E.H)/c^2]
//                / (1 - v^2/c^2)^2,  with H = B/mu0.
//   The bracket mixes dimensions as printed; the tracked dimension reflects
//   the leading E^2 term (which alone is a power in SI).
// textbook:      e^4 gamma^2 / (6 pi eps0 m^2 c^3)
//                [(E + v x B)^2 - (E.v)^2/c^2]
//   -- the standard relativistic field-form loss rate, nonnegative for
//   every |v| < c.
PowerResult power_field_form(const FieldConfig& config, const Vec3& v,
                             PowerVariant variant,
                             const ConstantsTable& k = constants());

// Radiated power from velocity and acceleration.
//
// paper_literal: (2/3) (e^2/c^3) [a^2 - |v x a|^2/c^2] / (1 - v^2/c^2)^3
//   (Gaussian-shaped: in SI the number carries an extra eps0 dimension).
// textbook:      the same bracket times 1/(4 pi eps0) -- the SI loss rate,
//   reducing to e^2 a^2 / (6 pi eps0 c^3) at v = 0.
PowerResult power_kinematic_form(const Vec3& v, const Vec3& a,
                                 PowerVariant variant,
                                 const ConstantsTable& k = constants());

// Momentum carried off by the radiation per unit time: (P/c^2) v, newtons.
// Requires power >= 0 and |v| < c.
Vec3 momentum_rate(const Vec3& v, double power,
                   const ConstantsTable& k = constants());

}  // namespace vacrad
