#pragma once

#include "vacrad/quantities.hpp"
#include "vacrad/vec3.hpp"

namespace vacrad {

// Uniform external fields.  Vectors so directions survive into the
// dynamics; the radiation formulas mostly consume magnitudes.
struct FieldConfig {
  Vec3 E;  // electric field, V/m
  Vec3 B;  // magnetic flux density, T
};

// Induction magnitudes derived from a configuration.
struct Induction {
  double D = 0.0;  // electric displacement, C/m^2 (= eps0 |E|)
  double B = 0.0;  // flux density, T (= |B|)
};

// Electron kinematic state.  |velocity| < c is enforced by the dynamics
// entry points, not by this plain aggregate.
struct ElectronState {
  Vec3 position;   // m
  Vec3 velocity;   // m/s
  double t = 0.0;  // s
};

// Angle between velocity and a field line, radians in [0, pi].
// Throws ZeroVector when either vector has zero length.
double beta_angle(const Vec3& v, const Vec3& field_line);

Induction induction(const FieldConfig& config,
                    const ConstantsTable& k = constants());

// |B| / mu0: the magnetizing-field magnitude the as-printed magnetic force
// law and the literal closed forms consume, A/m.
double h_magnitude(const FieldConfig& config,
                   const ConstantsTable& k = constants());

}  // namespace vacrad
