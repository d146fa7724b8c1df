#pragma once

#include <vector>

#include "vacrad/bremsstrahlung.hpp"
#include "vacrad/fields.hpp"
#include "vacrad/quantities.hpp"
#include "vacrad/vec3.hpp"

namespace vacrad {

// paper_literal integrates the force laws exactly as printed (stray 1/eps0
// on the electric term, H x v ordering and 1/c scaling on the magnetic
// term, Newtonian velocity update).  standard_lorentz integrates
// dp/dt = e (E + v x B) with p = gamma m v.
enum class DynamicsMode { paper_literal, standard_lorentz };

// A 3-vector with its tracked dimension.  The literal force laws return
// "accelerations" whose unit is not m/s^2; the tag keeps that visible
// instead of letting the anomaly vanish into a bare double.
struct QuantityVec {
  Vec3 value;
  Dimension dim;
};

// e E / (eps0 m_e) -- as printed, with the anomalous permittivity divisor.
QuantityVec accel_electric_literal(const Vec3& E,
                                   const ConstantsTable& k = constants());

// (e / (m_e c)) H x v -- as printed, H x v ordering.  |v| < c required.
QuantityVec accel_magnetic_literal(const Vec3& v, const Vec3& H,
                                   const ConstantsTable& k = constants());

// Acceleration consistent with dp/dt = e (E + v x B), p = gamma m_e v:
// a = (e / (gamma m_e)) [E + v x B - (v.E) v / c^2].  Exactly m/s^2.
QuantityVec accel_standard(const Vec3& v, const FieldConfig& config,
                           const ConstantsTable& k = constants());

// One step of the volume-preserving split scheme: half electric kick,
// exact magnetic rotation, half electric kick; positions advance on the
// velocity midpoint.  Second order in dt.  In a pure magnetic field the
// speed is preserved to roundoff because the rotation is exact.
//
// standard_lorentz kicks/rotates the proper velocity u = gamma v, so the
// speed stays below c structurally.  paper_literal updates v directly as
// the printed Newtonian laws demand and throws StepRejected the moment a
// kick reaches c -- never clamps.
ElectronState step(const ElectronState& state, const FieldConfig& config,
                   double dt, DynamicsMode mode,
                   const ConstantsTable& k = constants());

struct TrajectorySample {
  ElectronState state;
  double power;  // instantaneous radiated power at this sample
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // n_steps + 1 entries
  double dt = 0.0;
  DynamicsMode mode = DynamicsMode::standard_lorentz;
  // Trapezoidal time integral of the sampled power.  The trapezoid (not a
  // bare left sum) keeps the quadrature error at the integrator's own
  // O(dt^2) so step-halving studies see the scheme, not the sum rule.
  double radiated_energy = 0.0;
};

// Integrate n_steps steps, sampling instantaneous radiated power at every
// state.  standard_lorentz pairs with the textbook kinematic power;
// paper_literal pairs with the as-printed kinematic power and the summed
// as-printed accelerations.  StepRejected is rethrown with the step index.
Trajectory integrate(const ElectronState& initial, const FieldConfig& config,
                     double dt, long n_steps, DynamicsMode mode,
                     const ConstantsTable& k = constants());

}  // namespace vacrad
