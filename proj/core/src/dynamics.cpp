#include "vacrad/dynamics.hpp"

#include <cmath>
#include <string>

namespace vacrad {

namespace {

// Rodrigues rotation of v about unit axis n by angle theta.
Vec3 rotate(const Vec3& v, const Vec3& n, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * v + s * cross(n, v) + (1.0 - c) * dot(n, v) * n;
}

void require_subluminal(const Vec3& v, double c, const char* who) {
  if (norm_sq(v) >= c * c)
    throw SuperluminalInput(std::string(who) + ": |v| >= c");
}

void require_positive_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw DomainError("step: dt must be positive and finite");
}

}  // namespace

QuantityVec accel_electric_literal(const Vec3& E, const ConstantsTable& k) {
  const double scale = k.e.magnitude() / (k.eps0.magnitude() * k.m_e.magnitude());
  return {scale * E,
          k.e.dim() * dims::electric_field() / (k.eps0.dim() * k.m_e.dim())};
}

QuantityVec accel_magnetic_literal(const Vec3& v, const Vec3& H,
                                   const ConstantsTable& k) {
  require_subluminal(v, k.c.magnitude(), "accel_magnetic_literal");
  const double scale = k.e.magnitude() / (k.m_e.magnitude() * k.c.magnitude());
  return {scale * cross(H, v),
          k.e.dim() * dims::magnetic_field_h() * dims::velocity() /
              (k.m_e.dim() * k.c.dim())};
}

QuantityVec accel_standard(const Vec3& v, const FieldConfig& config,
                           const ConstantsTable& k) {
  const double c = k.c.magnitude();
  require_subluminal(v, c, "accel_standard");
  const double gamma = 1.0 / std::sqrt(1.0 - norm_sq(v) / (c * c));
  const double scale = k.e.magnitude() / (gamma * k.m_e.magnitude());
  const Vec3 a =
      scale * (config.E + cross(v, config.B) - (dot(v, config.E) / (c * c)) * v);
  return {a, dims::acceleration()};
}

ElectronState step(const ElectronState& state, const FieldConfig& config,
                   double dt, DynamicsMode mode, const ConstantsTable& k) {
  require_positive_dt(dt);
  const double c = k.c.magnitude();
  const double e = k.e.magnitude();
  const double m = k.m_e.magnitude();
  require_subluminal(state.velocity, c, "step");

  ElectronState next = state;

  if (mode == DynamicsMode::standard_lorentz) {
    const double gamma0 =
        1.0 / std::sqrt(1.0 - norm_sq(state.velocity) / (c * c));
    Vec3 u = gamma0 * state.velocity;  // proper velocity gamma v

    u = u + (e / m) * (0.5 * dt) * config.E;
    const double b_mag = norm(config.B);
    if (b_mag > 0.0) {
      const double gamma_mid = std::sqrt(1.0 + norm_sq(u) / (c * c));
      // du/dt = (e/(gamma m)) u x B: rotation vector is -(e/(gamma m)) B.
      const double theta = e * b_mag * dt / (gamma_mid * m);
      u = rotate(u, -(config.B / b_mag), theta);
    }
    u = u + (e / m) * (0.5 * dt) * config.E;

    const double gamma1 = std::sqrt(1.0 + norm_sq(u) / (c * c));
    next.velocity = u / gamma1;
  } else {
    const Vec3 kick = accel_electric_literal(config.E, k).value * (0.5 * dt);

    Vec3 v = state.velocity + kick;
    if (norm_sq(v) >= c * c)
      throw StepRejected("paper-literal electric kick reached c");
    const double b_mag = norm(config.B);
    if (b_mag > 0.0) {
      const Vec3 H = config.B / k.mu0.magnitude();
      // dv/dt = (e/(m c)) H x v: exact rotation about +H, speed preserved.
      const double theta = e * norm(H) * dt / (m * c);
      v = rotate(v, H / norm(H), theta);
    }
    v = v + kick;
    if (norm_sq(v) >= c * c)
      throw StepRejected("paper-literal electric kick reached c");
    next.velocity = v;
  }

  next.position =
      state.position + (0.5 * dt) * (state.velocity + next.velocity);
  next.t = state.t + dt;
  return next;
}

namespace {

double sample_power(const ElectronState& s, const FieldConfig& config,
                    DynamicsMode mode, const ConstantsTable& k) {
  if (mode == DynamicsMode::standard_lorentz) {
    const Vec3 a = accel_standard(s.velocity, config, k).value;
    return power_kinematic_form(s.velocity, a, PowerVariant::textbook, k).power;
  }
  const Vec3 H = config.B / k.mu0.magnitude();
  const Vec3 a = accel_electric_literal(config.E, k).value +
                 accel_magnetic_literal(s.velocity, H, k).value;
  return power_kinematic_form(s.velocity, a, PowerVariant::paper_literal, k).power;
}

}  // namespace

Trajectory integrate(const ElectronState& initial, const FieldConfig& config,
                     double dt, long n_steps, DynamicsMode mode,
                     const ConstantsTable& k) {
  if (n_steps < 1) throw DomainError("integrate: n_steps must be >= 1");
  require_positive_dt(dt);

  Trajectory traj;
  traj.dt = dt;
  traj.mode = mode;
  traj.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

  ElectronState s = initial;
  traj.samples.push_back({s, sample_power(s, config, mode, k)});

  for (long i = 1; i <= n_steps; ++i) {
    try {
      s = step(s, config, dt, mode, k);
    } catch (const StepRejected& r) {
      throw StepRejected(std::string(r.what()) + " at step " + std::to_string(i),
                         i);
    }
    traj.samples.push_back({s, sample_power(s, config, mode, k)});
  }

  double sum = 0.5 * (traj.samples.front().power + traj.samples.back().power);
  for (std::size_t i = 1; i + 1 < traj.samples.size(); ++i)
    sum += traj.samples[i].power;
  traj.radiated_energy = dt * sum;
  return traj;
}

}  // namespace vacrad
