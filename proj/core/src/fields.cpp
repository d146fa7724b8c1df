#include "vacrad/fields.hpp"

#include <algorithm>
#include <cmath>

namespace vacrad {

double beta_angle(const Vec3& v, const Vec3& field_line) {
  const double nv = norm(v);
  const double nf = norm(field_line);
  if (nv == 0.0) throw ZeroVector("beta_angle: zero velocity vector");
  if (nf == 0.0) throw ZeroVector("beta_angle: zero field vector");
  // Clamp before acos: roundoff can push the normalized dot past +-1.
  const double cosb = std::clamp(dot(v, field_line) / (nv * nf), -1.0, 1.0);
  return std::acos(cosb);
}

Induction induction(const FieldConfig& config, const ConstantsTable& k) {
  Induction ind;
  ind.D = k.eps0.magnitude() * norm(config.E);
  ind.B = norm(config.B);
  return ind;
}

double h_magnitude(const FieldConfig& config, const ConstantsTable& k) {
  return norm(config.B) / k.mu0.magnitude();
}

}  // namespace vacrad
