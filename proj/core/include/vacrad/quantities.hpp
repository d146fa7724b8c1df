#pragma once

#include <array>
#include <string>

#include "vacrad/errors.hpp"
#include "vacrad/rational.hpp"

namespace vacrad {

// Dimension over the four SI base dimensions this domain needs:
// length L, mass M, time T, electric current I.  Exponents are exact
// rationals, so sqrt/1.5-power constant groups and Gaussian half-integer
// charge dimensions stay representable.
class Dimension {
public:
  constexpr Dimension() = default;  // dimensionless

  Dimension(Rational length, Rational mass, Rational time, Rational current)
      : exp_{length, mass, time, current} {}

  Rational length_exp() const { return exp_[0]; }
  Rational mass_exp() const { return exp_[1]; }
  Rational time_exp() const { return exp_[2]; }
  Rational current_exp() const { return exp_[3]; }

  bool is_dimensionless() const {
    for (const auto& e : exp_)
      if (!e.is_zero()) return false;
    return true;
  }

  Dimension operator*(const Dimension& o) const {
    Dimension r;
    for (int i = 0; i < 4; ++i) r.exp_[i] = exp_[i] + o.exp_[i];
    return r;
  }
  Dimension operator/(const Dimension& o) const {
    Dimension r;
    for (int i = 0; i < 4; ++i) r.exp_[i] = exp_[i] - o.exp_[i];
    return r;
  }
  Dimension pow(const Rational& p) const {
    Dimension r;
    for (int i = 0; i < 4; ++i) r.exp_[i] = exp_[i] * p;
    return r;
  }

  bool operator==(const Dimension& o) const {
    for (int i = 0; i < 4; ++i)
      if (exp_[i] != o.exp_[i]) return false;
    return true;
  }
  bool operator!=(const Dimension& o) const { return !(*this == o); }

  // "L M T^-2", "M^1/2 L^-1/2 T^-1" (halves from the Gaussian view), "1".
  std::string str() const;

private:
  std::array<Rational, 4> exp_{};  // L, M, T, I
};

// Base and derived dimensions used across the formula modules.
namespace dims {

inline Dimension none() { return Dimension(); }
inline Dimension length() { return Dimension(1, 0, 0, 0); }
inline Dimension mass() { return Dimension(0, 1, 0, 0); }
inline Dimension time() { return Dimension(0, 0, 1, 0); }
inline Dimension current() { return Dimension(0, 0, 0, 1); }

inline Dimension area() { return Dimension(2, 0, 0, 0); }
inline Dimension frequency() { return Dimension(0, 0, -1, 0); }
inline Dimension velocity() { return Dimension(1, 0, -1, 0); }
inline Dimension acceleration() { return Dimension(1, 0, -2, 0); }
inline Dimension force() { return Dimension(1, 1, -2, 0); }
inline Dimension energy() { return Dimension(2, 1, -2, 0); }
inline Dimension power() { return Dimension(2, 1, -3, 0); }
inline Dimension action() { return Dimension(2, 1, -1, 0); }  // J s
inline Dimension charge() { return Dimension(0, 0, 1, 1); }
inline Dimension electric_field() { return Dimension(1, 1, -3, -1); }     // V/m
inline Dimension magnetic_field_h() { return Dimension(-1, 0, 0, 1); }    // A/m
inline Dimension magnetic_flux_density() { return Dimension(0, 1, -2, -1); }  // T
inline Dimension electric_displacement() { return Dimension(-2, 0, 1, 1); }   // C/m^2
inline Dimension permittivity() { return Dimension(-3, -1, 4, 2); }       // F/m
inline Dimension permeability() { return Dimension(1, 1, -2, -2); }       // H/m

}  // namespace dims

// A finite real magnitude tagged with its dimension.  Pure value type:
// arithmetic produces new quantities, never mutates.  Unlike-dimension
// add/subtract and non-finite results are hard errors, never silent.
class Quantity {
public:
  Quantity() = default;  // dimensionless zero
  Quantity(double magnitude, Dimension dim);

  double magnitude() const { return magnitude_; }
  const Dimension& dim() const { return dim_; }

  Quantity operator+(const Quantity& o) const;
  Quantity operator-(const Quantity& o) const;
  Quantity operator*(const Quantity& o) const;
  Quantity operator/(const Quantity& o) const;

  // Exact rational exponent; the dimension exponents scale by p.
  Quantity pow(const Rational& p) const;

  bool operator==(const Quantity& o) const {
    return magnitude_ == o.magnitude_ && dim_ == o.dim_;
  }
  bool operator!=(const Quantity& o) const { return !(*this == o); }

private:
  double magnitude_ = 0.0;
  Dimension dim_{};
};

// CODATA 2018 SI values.  alpha is stored as its published value, not
// recomputed from the other entries; the identity e^2/(4 pi eps0 hbar c)
// reproduces it to ~6e-10 and the unit tests pin that.
struct ConstantsTable {
  Quantity c;      // speed of light, m/s (exact)
  Quantity hbar;   // reduced Planck constant, J s
  Quantity e;      // elementary charge, C (exact); sign applied at call sites
  Quantity m_e;    // electron mass, kg
  Quantity eps0;   // vacuum permittivity, F/m
  Quantity mu0;    // vacuum permeability, H/m
  Quantity alpha;  // fine-structure constant, dimensionless
  Quantity nu_e;   // m_e c^2 / hbar, s^-1 -- the Compton frequency cutoff
};

enum class ConstantsSource { codata_si };

const ConstantsTable& constants(ConstantsSource source = ConstantsSource::codata_si);

}  // namespace vacrad
