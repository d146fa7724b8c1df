#include "vacrad/quantities.hpp"

#include <cmath>

namespace vacrad {

std::string Dimension::str() const {
  static const char* names[4] = {"L", "M", "T", "I"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (exp_[i].is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += names[i];
    if (exp_[i] != Rational(1)) {
      out += '^';
      out += exp_[i].str();
    }
  }
  return out.empty() ? "1" : out;
}

Quantity::Quantity(double magnitude, Dimension dim) : magnitude_(magnitude), dim_(dim) {
  if (!std::isfinite(magnitude_))
    throw NonFinite("Quantity: non-finite magnitude");
}

Quantity Quantity::operator+(const Quantity& o) const {
  if (dim_ != o.dim_)
    throw DimensionMismatch("add: [" + dim_.str() + "] vs [" + o.dim_.str() + "]");
  return Quantity(magnitude_ + o.magnitude_, dim_);
}

Quantity Quantity::operator-(const Quantity& o) const {
  if (dim_ != o.dim_)
    throw DimensionMismatch("subtract: [" + dim_.str() + "] vs [" + o.dim_.str() + "]");
  return Quantity(magnitude_ - o.magnitude_, dim_);
}

Quantity Quantity::operator*(const Quantity& o) const {
  return Quantity(magnitude_ * o.magnitude_, dim_ * o.dim_);
}

Quantity Quantity::operator/(const Quantity& o) const {
  return Quantity(magnitude_ / o.magnitude_, dim_ / o.dim_);
}

Quantity Quantity::pow(const Rational& p) const {
  return Quantity(std::pow(magnitude_, p.value()), dim_.pow(p));
}

const ConstantsTable& constants(ConstantsSource source) {
  (void)source;  // single source for now
  static const ConstantsTable table = [] {
    ConstantsTable t;
    t.c = Quantity(2.99792458e8, dims::velocity());
    t.hbar = Quantity(1.054571817e-34, dims::action());
    t.e = Quantity(1.602176634e-19, dims::charge());
    t.m_e = Quantity(9.1093837015e-31, dims::mass());
    t.eps0 = Quantity(8.8541878128e-12, dims::permittivity());
    t.mu0 = Quantity(1.25663706212e-6, dims::permeability());
    t.alpha = Quantity(7.2973525693e-3, dims::none());
    // Derived through the quantity algebra; the s^-1 dimension falls out.
    t.nu_e = t.m_e * t.c * t.c / t.hbar;
    return t;
  }();
  return table;
}

}  // namespace vacrad
