#include "vacrad/zpf.hpp"

#include <cmath>

namespace vacrad {

double zpf_prefactor(const ConstantsTable& k) {
  const double compton = k.hbar.magnitude() / (k.m_e.magnitude() * k.c.magnitude());
  return (2.0 / M_PI) * k.alpha.magnitude() * compton * compton;
}

ZpfDisplacement mean_square_displacement(double omega, const ConstantsTable& k) {
  const double nu_e = k.nu_e.magnitude();
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError("mean_square_displacement: omega must be in (0, nu_e)");
  if (omega >= nu_e)
    throw DomainError("mean_square_displacement: omega >= nu_e");
  return {zpf_prefactor(k) * std::log(nu_e / omega), omega};
}

}  // namespace vacrad
