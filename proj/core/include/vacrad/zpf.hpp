#pragma once

#include "vacrad/quantities.hpp"

namespace vacrad {

struct ZpfDisplacement {
  double delta_r_sq = 0.0;  // mean-square displacement, m^2
  double omega = 0.0;       // cutoff used, s^-1
};

// (2/pi) alpha (hbar / m_e c)^2: the scale in front of the log,
// ~6.93e-28 m^2.
double zpf_prefactor(const ConstantsTable& k = constants());

// Mean-square zero-point displacement of a bound electron with cutoff
// omega:  (2/pi) alpha (hbar/m_e c)^2 ln(nu_e/omega).
//
// The log is oriented so the value is positive on the whole valid domain
// 0 < omega < nu_e, the orientation the closed-form energy expressions use;
// the flipped printing of the displacement law itself is an audit finding,
// not something this function reproduces.  Outside the domain: DomainError
// (omega = nu_e is excluded -- ln 1 = 0 is the boundary).
ZpfDisplacement mean_square_displacement(double omega,
                                         const ConstantsTable& k = constants());

}  // namespace vacrad
