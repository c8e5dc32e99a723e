#include "lsv/params.hpp"

#include <cmath>
#include <string>

#include "lsv/errors.hpp"

namespace lsv {

void Background::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidParameter("mass must be positive and finite, got " + std::to_string(mass));
  }
  if (!(b >= 0.0)) {
    throw InvalidParameter("b must be non-negative, got " + std::to_string(b));
  }
  if (!std::isfinite(coupling()) || !std::isfinite(k)) {
    throw InvalidParameter("g*b*B0 and k must be finite");
  }
}

void QuantumNumbers::validate(int min_n) const {
  if (s != 1 && s != -1) {
    throw InvalidParameter("spin s must be +1 or -1, got " + std::to_string(s));
  }
  if (n < min_n) {
    throw InvalidParameter("n must be >= " + std::to_string(min_n) + ", got " +
                           std::to_string(n));
  }
}

int effective_nu(const QuantumNumbers& qn) { return qn.l + (1 - qn.s) / 2; }

double coulomb_delta(const Background& bg, const QuantumNumbers& qn) {
  const double c = bg.coupling();
  const double nu = effective_nu(qn);
  return 2.0 * c * nu + qn.s * c;
}

double zeta_sq_from_energy(const Background& bg, double energy) {
  const double c = bg.coupling();
  return 2.0 * bg.mass * energy - bg.k * bg.k - c * c;
}

double energy_from_zeta_sq(const Background& bg, double zeta_sq) {
  const double c = bg.coupling();
  return (zeta_sq + bg.k * bg.k + c * c) / (2.0 * bg.mass);
}

RadialParams derive_radial_params(const Background& bg, const QuantumNumbers& qn,
                                  double energy) {
  RadialParams p;
  p.nu = effective_nu(qn);
  p.delta = coulomb_delta(bg, qn);
  p.zeta_sq = zeta_sq_from_energy(bg, energy);
  p.alpha_bar = 2.0 * p.abs_nu() + 1.0;
  return p;
}

QuantumNumbers degeneracy_partner(const QuantumNumbers& qn) noexcept {
  return {qn.n, -qn.l - 1, -qn.s};
}

}  // namespace lsv
