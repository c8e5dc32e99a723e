#pragma once

#include <cstdlib>

namespace lsv {

/// Physical environment of the neutral particle, natural units (hbar = c = 1).
///
/// `g`, `b` and `B0` are kept separately for reporting, but every downstream
/// formula sees them only through the product `coupling() = g * b * B0`.
struct Background {
  double g = 0.0;     ///< nonminimal coupling constant
  double b = 0.0;     ///< magnitude of the radial space-like vector, >= 0
  double B0 = 0.0;    ///< uniform magnetic field along z
  double mass = 1.0;  ///< particle mass, > 0
  double k = 0.0;     ///< eigenvalue of p_z

  double coupling() const noexcept { return g * b * B0; }

  /// Throws InvalidParameter unless mass > 0, b >= 0 and the coupling is finite.
  void validate() const;
};

/// (n, l, s): radial degree, angular integer, spin eigenvalue of sigma^3.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  int s = 1;

  /// Throws InvalidParameter unless s is +1 or -1 and n >= min_n.
  void validate(int min_n = 0) const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Effective radial parameters of the cylindrical radial equation
///   G'' + G'/rho - nu^2/rho^2 G - delta/rho G + zeta^2 G = 0.
struct RadialParams {
  double nu = 0.0;         ///< l + (1 - s)/2, always integral
  double delta = 0.0;      ///< 2 C nu + s C, strength of the Coulomb-like term
  double zeta_sq = 0.0;    ///< 2 m E - k^2 - C^2
  double alpha_bar = 1.0;  ///< 2 |nu| + 1, odd and >= 1

  double abs_nu() const noexcept { return nu < 0.0 ? -nu : nu; }
};

/// Effective angular number nu_s = l + (1 - s)/2 as an integer.
int effective_nu(const QuantumNumbers& qn);

/// Coulomb-like coupling delta = 2 C nu + s C for the given background.
double coulomb_delta(const Background& bg, const QuantumNumbers& qn);

RadialParams derive_radial_params(const Background& bg, const QuantumNumbers& qn,
                                  double energy);

/// zeta^2 = 2 m E - k^2 - C^2.
double zeta_sq_from_energy(const Background& bg, double energy);
/// Inverse of zeta_sq_from_energy.
double energy_from_zeta_sq(const Background& bg, double zeta_sq);

/// (n, l, s) -> (n, -l-1, -s). The image shares |nu| and delta^2 with the
/// input (delta flips sign), so every energy formula is invariant under it.
QuantumNumbers degeneracy_partner(const QuantumNumbers& qn) noexcept;

}  // namespace lsv
