#pragma once

#include <span>
#include <vector>

#include "lsv/params.hpp"
#include "lsv/series.hpp"

namespace lsv {

/// A bound state of the pure Coulomb-like problem.
struct CoulombState {
  QuantumNumbers qn;
  double energy = 0.0;
  double tau = 0.0;  ///< decay constant, zeta^2 = -tau^2
  int degree = 0;    ///< degree n of the terminating Kummer polynomial
};

inline constexpr int kKummerDefaultTerms = 200;

/// Truncated confluent hypergeometric series
///   M(a, b, x) = sum_{j=0}^{n_terms} (a)_j / (b)_j x^j / j!.
/// Terminates exactly when a is a non-positive integer. Stops early once a
/// term drops below 1e-17 of the running sum three times in a row.
/// Throws InvalidParameter if b is a non-positive integer or n_terms < 1.
double kummer_m(double a, double b, double x, int n_terms = kKummerDefaultTerms);

/// Coefficients c_j = (a)_j / ((b)_j j!) for j = 0..n_terms.
std::vector<double> kummer_coeffs(double a, double b, int n_terms);

/// Closed-form level -delta^2 / (8 m (n + |nu| + 1/2)^2) + C^2/2m + k^2/2m,
/// evaluated without checking the sign of delta.
double coulomb_level(const Background& bg, const QuantumNumbers& qn);

/// Bound-state energy. Throws RepulsiveBranch when delta >= 0.
double coulomb_energy(const Background& bg, const QuantumNumbers& qn);

CoulombState coulomb_state(const Background& bg, const QuantumNumbers& qn);

/// Kummer polynomial M(-n, 2|nu|+1, r) in r = 2 tau rho with its e^{-r/2} r^{|nu|}
/// prefactor.
SeriesSolution coulomb_series(const Background& bg, const QuantumNumbers& qn);

/// G(rho_i) = e^{-tau rho} (2 tau rho)^{|nu|} M(-n, 2|nu|+1, 2 tau rho).
/// The grid must be positive and strictly increasing.
std::vector<double> coulomb_wavefunction(const Background& bg, const QuantumNumbers& qn,
                                         std::span<const double> rho,
                                         Normalization norm = Normalization::none);

}  // namespace lsv
