#pragma once

#include <span>
#include <vector>

#include "lsv/params.hpp"
#include "lsv/series.hpp"

namespace lsv {

/// Parameters of the biconfluent Heun equation
///   H'' + [alpha_bar/xi - 2 xi] H' + [g - delta'/xi] H = 0,  xi = sqrt(m omega) rho.
struct HeunParams {
  double alpha_bar = 1.0;
  double g_param = 0.0;       ///< zeta^2/(m omega) - 2 - 2|nu|
  double delta_scaled = 0.0;  ///< delta / sqrt(m omega)
  double omega = 1.0;

  static HeunParams make(const Background& bg, const QuantumNumbers& qn, double omega,
                         double zeta_sq);
};

/// Positive frequencies at which the Heun series truncates to degree n.
struct FrequencyRoots {
  int n = 0;
  std::vector<double> roots;      ///< ascending
  std::vector<double> residuals;  ///< |a_{n+1}| at each root
};

/// Log-spaced scan window in x = delta'^2 = delta^2/(m omega).
struct RootSearchWindow {
  double x_min = 1e-8;
  double x_max = 1e8;
  int nodes = 400;
  double rel_tol = 1e-12;
};

/// Frobenius coefficients a_0..a_N of the Heun series:
///   a_0 = 1, a_1 = delta'/alpha_bar,
///   a_{j+2} = [delta' a_{j+1} - (g - 2j) a_j] / ((j + 2)(j + alpha_bar + 1)).
SeriesSolution heun_coeffs(double alpha_bar, double g_param, double delta_scaled, int N);

/// a_{n+1} with g = 2n and delta' = delta / sqrt(m omega).
double quantization_residual(const Background& bg, const QuantumNumbers& qn, double omega);

/// a_{n+1} with g = 2n divided by delta'^{(n+1) mod 2}: a polynomial of degree
/// floor((n+1)/2) in x = delta'^2.
double reduced_residual(double alpha_bar, int n, double x);

/// All positive roots omega of a_{n+1}(omega) = 0 under g = 2n.
/// Throws DegenerateDelta when delta == 0 and NoPositiveRoot when none exist.
FrequencyRoots solve_frequencies(const Background& bg, const QuantumNumbers& qn,
                                 const RootSearchWindow& window = {});

/// omega (n + |nu| + 1) + C^2/2m + k^2/2m.
double oscillator_energy(const Background& bg, const QuantumNumbers& qn, double omega);

/// zeta^2 of the truncated state, m omega (2n + 2 + 2|nu|).
double oscillator_zeta_sq(const Background& bg, const QuantumNumbers& qn, double omega);

/// Terminating Heun polynomial a_0..a_n at g = 2n. For delta != 0 omega must be a
/// quantization root (|a_{n+1}| <= 1e-8 max|a_j|); for delta == 0 n must be even.
/// Throws InvalidInput otherwise.
SeriesSolution oscillator_series(const Background& bg, const QuantumNumbers& qn, double omega);

/// G(rho_i) = e^{-xi^2/2} xi^{|nu|} P_n(xi), xi = sqrt(m omega) rho.
std::vector<double> oscillator_wavefunction(const Background& bg, const QuantumNumbers& qn,
                                            double omega, std::span<const double> rho,
                                            Normalization norm = Normalization::none);

}  // namespace lsv
