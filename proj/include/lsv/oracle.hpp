#pragma once

#include <span>
#include <vector>

#include "lsv/params.hpp"
#include "lsv/tridiagonal.hpp"

namespace lsv {

/// Uniform radial grid. For the eigensolver the nodes are cell centres
/// rho_i = (i - 1/2) h, so rho_min = h/2, the cells cover [0, rho_max + h/2] and
/// the outer Dirichlet node sits at rho_max + h.
struct GridSpec {
  double rho_min = 0.0;
  double rho_max = 0.0;
  int points = 0;

  double spacing() const noexcept { return (rho_max - rho_min) / (points - 1); }
  double node(int i) const noexcept { return rho_min + i * spacing(); }
  /// Right edge of the last cell, points * spacing for a cell-centred grid.
  double extent() const noexcept { return rho_max + 0.5 * spacing(); }
  GridSpec refined(int factor) const;

  /// Cell-centred grid with `points` cells covering [0, extent].
  static GridSpec cell_centered(double extent, int points);
  /// Throws InvalidInput unless 0 < rho_min < rho_max and points >= 64.
  void validate() const;
};

/// One radial equation in the family
///   G'' + G'/rho - nu^2/rho^2 G - delta/rho G - (m omega)^2 rho^2 G + zeta^2 G = 0.
struct RadialEquation {
  double nu = 0.0;
  double delta = 0.0;
  double zeta_sq = 0.0;
  double mass_omega = 0.0;  ///< m omega; zero for the pure Coulomb-like problem

  /// Potential part nu^2/rho^2 + delta/rho + (m omega)^2 rho^2.
  double potential(double rho) const noexcept;
};

enum class Sector { coulomb, oscillator };

RadialEquation coulomb_equation(const Background& bg, const QuantumNumbers& qn);
RadialEquation oscillator_equation(const Background& bg, const QuantumNumbers& qn,
                                   double omega);

struct OracleResult {
  std::vector<double> zeta_sq_values;       ///< lowest K eigenvalues on `grid`
  GridSpec grid;
  std::vector<double> fine_values;          ///< same on the 2x refined grid
  std::vector<double> richardson_estimate;  ///< (4 fine - coarse) / 3
  std::vector<double> convergence_order;    ///< observed order from N, 2N, 4N
};

struct OracleOptions {
  /// Throw GridTooCoarse when any observed order is outside [1.5, 2.5].
  bool strict = true;
};

/// Finite-difference discretisation of the radial operator
///   -(1/rho)(rho G')' + V(rho) G = zeta^2 G
/// by flux differencing on cell centres, symmetrised with u = sqrt(rho) G.
SymTridiagonal discretize(const RadialEquation& eq, const GridSpec& grid);

/// Lowest k eigenvalues of `discretize(eq, grid)`, no refinement.
std::vector<double> radial_spectrum(const RadialEquation& eq, const GridSpec& grid, int k);

/// Lowest k eigenvalues on N, 2N and 4N points plus Richardson extrapolation.
OracleResult eigensolve(const RadialEquation& eq, const GridSpec& grid, int k_states,
                        const OracleOptions& options = {});

/// Default grid: 4000 cells over 30 / tau_min, tau_min the slowest decay among
/// the requested states (for delta >= 0 the delta = -1 scale is used).
GridSpec default_coulomb_grid(const Background& bg, int l, int s, int k_states,
                              int points = 4000);
/// Default grid: 4000 cells over 10 / sqrt(m omega).
GridSpec default_oscillator_grid(const Background& bg, double omega, int points = 4000);

OracleResult eigensolve_coulomb(const Background& bg, int l, int s, const GridSpec& grid,
                                int k_states, const OracleOptions& options = {});
OracleResult eigensolve_oscillator(const Background& bg, int l, int s, double omega,
                                   const GridSpec& grid, int k_states,
                                   const OracleOptions& options = {});

/// Number of negative eigenvalues of the discretised Coulomb-like operator.
std::size_t count_bound_states(const Background& bg, int l, int s, const GridSpec& grid);

/// Max over interior samples of |LHS| of the radial equation, with five-point
/// central differences for G' and G''. Needs >= 5 uniformly spaced samples;
/// throws NonUniformGrid / InvalidInput.
double residual_check(std::span<const double> rho, std::span<const double> G,
                      const RadialEquation& eq);

/// Pointwise LHS of the cylindrical form given G, G', G''.
double cylindrical_lhs(const RadialEquation& eq, double rho, double G, double dG,
                       double d2G) noexcept;
/// Pointwise LHS of the Liouville form u'' + [zeta^2 - (nu^2 - 1/4)/rho^2 - delta/rho
/// - (m omega)^2 rho^2] u, which equals sqrt(rho) times the cylindrical LHS.
double liouville_lhs(const RadialEquation& eq, double rho, double u, double d2u) noexcept;

/// u = sqrt(rho) G stored as an unevaluated sum u + u_err (error-free product),
/// so that the inverse transform recovers G exactly.
struct LiouvilleSamples {
  std::vector<double> rho;
  std::vector<double> u;
  std::vector<double> u_err;
};

LiouvilleSamples to_liouville(std::span<const double> rho, std::span<const double> G);
std::vector<double> from_liouville(const LiouvilleSamples& samples);

}  // namespace lsv
