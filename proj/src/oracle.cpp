#include "lsv/oracle.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "lsv/errors.hpp"
#include "lsv/oscillator.hpp"
#include "lsv/series.hpp"
#include "lsv/tridiagonal.hpp"

namespace lsv {

GridSpec GridSpec::cell_centered(double extent, int points) {
  if (!(extent > 0.0) || points < 2) throw InvalidInput("cell_centered: bad extent or points");
  const double h = extent / points;
  return {0.5 * h, extent - 0.5 * h, points};
}

GridSpec GridSpec::refined(int factor) const { return cell_centered(extent(), points * factor); }

void GridSpec::validate() const {
  if (!(rho_min > 0.0) || !(rho_max > rho_min)) {
    throw InvalidInput("grid needs 0 < rho_min < rho_max");
  }
  if (points < 64) throw InvalidInput("grid needs at least 64 points");
}

double RadialEquation::potential(double rho) const noexcept {
  return nu * nu / (rho * rho) + delta / rho + mass_omega * mass_omega * rho * rho;
}

RadialEquation coulomb_equation(const Background& bg, const QuantumNumbers& qn) {
  RadialEquation eq;
  eq.nu = effective_nu(qn);
  eq.delta = coulomb_delta(bg, qn);
  const double tau = std::abs(eq.delta) / (2.0 * (qn.n + std::abs(eq.nu) + 0.5));
  eq.zeta_sq = -tau * tau;
  return eq;
}

RadialEquation oscillator_equation(const Background& bg, const QuantumNumbers& qn,
                                   double omega) {
  RadialEquation eq;
  eq.nu = effective_nu(qn);
  eq.delta = coulomb_delta(bg, qn);
  eq.zeta_sq = oscillator_zeta_sq(bg, qn, omega);
  eq.mass_omega = bg.mass * omega;
  return eq;
}

SymTridiagonal discretize(const RadialEquation& eq, const GridSpec& grid) {
  const int n = grid.points;
  const double h = grid.extent() / n;
  const double inv_h2 = 1.0 / (h * h);
  SymTridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  // Cell i spans [i h, (i+1) h] with centre (i + 1/2) h; zero flux through rho = 0.
  for (int i = 0; i < n; ++i) {
    const double r = (i + 0.5) * h;
    const double r_in = i * h;
    const double r_out = (i + 1.0) * h;
    t.diag[i] = (r_in + r_out) * inv_h2 / r + eq.potential(r);
    if (i + 1 < n) {
      const double r_next = (i + 1.5) * h;
      t.off[i] = -r_out * inv_h2 / std::sqrt(r * r_next);
    }
  }
  return t;
}

std::vector<double> radial_spectrum(const RadialEquation& eq, const GridSpec& grid, int k) {
  grid.validate();
  if (k < 1) throw InvalidInput("need at least one eigenvalue");
  return discretize(eq, grid).lowest_eigenvalues(static_cast<std::size_t>(k));
}

OracleResult eigensolve(const RadialEquation& eq, const GridSpec& grid, int k_states,
                        const OracleOptions& options) {
  OracleResult res;
  res.grid = grid;
  res.zeta_sq_values = radial_spectrum(eq, grid, k_states);
  res.fine_values = radial_spectrum(eq, grid.refined(2), k_states);
  const std::vector<double> finest = radial_spectrum(eq, grid.refined(4), k_states);

  bool coarse = false;
  std::ostringstream why;
  for (int i = 0; i < k_states; ++i) {
    const double c = res.zeta_sq_values[i];
    const double f = res.fine_values[i];
    res.richardson_estimate.push_back((4.0 * f - c) / 3.0);
    const double order = std::log2(std::abs(c - f) / std::abs(f - finest[i]));
    res.convergence_order.push_back(order);
    if (!(std::abs(order - 2.0) <= 0.5)) {
      coarse = true;
      why << " [state " << i << ": order " << order << "]";
    }
  }
  if (coarse && options.strict) {
    throw GridTooCoarse("observed convergence order deviates from 2 by more than 0.5 on " +
                        std::to_string(grid.points) + " points:" + why.str());
  }
  return res;
}

GridSpec default_coulomb_grid(const Background& bg, int l, int s, int k_states, int points) {
  const QuantumNumbers top{k_states - 1, l, s};
  const double delta = coulomb_delta(bg, top);
  const double principal = top.n + std::abs(effective_nu(top)) + 0.5;
  const double scale = delta < 0.0 ? -delta : (delta > 0.0 ? delta : 1.0);
  const double tau_min = scale / (2.0 * principal);
  return GridSpec::cell_centered(30.0 / tau_min, points);
}

GridSpec default_oscillator_grid(const Background& bg, double omega, int points) {
  return GridSpec::cell_centered(10.0 / std::sqrt(bg.mass * omega), points);
}

OracleResult eigensolve_coulomb(const Background& bg, int l, int s, const GridSpec& grid,
                                int k_states, const OracleOptions& options) {
  bg.validate();
  const QuantumNumbers qn{0, l, s};
  qn.validate();
  return eigensolve(coulomb_equation(bg, qn), grid, k_states, options);
}

OracleResult eigensolve_oscillator(const Background& bg, int l, int s, double omega,
                                   const GridSpec& grid, int k_states,
                                   const OracleOptions& options) {
  bg.validate();
  if (!(omega > 0.0)) throw InvalidInput("omega must be positive");
  const QuantumNumbers qn{0, l, s};
  qn.validate();
  return eigensolve(oscillator_equation(bg, qn, omega), grid, k_states, options);
}

std::size_t count_bound_states(const Background& bg, int l, int s, const GridSpec& grid) {
  grid.validate();
  const QuantumNumbers qn{0, l, s};
  qn.validate();
  return discretize(coulomb_equation(bg, qn), grid).count_below(0.0);
}

double cylindrical_lhs(const RadialEquation& eq, double rho, double G, double dG,
                       double d2G) noexcept {
  return d2G + dG / rho - eq.potential(rho) * G + eq.zeta_sq * G;
}

double liouville_lhs(const RadialEquation& eq, double rho, double u, double d2u) noexcept {
  return d2u + (eq.zeta_sq - eq.potential(rho) + 0.25 / (rho * rho)) * u;
}

double residual_check(std::span<const double> rho, std::span<const double> G,
                      const RadialEquation& eq) {
  if (rho.size() != G.size()) throw InvalidInput("residual_check: size mismatch");
  if (rho.size() < 5) throw InvalidInput("residual_check: need at least 5 samples");
  require_uniform(rho);
  const std::size_t n = rho.size();
  const double h = (rho.back() - rho.front()) / static_cast<double>(n - 1);
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double d1 = (-G[i + 2] + 8.0 * G[i + 1] - 8.0 * G[i - 1] + G[i - 2]) / (12.0 * h);
    const double d2 =
        (-G[i + 2] + 16.0 * G[i + 1] - 30.0 * G[i] + 16.0 * G[i - 1] - G[i - 2]) / (12.0 * h * h);
    worst = std::max(worst, std::abs(cylindrical_lhs(eq, rho[i], G[i], d1, d2)));
  }
  return worst;
}

LiouvilleSamples to_liouville(std::span<const double> rho, std::span<const double> G) {
  if (rho.size() != G.size()) throw InvalidInput("to_liouville: size mismatch");
  LiouvilleSamples out;
  out.rho.assign(rho.begin(), rho.end());
  out.u.resize(rho.size());
  out.u_err.resize(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0.0)) throw InvalidInput("to_liouville: rho must be positive");
    const double w = std::sqrt(rho[i]);
    out.u[i] = G[i] * w;
    out.u_err[i] = std::fma(G[i], w, -out.u[i]);
  }
  return out;
}

std::vector<double> from_liouville(const LiouvilleSamples& samples) {
  std::vector<double> G(samples.u.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    const double w = std::sqrt(samples.rho[i]);
    const double q = samples.u[i] / w;
    const double rem = std::fma(-q, w, samples.u[i]);
    G[i] = q + (rem + samples.u_err[i]) / w;
  }
  return G;
}

}  // namespace lsv
