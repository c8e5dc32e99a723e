#include "lsv/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsv/errors.hpp"

namespace lsv {
namespace {

double alpha_bar_of(const QuantumNumbers& qn) { return 2.0 * std::abs(effective_nu(qn)) + 1.0; }

void require_positive_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidInput("omega must be positive and finite, got " + std::to_string(omega));
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

HeunParams HeunParams::make(const Background& bg, const QuantumNumbers& qn, double omega,
                            double zeta_sq) {
  require_positive_omega(omega);
  const double mw = bg.mass * omega;
  HeunParams p;
  p.alpha_bar = alpha_bar_of(qn);
  p.g_param = zeta_sq / mw - 2.0 - 2.0 * std::abs(effective_nu(qn));
  p.delta_scaled = coulomb_delta(bg, qn) / std::sqrt(mw);
  p.omega = omega;
  return p;
}

SeriesSolution heun_coeffs(double alpha_bar, double g_param, double delta_scaled, int N) {
  if (N < 2) throw InvalidParameter("heun_coeffs: N must be >= 2");
  if (!(alpha_bar >= 1.0)) throw InvalidParameter("heun_coeffs: alpha_bar must be >= 1");

  SeriesSolution sol;
  sol.gaussian = true;
  sol.leading_exponent = 0.5 * (alpha_bar - 1.0);
  auto& a = sol.coeffs;
  a.resize(static_cast<std::size_t>(N) + 1);
  a[0] = 1.0;
  a[1] = delta_scaled / alpha_bar;
  for (int j = 0; j + 2 <= N; ++j) {
    const double denom = (j + 2.0) * (j + alpha_bar + 1.0);
    a[j + 2] = (delta_scaled * a[j + 1] - (g_param - 2.0 * j) * a[j]) / denom;
  }
  return sol;
}

double reduced_residual(double alpha_bar, int n, double x) {
  // a_j = delta'^{j mod 2} p_j(x); the same recurrence, split by parity.
  const double g = 2.0 * n;
  double p_prev = 1.0;             // p_j
  double p_curr = 1.0 / alpha_bar; // p_{j+1}
  for (int j = 0; j < n; ++j) {
    const double denom = (j + 2.0) * (j + alpha_bar + 1.0);
    const double lead = (j % 2 == 0) ? x * p_curr : p_curr;
    const double next = (lead - (g - 2.0 * j) * p_prev) / denom;
    p_prev = p_curr;
    p_curr = next;
  }
  return p_curr;
}

double quantization_residual(const Background& bg, const QuantumNumbers& qn, double omega) {
  require_positive_omega(omega);
  qn.validate(1);
  const double delta_scaled = coulomb_delta(bg, qn) / std::sqrt(bg.mass * omega);
  const SeriesSolution sol = heun_coeffs(alpha_bar_of(qn), 2.0 * qn.n, delta_scaled, qn.n + 1);
  return sol.coeffs[static_cast<std::size_t>(qn.n) + 1];
}

FrequencyRoots solve_frequencies(const Background& bg, const QuantumNumbers& qn,
                                 const RootSearchWindow& window) {
  bg.validate();
  qn.validate(1);
  if (!(window.x_min > 0.0 && window.x_max > window.x_min && window.nodes >= 2)) {
    throw InvalidParameter("invalid root search window");
  }
  const double delta = coulomb_delta(bg, qn);
  if (delta == 0.0) {
    throw DegenerateDelta("delta = 0: the oscillator frequency is unconstrained");
  }
  const double delta_sq = delta * delta;
  const double alpha_bar = alpha_bar_of(qn);
  auto f = [&](double x) { return reduced_residual(alpha_bar, qn.n, x); };

  std::vector<double> xs;
  const double log_span = std::log(window.x_max / window.x_min);
  double x_lo = window.x_min;
  double f_lo = f(x_lo);
  if (f_lo == 0.0) xs.push_back(x_lo);
  for (int i = 1; i < window.nodes; ++i) {
    const double x_hi =
        (i == window.nodes - 1) ? window.x_max
                                : window.x_min * std::exp(log_span * i / (window.nodes - 1));
    const double f_hi = f(x_hi);
    if (f_hi == 0.0) {
      xs.push_back(x_hi);
    } else if (f_lo != 0.0 && std::signbit(f_lo) != std::signbit(f_hi)) {
      double a = x_lo, b = x_hi, fa = f_lo;
      while (b - a > window.rel_tol * b) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      xs.push_back(0.5 * (a + b));
    }
    x_lo = x_hi;
    f_lo = f_hi;
  }

  FrequencyRoots out;
  out.n = qn.n;
  std::vector<double> omegas;
  for (double x : xs) omegas.push_back(delta_sq / (bg.mass * x));
  std::sort(omegas.begin(), omegas.end());
  for (double w : omegas) {
    if (!out.roots.empty() && std::abs(w - out.roots.back()) <= 1e-9 * w) continue;
    out.roots.push_back(w);
  }
  if (out.roots.empty()) {
    throw NoPositiveRoot("no positive frequency satisfies a_{n+1} = 0 for n = " +
                         std::to_string(qn.n));
  }
  for (double w : out.roots) out.residuals.push_back(std::abs(quantization_residual(bg, qn, w)));
  return out;
}

double oscillator_zeta_sq(const Background& bg, const QuantumNumbers& qn, double omega) {
  return bg.mass * omega * (2.0 * qn.n + 2.0 + 2.0 * std::abs(effective_nu(qn)));
}

double oscillator_energy(const Background& bg, const QuantumNumbers& qn, double omega) {
  const double c = bg.coupling();
  return omega * (qn.n + std::abs(effective_nu(qn)) + 1.0) + c * c / (2.0 * bg.mass) +
         bg.k * bg.k / (2.0 * bg.mass);
}

SeriesSolution oscillator_series(const Background& bg, const QuantumNumbers& qn, double omega) {
  bg.validate();
  require_positive_omega(omega);
  const double delta = coulomb_delta(bg, qn);
  qn.validate(delta == 0.0 ? 0 : 1);
  if (delta == 0.0 && qn.n % 2 != 0) {
    throw InvalidInput("delta = 0 only truncates for even n");
  }
  const double mw = bg.mass * omega;
  SeriesSolution sol = heun_coeffs(alpha_bar_of(qn), 2.0 * qn.n, delta / std::sqrt(mw),
                                   std::max(qn.n + 2, 2));
  const auto n = static_cast<std::size_t>(qn.n);
  const double scale = max_abs(std::span<const double>(sol.coeffs).first(n + 1));
  if (std::abs(sol.coeffs[n + 1]) > 1e-8 * scale) {
    throw InvalidInput("omega = " + std::to_string(omega) +
                       " is not a quantization root (a_{n+1} does not vanish)");
  }
  sol.coeffs.resize(n + 1);
  sol.scale = std::sqrt(mw);
  return sol;
}

std::vector<double> oscillator_wavefunction(const Background& bg, const QuantumNumbers& qn,
                                            double omega, std::span<const double> rho,
                                            Normalization norm) {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0.0) || (i > 0 && !(rho[i] > rho[i - 1]))) {
      throw InvalidInput("rho grid must be positive and strictly increasing");
    }
  }
  const SeriesSolution sol = oscillator_series(bg, qn, omega);
  std::vector<double> g(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) g[i] = sol.evaluate(rho[i]);
  if (norm == Normalization::l2) normalize_l2(rho, g);
  return g;
}

}  // namespace lsv
