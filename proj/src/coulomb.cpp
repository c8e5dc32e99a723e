#include "lsv/coulomb.hpp"

#include <cmath>
#include <string>

#include "lsv/errors.hpp"

namespace lsv {
namespace {

void require_valid_b(double b) {
  if (b <= 0.0 && std::floor(b) == b) {
    throw InvalidParameter("Kummer parameter b must not be a non-positive integer, got " +
                           std::to_string(b));
  }
}

void require_positive_increasing(std::span<const double> rho) {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0.0) || (i > 0 && !(rho[i] > rho[i - 1]))) {
      throw InvalidInput("rho grid must be positive and strictly increasing");
    }
  }
}

// n + |nu| + 1/2
double principal(const QuantumNumbers& qn) {
  return qn.n + std::abs(effective_nu(qn)) + 0.5;
}

}  // namespace

double kummer_m(double a, double b, double x, int n_terms) {
  require_valid_b(b);
  if (n_terms < 1) throw InvalidParameter("kummer_m: n_terms must be >= 1");

  double term = 1.0;
  double sum = 1.0;
  int small_run = 0;
  for (int j = 0; j < n_terms; ++j) {
    term *= (a + j) / (b + j) * x / (j + 1);
    if (term == 0.0) break;  // a = -n: every later term vanishes as well
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      if (++small_run == 3) break;
    } else {
      small_run = 0;
    }
  }
  return sum;
}

std::vector<double> kummer_coeffs(double a, double b, int n_terms) {
  require_valid_b(b);
  if (n_terms < 0) throw InvalidParameter("kummer_coeffs: n_terms must be >= 0");
  std::vector<double> c(static_cast<std::size_t>(n_terms) + 1, 0.0);
  c[0] = 1.0;
  for (int j = 0; j < n_terms; ++j) {
    if (a + j == 0.0) break;  // polynomial of degree j; the tail stays +0
    c[j + 1] = c[j] * (a + j) / ((b + j) * (j + 1));
  }
  return c;
}

double coulomb_level(const Background& bg, const QuantumNumbers& qn) {
  const double c = bg.coupling();
  const double delta = coulomb_delta(bg, qn);
  const double q = principal(qn);
  return -delta * delta / (8.0 * bg.mass * q * q) + c * c / (2.0 * bg.mass) +
         bg.k * bg.k / (2.0 * bg.mass);
}

double coulomb_energy(const Background& bg, const QuantumNumbers& qn) {
  bg.validate();
  qn.validate(0);
  const double delta = coulomb_delta(bg, qn);
  if (!(delta < 0.0)) {
    throw RepulsiveBranch("delta = " + std::to_string(delta) +
                          " is not attractive; no bound state for (l=" + std::to_string(qn.l) +
                          ", s=" + std::to_string(qn.s) + ")");
  }
  return coulomb_level(bg, qn);
}

CoulombState coulomb_state(const Background& bg, const QuantumNumbers& qn) {
  CoulombState st;
  st.qn = qn;
  st.energy = coulomb_energy(bg, qn);
  st.tau = std::abs(coulomb_delta(bg, qn)) / (2.0 * principal(qn));
  st.degree = qn.n;
  return st;
}

SeriesSolution coulomb_series(const Background& bg, const QuantumNumbers& qn) {
  const CoulombState st = coulomb_state(bg, qn);
  const double abs_nu = std::abs(effective_nu(qn));
  SeriesSolution sol;
  sol.coeffs = kummer_coeffs(-static_cast<double>(qn.n), 2.0 * abs_nu + 1.0, qn.n);
  sol.leading_exponent = abs_nu;
  sol.gaussian = false;
  sol.scale = 2.0 * st.tau;
  return sol;
}

std::vector<double> coulomb_wavefunction(const Background& bg, const QuantumNumbers& qn,
                                         std::span<const double> rho, Normalization norm) {
  require_positive_increasing(rho);
  const SeriesSolution sol = coulomb_series(bg, qn);
  std::vector<double> g(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) g[i] = sol.evaluate(rho[i]);
  if (norm == Normalization::l2) normalize_l2(rho, g);
  return g;
}

}  // namespace lsv
