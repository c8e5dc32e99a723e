// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance used for a
// verdict is a named constant below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lsv/coulomb.hpp"
#include "lsv/errors.hpp"
#include "lsv/oracle.hpp"
#include "lsv/oscillator.hpp"
#include "lsv/params.hpp"

using namespace lsv;

namespace {

constexpr double kRootRelTol = 1e-10;          // AC1, AC2
constexpr double kRootSweepSeconds = 1.0;      // AC1, AC2
constexpr double kOracleRelTol = 5e-3;         // AC3, AC4
constexpr double kOracleSeconds = 60.0;        // AC3, AC4
constexpr int kOraclePoints = 4000;            // AC3, AC10
constexpr double kDegeneracyRelTol = 1e-10;    // AC5
constexpr double kSignRelTol = 1e-12;          // AC6
constexpr double kHeunTailRelTol = 1e-10;      // AC7
constexpr double kResidualTol = 1e-6;          // AC8
constexpr int kResidualRows = 1000;            // AC8
constexpr double kMinResidualOrder = 3.5;      // AC8
constexpr double kZeroDeltaRelTol = 2e-3;      // AC9
constexpr double kRatioLow = 3.5;              // AC10
constexpr double kRatioHigh = 4.5;             // AC10

Background make_background(double coupling, double mass = 1.0, double k = 0.0) {
  return Background{coupling, 1.0, 1.0, mass, k};
}

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double alpha_bar(const QuantumNumbers& qn) { return 2.0 * std::abs(effective_nu(qn)) + 1.0; }

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> check;
  double time_limit = 0.0;  // seconds; 0 means no limit
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> sample_grid(double rho_max, int rows) {
  std::vector<double> rho(rows);
  for (int i = 0; i < rows; ++i) rho[i] = (i + 1) * rho_max / rows;
  return rho;
}

std::vector<double> uniform(double a, double b, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = a + (b - a) * i / (n - 1);
  return x;
}

// ---- AC1 / AC2 -------------------------------------------------------------

Verdict frequency_sweep(int n) {
  Verdict v;
  double worst = 0.0;
  int cases = 0;
  for (double mass : {0.5, 1.0, 2.0}) {
    for (double c : {-1.0, -0.5, 0.5, 1.0}) {
      const Background bg = make_background(c, mass);
      for (int l = -2; l <= 2; ++l) {
        for (int s : {-1, 1}) {
          const QuantumNumbers qn{n, l, s};
          const double delta = coulomb_delta(bg, qn);
          if (delta == 0.0) continue;
          ++cases;
          const double ab = alpha_bar(qn);
          const double expected = n == 1 ? delta * delta / (2.0 * mass * ab)
                                         : delta * delta / (4.0 * mass * (2.0 * ab + 1.0));
          const auto roots = solve_frequencies(bg, qn).roots;
          if (roots.size() != 1) {
            v.pass = false;
            continue;
          }
          worst = std::max(worst, rel(roots[0], expected));
        }
      }
    }
  }
  v.pass = v.pass && cases == 120 && worst <= kRootRelTol;
  v.detail = std::to_string(cases) + " cases, max rel err " + fmt("%.2e", worst);
  return v;
}

// ---- AC3 / AC10 ------------------------------------------------------------

struct CoulombSweep {
  double worst_rel = 0.0;
  double min_ratio = 1e300;
  double max_ratio = 0.0;
  int compared = 0;
  int unbound_channels = 0;
  bool unbound_ok = true;
};

const CoulombSweep& coulomb_sweep() {
  static const CoulombSweep result = [] {
    CoulombSweep r;
    const Background bg = make_background(-1.0);
    for (int l = -1; l <= 1; ++l) {
      for (int s : {-1, 1}) {
        const GridSpec grid = default_coulomb_grid(bg, l, s, 3, kOraclePoints);
        if (coulomb_delta(bg, {0, l, s}) >= 0.0) {
          ++r.unbound_channels;
          r.unbound_ok = r.unbound_ok && count_bound_states(bg, l, s, grid) == 0 &&
                         count_bound_states(bg, l, s, grid.refined(2)) == 0;
          continue;
        }
        const OracleResult o = eigensolve_coulomb(bg, l, s, grid, 3);
        for (int n = 0; n <= 2; ++n) {
          const double tau = coulomb_state(bg, {n, l, s}).tau;
          const double exact = -tau * tau;
          r.worst_rel = std::max(r.worst_rel, rel(o.richardson_estimate[n], exact));
          const double ratio =
              std::abs(o.zeta_sq_values[n] - exact) / std::abs(o.fine_values[n] - exact);
          r.min_ratio = std::min(r.min_ratio, ratio);
          r.max_ratio = std::max(r.max_ratio, ratio);
          ++r.compared;
        }
      }
    }
    return r;
  }();
  return result;
}

Verdict coulomb_agreement() {
  const CoulombSweep& r = coulomb_sweep();
  Verdict v;
  v.pass = r.compared == 12 && r.worst_rel <= kOracleRelTol && r.unbound_channels == 2 &&
           r.unbound_ok;
  v.detail = std::to_string(r.compared) + " bound states, max rel err " +
             fmt("%.2e", r.worst_rel) + "; l=-1 channels repulsive, " +
             (r.unbound_ok ? "oracle finds no bound state" : "oracle finds spurious bound state");
  return v;
}

Verdict convergence_ratio() {
  const CoulombSweep& r = coulomb_sweep();
  Verdict v;
  v.pass = r.compared == 12 && r.min_ratio >= kRatioLow && r.max_ratio <= kRatioHigh;
  v.detail = "N/2N error ratio in [" + fmt("%.4f", r.min_ratio) + ", " + fmt("%.4f", r.max_ratio) +
             "]";
  return v;
}

// ---- AC4 -------------------------------------------------------------------

Verdict oscillator_containment() {
  Verdict v;
  double worst = 0.0;
  int cases = 0;
  const Background bg = make_background(1.0);
  for (int l : {0, 1}) {
    for (int n : {1, 2}) {
      const QuantumNumbers qn{n, l, +1};
      const double ab = alpha_bar(qn);
      const double delta = coulomb_delta(bg, qn);
      const double omega = n == 1 ? delta * delta / (2.0 * bg.mass * ab)
                                  : delta * delta / (4.0 * bg.mass * (2.0 * ab + 1.0));
      const double target = oscillator_zeta_sq(bg, qn, omega);
      const OracleResult o = eigensolve_oscillator(bg, l, +1, omega,
                                                   default_oscillator_grid(bg, omega), 2 * n + 3);
      double best = 1e300;
      for (double z : o.zeta_sq_values) best = std::min(best, rel(z, target));
      worst = std::max(worst, best);
      ++cases;
    }
  }
  v.pass = worst <= kOracleRelTol;
  v.detail = std::to_string(cases) + " states, max rel distance " + fmt("%.2e", worst);
  return v;
}

// ---- AC5 -------------------------------------------------------------------

Verdict degeneracy() {
  Verdict v;
  double worst_osc = 0.0, worst_level = 0.0, worst_bound = 0.0;
  int cases = 0;
  for (double c : {-1.0, 0.5, 2.0}) {
    const Background bg = make_background(c, 0.8, 0.3);
    const Background mirrored = make_background(-c, 0.8, 0.3);
    for (int l = -5; l <= 5; ++l) {
      for (int s : {-1, 1}) {
        for (int n = 0; n <= 3; ++n) {
          const QuantumNumbers qn{n, l, s};
          const QuantumNumbers partner = degeneracy_partner(qn);
          ++cases;
          worst_level = std::max(worst_level, rel(coulomb_level(bg, qn), coulomb_level(bg, partner)));
          if (coulomb_delta(bg, qn) < 0.0) {
            worst_bound = std::max(worst_bound, rel(coulomb_energy(bg, qn),
                                                    coulomb_energy(mirrored, partner)));
          }
          if (n == 0) continue;
          const auto a = solve_frequencies(bg, qn).roots;
          const auto b = solve_frequencies(bg, partner).roots;
          if (a.size() != b.size()) {
            v.pass = false;
            continue;
          }
          for (std::size_t i = 0; i < a.size(); ++i) {
            worst_osc = std::max(worst_osc, rel(oscillator_energy(bg, qn, a[i]),
                                                oscillator_energy(bg, partner, b[i])));
          }
        }
      }
    }
  }
  v.pass = v.pass && worst_osc <= kDegeneracyRelTol && worst_level <= kDegeneracyRelTol &&
           worst_bound <= kDegeneracyRelTol;
  v.detail = std::to_string(cases) + " pairs; oscillator " + fmt("%.2e", worst_osc) +
             ", Coulomb level " + fmt("%.2e", worst_level) + ", Coulomb bound (mirrored C) " +
             fmt("%.2e", worst_bound);
  return v;
}

// ---- AC6 -------------------------------------------------------------------

Verdict sign_symmetry() {
  Verdict v;
  double worst = 0.0;
  int sets = 0;
  for (double mass : {0.5, 1.0, 2.0}) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (int l = -3; l <= 3; ++l) {
        for (int s : {-1, 1}) {
          for (int n = 1; n <= 5; ++n) {
            const auto plus = solve_frequencies(make_background(c, mass), {n, l, s}).roots;
            const auto minus = solve_frequencies(make_background(-c, mass), {n, l, s}).roots;
            ++sets;
            if (plus.size() != minus.size()) {
              v.pass = false;
              continue;
            }
            for (std::size_t i = 0; i < plus.size(); ++i) {
              worst = std::max(worst, rel(plus[i], minus[i]));
            }
          }
        }
      }
    }
  }
  v.pass = v.pass && worst <= kSignRelTol;
  v.detail = std::to_string(sets) + " root sets, max rel diff " + fmt("%.2e", worst);
  return v;
}

// ---- AC7 -------------------------------------------------------------------

Verdict termination() {
  Verdict v;
  int kummer_cases = 0;
  bool kummer_ok = true;
  for (int n = 0; n <= 12; ++n) {
    for (int nu = 0; nu <= 6; ++nu) {
      const auto c = kummer_coeffs(-n, 2.0 * nu + 1.0, n + 40);
      const double zero = 0.0;
      for (std::size_t j = n + 1; j < c.size(); ++j) {
        kummer_ok = kummer_ok && std::memcmp(&c[j], &zero, sizeof zero) == 0;
      }
      kummer_ok = kummer_ok && c[n] != 0.0;
      ++kummer_cases;
    }
  }
  double worst = 0.0;
  int heun_cases = 0;
  for (double c : {-1.0, 0.5, 2.0}) {
    const Background bg = make_background(c, 1.3);
    for (int l = -4; l <= 4; ++l) {
      for (int s : {-1, 1}) {
        for (int n = 1; n <= 6; ++n) {
          const QuantumNumbers qn{n, l, s};
          for (double omega : solve_frequencies(bg, qn).roots) {
            const double dp = coulomb_delta(bg, qn) / std::sqrt(bg.mass * omega);
            const auto a = heun_coeffs(alpha_bar(qn), 2.0 * n, dp, n + 2).coeffs;
            double peak = 0.0;
            for (int j = 0; j <= n; ++j) peak = std::max(peak, std::abs(a[j]));
            worst = std::max({worst, std::abs(a[n + 1]) / peak, std::abs(a[n + 2]) / peak});
            ++heun_cases;
          }
        }
      }
    }
  }
  v.pass = kummer_ok && worst < kHeunTailRelTol;
  v.detail = std::to_string(kummer_cases) + " Kummer series " +
             (kummer_ok ? "bitwise zero tail" : "NONZERO tail") + "; " +
             std::to_string(heun_cases) + " Heun roots, max tail/peak " + fmt("%.2e", worst);
  return v;
}

// ---- AC8 -------------------------------------------------------------------

// Residual of the default (a_0 = 1) samples on the CLI sampling grid:
// rows points, rho_i = i rho_max / rows.
double coulomb_cli_residual(const Background& bg, const QuantumNumbers& qn) {
  const double tau = coulomb_state(bg, qn).tau;
  const auto rho = sample_grid(30.0 / tau, kResidualRows);
  return residual_check(rho, coulomb_wavefunction(bg, qn, rho), coulomb_equation(bg, qn));
}

double oscillator_cli_residual(const Background& bg, const QuantumNumbers& qn, double omega) {
  const auto rho = sample_grid(10.0 / std::sqrt(bg.mass * omega), kResidualRows);
  return residual_check(rho, oscillator_wavefunction(bg, qn, omega, rho),
                        oscillator_equation(bg, qn, omega));
}

// Smallest observed order over a doubling sequence on a fixed interval.
template <class Sampler>
double observed_order(double a, double b, std::initializer_list<int> points,
                      const RadialEquation& eq, Sampler sample) {
  double order = 1e300, prev = 0.0;
  for (int n : points) {
    const auto rho = uniform(a, b, n);
    const double r = residual_check(rho, sample(rho), eq);
    if (prev > 0.0) order = std::min(order, std::log2(prev / r));
    prev = r;
  }
  return order;
}

Verdict residuals() {
  Verdict v;
  double worst_residual = 0.0, outside_scope = 0.0, worst_order = 1e300;
  int states = 0;
  // Threshold scope: Coulomb |delta| = 1 channels with n <= 2, oscillator |C| = 1 with
  // |nu| <= 1. Every other state still enters the order check and the reported maximum.
  for (double c : {-1.0, -2.0}) {
    const Background bg = make_background(c);
    for (int n = 0; n <= 3; ++n) {
      for (int l = 0; l <= 2; ++l) {
        for (int s : {-1, 1}) {
          const QuantumNumbers qn{n, l, s};
          const double r = coulomb_cli_residual(bg, qn);
          if (c == -1.0 && l == 0 && n <= 2) {
            worst_residual = std::max(worst_residual, r);
            ++states;
          } else {
            outside_scope = std::max(outside_scope, r);
          }
          const double tau = coulomb_state(bg, qn).tau;
          worst_order = std::min(
              worst_order, observed_order(1.0 / tau, 30.0 / tau, {1000, 2000, 4000},
                                          coulomb_equation(bg, qn), [&](const auto& rho) {
                                            return coulomb_wavefunction(bg, qn, rho,
                                                                        Normalization::l2);
                                          }));
        }
      }
    }
  }
  for (double c : {-1.0, 1.0, 2.0}) {
    const Background bg = make_background(c);
    for (int n = 1; n <= 3; ++n) {
      for (int l = 0; l <= 2; ++l) {
        const QuantumNumbers qn{n, l, +1};
        for (double omega : solve_frequencies(bg, qn).roots) {
          const double r = oscillator_cli_residual(bg, qn, omega);
          if (std::abs(c) == 1.0 && l <= 1) {
            worst_residual = std::max(worst_residual, r);
            ++states;
          } else {
            outside_scope = std::max(outside_scope, r);
          }
          const double sq = std::sqrt(bg.mass * omega);
          worst_order = std::min(
              worst_order, observed_order(0.5 / sq, 6.0 / sq, {250, 500, 1000},
                                          oscillator_equation(bg, qn, omega), [&](const auto& rho) {
                                            return oscillator_wavefunction(bg, qn, omega, rho,
                                                                           Normalization::l2);
                                          }));
        }
      }
    }
  }
  v.pass = worst_residual < kResidualTol && worst_order >= kMinResidualOrder;
  v.detail = std::to_string(states) + " states, max residual " + fmt("%.2e", worst_residual) +
             " at 1000 rows (outside scope: " + fmt("%.2e", outside_scope) +
             "), min observed order " + fmt("%.2f", worst_order);
  return v;
}

// ---- AC9 -------------------------------------------------------------------

Verdict zero_delta() {
  Verdict v;
  const Background bg = make_background(0.0);
  int repulsive = 0, cases = 0;
  std::size_t bound = 0;
  for (int l = -2; l <= 2; ++l) {
    for (int s : {-1, 1}) {
      for (int n = 0; n <= 2; ++n) {
        ++cases;
        try {
          coulomb_energy(bg, {n, l, s});
        } catch (const RepulsiveBranch&) {
          ++repulsive;
        }
      }
      bound += count_bound_states(bg, l, s, default_coulomb_grid(bg, l, s, 3));
    }
  }
  double worst = 0.0;
  for (double mass : {0.5, 1.0}) {
    for (double omega : {0.7, 2.0}) {
      const Background osc = make_background(0.0, mass);
      for (int l = 0; l <= 2; ++l) {
        const double nu = std::abs(effective_nu({0, l, +1}));
        const OracleResult o =
            eigensolve_oscillator(osc, l, +1, omega, default_oscillator_grid(osc, omega), 3);
        for (int j = 0; j <= 2; ++j) {
          worst = std::max(worst,
                           rel(o.zeta_sq_values[j], 2.0 * mass * omega * (2.0 * j + nu + 1.0)));
        }
      }
    }
  }
  v.pass = repulsive == cases && bound == 0 && worst <= kZeroDeltaRelTol;
  v.detail = "Coulomb: " + std::to_string(repulsive) + "/" + std::to_string(cases) +
             " RepulsiveBranch, " + std::to_string(bound) +
             " oracle bound states; oscillator max rel err " + fmt("%.2e", worst);
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "frequency quantization n=1", [] { return frequency_sweep(1); }, kRootSweepSeconds},
      {2, "frequency quantization n=2", [] { return frequency_sweep(2); }, kRootSweepSeconds},
      {3, "Coulomb oracle agreement", coulomb_agreement, kOracleSeconds},
      {4, "oscillator oracle containment", oscillator_containment, kOracleSeconds},
      {5, "degeneracy invariance", degeneracy},
      {6, "sign symmetry", sign_symmetry},
      {7, "series termination", termination},
      {8, "residual certification", residuals},
      {9, "delta=0 limits", zero_delta},
      {10, "convergence order", convergence_ratio},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds >= c.time_limit) {
      v.pass = false;
      v.detail += " (time limit exceeded)";
    }
    if (!v.pass) ++failures;
    std::printf("AC%-2d %s  %s: %s [%.3f s]\n", c.id, v.pass ? "PASS" : "FAIL", c.title.c_str(),
                v.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
