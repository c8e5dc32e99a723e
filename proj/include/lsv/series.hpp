#pragma once

#include <span>
#include <vector>

namespace lsv {

/// Power-series part of a radial solution
///   G(rho) = prefactor(x) * x^leading_exponent * sum_j coeffs[j] x^j,  x = scale * rho,
/// where prefactor is exp(-x/2) (Kummer form) or exp(-x^2/2) (gaussian, Heun form).
struct SeriesSolution {
  std::vector<double> coeffs;
  double leading_exponent = 0.0;
  bool gaussian = false;
  double scale = 1.0;

  /// Horner evaluation of sum_j coeffs[j] x^j.
  double polynomial(double x) const noexcept;
  /// Full radial function at physical radius rho.
  double evaluate(double rho) const noexcept;
  /// Index of the last non-zero coefficient, or -1 if all vanish.
  int degree() const noexcept;
};

enum class Normalization { none, l2 };

/// Composite Simpson rule on a uniform grid. An even sample count closes
/// with the 3/8 rule on the last four points. Throws NonUniformGrid or
/// InvalidInput (fewer than 3 samples).
double simpson(std::span<const double> x, std::span<const double> y);

/// Scales `values` in place so that int |G|^2 rho drho = 1 on the grid.
void normalize_l2(std::span<const double> rho, std::span<double> values);

/// Throws NonUniformGrid unless the samples are equally spaced
/// (relative tolerance 1e-9 on the spacing).
void require_uniform(std::span<const double> x);

}  // namespace lsv
