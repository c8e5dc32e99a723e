#include "lsv/series.hpp"

#include <cmath>

#include "lsv/errors.hpp"

namespace lsv {

double SeriesSolution::polynomial(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double SeriesSolution::evaluate(double rho) const noexcept {
  const double x = scale * rho;
  const double envelope = gaussian ? std::exp(-0.5 * x * x) : std::exp(-0.5 * x);
  return envelope * std::pow(x, leading_exponent) * polynomial(x);
}

int SeriesSolution::degree() const noexcept {
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    if (coeffs[j] != 0.0) return j;
  }
  return -1;
}

void require_uniform(std::span<const double> x) {
  if (x.size() < 2) return;
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (!(h > 0.0)) throw NonUniformGrid("grid must be strictly increasing");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-9 * h) {
      throw NonUniformGrid("grid spacing is not uniform at index " + std::to_string(i));
    }
  }
}

double simpson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidInput("simpson: size mismatch");
  const std::size_t n = x.size();
  if (n < 3) throw InvalidInput("simpson: need at least 3 samples");
  require_uniform(x);
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);

  // Simpson over the first `m` points (m odd), 3/8 rule over the remaining tail.
  const std::size_t m = (n % 2 == 1) ? n : n - 3;
  double sum = 0.0;
  if (m >= 3) {
    double s = y[0] + y[m - 1];
    for (std::size_t i = 1; i + 1 < m; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * y[i];
    sum += s * h / 3.0;
  }
  if (m != n) {
    const std::size_t i = n - 4;
    sum += 3.0 * h / 8.0 * (y[i] + 3.0 * y[i + 1] + 3.0 * y[i + 2] + y[i + 3]);
  }
  return sum;
}

void normalize_l2(std::span<const double> rho, std::span<double> values) {
  std::vector<double> density(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) density[i] = values[i] * values[i] * rho[i];
  const double norm = simpson(rho, density);
  if (!(norm > 0.0)) throw InvalidInput("cannot normalise a vanishing wavefunction");
  const double scale = 1.0 / std::sqrt(norm);
  for (double& v : values) v *= scale;
}

}  // namespace lsv
