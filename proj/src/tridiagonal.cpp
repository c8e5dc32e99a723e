#include "lsv/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsv/errors.hpp"

namespace lsv {
namespace {

double pivot_floor(const std::vector<double>& off) {
  double e2 = 1.0;
  for (double e : off) e2 = std::max(e2, e * e);
  return std::numeric_limits<double>::min() * e2;
}

}  // namespace

std::size_t SymTridiagonal::count_below(double x) const noexcept {
  const double pivmin = pivot_floor(off);
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    q = diag[i] - x - (i > 0 ? off[i - 1] * off[i - 1] / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> SymTridiagonal::gershgorin() const noexcept {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < diag.size()) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

std::vector<double> SymTridiagonal::lowest_eigenvalues(std::size_t k) const {
  if (off.size() + 1 != diag.size()) throw InvalidInput("tridiagonal: inconsistent sizes");
  if (k > diag.size()) throw InvalidInput("tridiagonal: more eigenvalues requested than rows");
  const auto [lo, hi] = gershgorin();
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivmin = pivot_floor(off);

  std::vector<double> out;
  out.reserve(k);
  double floor = lo - eps * std::abs(lo) - pivmin;
  for (std::size_t i = 0; i < k; ++i) {
    // invariant: count_below(a) <= i < count_below(b)
    double a = floor;
    double b = hi + eps * std::abs(hi) + pivmin;
    for (int it = 0; it < 256; ++it) {
      if (b - a <= 2.0 * eps * std::max(std::abs(a), std::abs(b)) + pivmin) break;
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(mid) > i) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double lambda = 0.5 * (a + b);
    out.push_back(lambda);
    floor = a;
  }
  return out;
}

}  // namespace lsv
