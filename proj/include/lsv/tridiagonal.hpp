#pragma once

#include <span>
#include <utility>
#include <vector>

namespace lsv {

/// Real symmetric tridiagonal matrix: `diag` of length n, `off` of length n - 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }

  /// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
  std::size_t count_below(double x) const noexcept;

  /// Gershgorin interval containing the whole spectrum.
  std::pair<double, double> gershgorin() const noexcept;

  /// The k lowest eigenvalues in ascending order, each bracketed by bisection
  /// on the Sturm count down to a few ulp.
  std::vector<double> lowest_eigenvalues(std::size_t k) const;
};

}  // namespace lsv
