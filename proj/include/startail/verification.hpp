#ifndef STARTAIL_VERIFICATION_HPP
#define STARTAIL_VERIFICATION_HPP

// Invariant suites run by `startail verify`. Each check compares a library
// routine against a brute-force or closed-form reference computed here.

#include <string>
#include <vector>

namespace startail {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GridMinimum {
  double value = 0.0;
  double argmin = 0.0;
};

/// Minimum of phi(eps - delta) + psi_r(delta) c^{1/r - 1} over the uniform
/// grid delta = eps k / points, k = 0..points, optionally restricted to
/// delta >= from.
GridMinimum variational_grid_minimum(double c, double eps, int r, int points = 1000000,
                                     double from = 0.0);

/// Compares solve() with the grid minimum: value within value_tol and the
/// minimizer set consistent with the grid within delta_tol.
CheckResult check_minimizer_against_grid(double c, double eps, int r, int points = 1000000,
                                         double value_tol = 1e-6, double delta_tol = 1e-4);

std::vector<CheckResult> verify_convex_sum();
std::vector<CheckResult> verify_bounds();
std::vector<CheckResult> verify_variational(int grid_points = 1000000);
std::vector<CheckResult> verify_enumeration();
std::vector<CheckResult> verify_negative_association();

/// Suite by name: convex_sum, bounds, variational, enumeration, na or all.
/// Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace startail

#endif  // STARTAIL_VERIFICATION_HPP
