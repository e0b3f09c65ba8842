#ifndef STARTAIL_VARIATIONAL_HPP
#define STARTAIL_VARIATIONAL_HPP

// The one-dimensional problem
//
//   I_r(c, eps) = min_{delta in [0, eps]} phi(eps - delta) + psi_r(delta) c^{1/r - 1}
//
// and the structure of its minimizers. The solver works in the tilt variable
// alpha = (r!)^{1/r} c^{1/r - 1} / r, where the objective reads
// f_alpha(delta) = phi(eps - delta) + alpha delta^{1/r}. Its derivative is
// g_alpha(delta) - h(delta) with g_alpha(delta) = alpha / (r delta^{1 - 1/r})
// strictly convex and h(delta) = log(1 + eps - delta) strictly concave, so it
// has at most two zeros delta_- <= delta_+. Only delta_+ can be a minimizer;
// the other candidate is the endpoint delta = 0.

#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace startail {

struct VariationalTolerances {
  double golden_xtol = 1e-12;   ///< location of the alpha0 maximizer
  double root_xtol = 1e-13;     ///< delta_-, delta_+
  double alpha1_rtol = 1e-14;   ///< relative bracket width for alpha1
  double tie_rtol = 1e-9;       ///< |F - phi(eps)| <= tie_rtol phi(eps) counts as a tie
};

struct VariationalSolution {
  double c = 0.0;
  double eps = 0.0;
  int r = 2;
  double value = 0.0;                ///< I_r(c, eps)
  std::vector<double> minimizers;    ///< sorted; {0}, {delta*} or {0, delta*}
  double alpha = 0.0;                ///< +inf when c == 0

  bool operator==(const VariationalSolution&) const = default;
};

struct CriticalConstants {
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double c_crit = 0.0;
  double eps = 0.0;
  int r = 2;

  bool operator==(const CriticalConstants&) const = default;
};

struct StationaryPoints {
  double delta_minus = 0.0;
  double delta_plus = 0.0;

  bool operator==(const StationaryPoints&) const = default;
};

double f_alpha(double alpha, double delta, double eps, int r);

/// Derivative in delta. Throws std::domain_error for delta <= 0.
double f_alpha_prime(double alpha, double delta, double eps, int r);

/// alpha0(eps) = max_{delta in [0, eps]} r delta^{1 - 1/r} log(1 + eps - delta).
double alpha0(double eps, int r, const VariationalTolerances& tol = {});

/// Maximizer of the alpha0 objective; this is where delta_- and delta_+ meet.
double alpha0_argmax(double eps, int r, const VariationalTolerances& tol = {});

/// The two zeros of f_alpha', or nullopt when alpha > alpha0(eps).
std::optional<StationaryPoints> stationary_points(double alpha, double eps, int r,
                                                  const VariationalTolerances& tol = {});

/// F(alpha, eps) = f_alpha(delta_+). Requires 0 < alpha <= alpha0(eps).
double big_f(double alpha, double eps, int r, const VariationalTolerances& tol = {});

/// Unique root of F(., eps) = phi(eps) in (0, alpha0(eps)).
double alpha1(double eps, int r, const VariationalTolerances& tol = {});

double alpha_of_c(double c, int r);
double c_of_alpha(double alpha, int r);

VariationalSolution solve(double c, double eps, int r, const VariationalTolerances& tol = {});

/// delta*(c) = delta_+(alpha(c), eps). Throws std::domain_error for c <= c_crit.
double delta_star(double c, double eps, int r, const VariationalTolerances& tol = {});

/// c_{r,eps} = c_of_alpha(alpha1(eps)).
double c_crit(double eps, int r, const VariationalTolerances& tol = {});

CriticalConstants critical_constants(double eps, int r, const VariationalTolerances& tol = {});

/// Writes "delta,f,g,h" rows on a uniform grid of `points` values in (0, eps].
void write_curve_csv(std::ostream& out, double alpha, double eps, int r, int points = 1000);

}  // namespace startail

#endif  // STARTAIL_VARIATIONAL_HPP
