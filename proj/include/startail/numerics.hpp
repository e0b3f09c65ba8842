#ifndef STARTAIL_NUMERICS_HPP
#define STARTAIL_NUMERICS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>

namespace startail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest argument for which factorials and binomials are computed with
/// exact integer arithmetic. Above it, log-gamma is used.
inline constexpr int kExactCombinatoricsLimit = 20;

/// log(exp(a) + exp(b)), safe for -inf arguments.
inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

/// log(sum_i exp(x_i)); -inf for an empty span or all -inf entries.
double log_sum_exp(std::span<const double> xs);

/// Exact binomial coefficient; throws std::overflow_error if it does not fit.
std::uint64_t binom_exact(std::int64_t n, std::int64_t k);

/// C(n, k) as a double. Exact up to 2^53, log-gamma based beyond the
/// integer range.
double binom_real(std::int64_t n, std::int64_t k);

/// log C(n, k); -inf when k < 0 or k > n.
double log_binom(std::int64_t n, std::int64_t k);

/// log n!
double log_factorial(std::int64_t n);

/// n! as a double (exact for n <= 20).
double factorial(int n);

/// Fractional part x - floor(x).
inline double frac(double x) { return x - std::floor(x); }

/// True when x lies within tol of an integer.
inline bool near_integer(double x, double tol = 1e-9) {
  return std::fabs(x - std::nearbyint(x)) <= tol;
}

struct ExtremumResult {
  double x;
  double value;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
ExtremumResult golden_section_max(const std::function<double(double)>& f,
                                  double lo, double hi, double xtol);

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
ExtremumResult golden_section_min(const std::function<double(double)>& f,
                                  double lo, double hi, double xtol);

/// Bisection for a sign change of f on [lo, hi]. The endpoint signs must
/// differ (zero counts as either sign). Stops when the bracket is narrower
/// than max(xtol_abs, xtol_rel * |x|) or after 400 halvings.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol_abs, double xtol_rel = 0.0);

}  // namespace startail

#endif  // STARTAIL_NUMERICS_HPP
