#include "startail/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace startail {

double log_sum_exp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  if (m == kInf) return kInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

std::uint64_t binom_exact(std::int64_t n, std::int64_t k) {
  __extension__ using u128 = unsigned __int128;
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binom_exact: result exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

double log_factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  if (n <= kExactCombinatoricsLimit) return std::log(factorial(static_cast<int>(n)));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  if (n > kExactCombinatoricsLimit) return std::exp(std::lgamma(n + 1.0));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return static_cast<double>(f);
}

double log_binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return kNegInf;
  if (n <= kExactCombinatoricsLimit) {
    return std::log(static_cast<double>(binom_exact(n, k)));
  }
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binom_real(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  try {
    const std::uint64_t c = binom_exact(n, k);
    if (c <= (std::uint64_t{1} << 53)) return static_cast<double>(c);
  } catch (const std::overflow_error&) {
  }
  return std::exp(log_binom(n, k));
}

namespace {
constexpr double kInvPhi = 0.61803398874989484820;  // (sqrt(5) - 1) / 2
}

ExtremumResult golden_section_max(const std::function<double(double)>& f,
                                  double lo, double hi, double xtol) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 500 && (b - a) > xtol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  ExtremumResult best{c, fc};
  if (fd > best.value) best = {d, fd};
  // Endpoints are candidates too: the bracket may have collapsed onto one.
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

ExtremumResult golden_section_min(const std::function<double(double)>& f,
                                  double lo, double hi, double xtol) {
  auto r = golden_section_max([&f](double x) { return -f(x); }, lo, hi, xtol);
  return {r.x, -r.value};
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol_abs, double xtol_rel) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    throw std::domain_error("bisect: endpoints do not bracket a root");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width <= std::max(xtol_abs, xtol_rel * std::fabs(mid))) break;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace startail
