#include "startail/variational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "startail/numerics.hpp"
#include "startail/rate_core.hpp"

namespace startail {

namespace {

void check_eps_r(double eps, int r) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("invalid eps: must be > 0");
  if (r < 2) throw std::invalid_argument("invalid r: must be >= 2");
}

// Touching function: f_alpha'(delta) <= 0 exactly when alpha <= touch(delta).
double touch(double delta, double eps, int r) {
  if (delta <= 0.0) return 0.0;
  return r * std::pow(delta, 1.0 - 1.0 / r) * std::log1p(eps - delta);
}

}  // namespace

double f_alpha(double alpha, double delta, double eps, int r) {
  if (delta <= 0.0) return phi(eps);
  return phi(eps - delta) + alpha * std::pow(delta, 1.0 / r);
}

double f_alpha_prime(double alpha, double delta, double eps, int r) {
  if (!(delta > 0.0)) throw std::domain_error("f_alpha_prime: delta must be > 0");
  return alpha / (r * std::pow(delta, 1.0 - 1.0 / r)) - std::log1p(eps - delta);
}

double alpha0_argmax(double eps, int r, const VariationalTolerances& tol) {
  check_eps_r(eps, r);
  return golden_section_max([&](double d) { return touch(d, eps, r); }, 0.0, eps,
                            tol.golden_xtol)
      .x;
}

double alpha0(double eps, int r, const VariationalTolerances& tol) {
  return touch(alpha0_argmax(eps, r, tol), eps, r);
}

std::optional<StationaryPoints> stationary_points(double alpha, double eps, int r,
                                                  const VariationalTolerances& tol) {
  check_eps_r(eps, r);
  if (!(alpha > 0.0)) throw std::invalid_argument("invalid alpha: must be > 0");
  const double peak = alpha0_argmax(eps, r, tol);
  const double a0 = touch(peak, eps, r);
  if (alpha > a0) return std::nullopt;
  if (alpha == a0) return StationaryPoints{peak, peak};

  // sign(alpha - touch) == sign(f_alpha'), without the delta^{1/r - 1} blow-up.
  auto sign_fn = [&](double d) { return alpha - touch(d, eps, r); };
  StationaryPoints sp;
  sp.delta_minus = bisect(sign_fn, 0.0, peak, tol.root_xtol);
  sp.delta_plus = bisect(sign_fn, peak, eps, tol.root_xtol);
  return sp;
}

double big_f(double alpha, double eps, int r, const VariationalTolerances& tol) {
  const auto sp = stationary_points(alpha, eps, r, tol);
  if (!sp) throw std::domain_error("big_f: alpha exceeds alpha0(eps)");
  return f_alpha(alpha, sp->delta_plus, eps, r);
}

double alpha1(double eps, int r, const VariationalTolerances& tol) {
  check_eps_r(eps, r);
  const double a0 = alpha0(eps, r, tol);
  const double target = phi(eps);
  // F(alpha) <= alpha eps^{1/r}, so this lower end has F < phi(eps).
  const double lo = 0.5 * std::min(a0, target / std::pow(eps, 1.0 / r));
  auto gap = [&](double a) { return big_f(a, eps, r, tol) - target; };
  return bisect(gap, lo, a0, 0.0, tol.alpha1_rtol);
}

double alpha_of_c(double c, int r) {
  if (!(c > 0.0)) throw std::invalid_argument("invalid c: must be > 0");
  return std::pow(factorial(r), 1.0 / r) * std::pow(c, 1.0 / r - 1.0) / r;
}

double c_of_alpha(double alpha, int r) {
  if (!(alpha > 0.0)) throw std::invalid_argument("invalid alpha: must be > 0");
  const double base = alpha * r / std::pow(factorial(r), 1.0 / r);
  return std::pow(base, 1.0 / (1.0 / r - 1.0));
}

VariationalSolution solve(double c, double eps, int r, const VariationalTolerances& tol) {
  check_eps_r(eps, r);
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("invalid c: must be >= 0");
  VariationalSolution sol;
  sol.c = c;
  sol.eps = eps;
  sol.r = r;
  const double at_zero = phi(eps);
  sol.value = at_zero;
  sol.minimizers = {0.0};
  if (c == 0.0) {
    sol.alpha = kInf;
    return sol;
  }
  sol.alpha = alpha_of_c(c, r);
  const auto sp = stationary_points(sol.alpha, eps, r, tol);
  if (!sp) return sol;
  const double F = f_alpha(sol.alpha, sp->delta_plus, eps, r);
  if (std::fabs(F - at_zero) <= tol.tie_rtol * at_zero) {
    sol.value = std::min(F, at_zero);
    sol.minimizers = {0.0, sp->delta_plus};
  } else if (F < at_zero) {
    sol.value = F;
    sol.minimizers = {sp->delta_plus};
  }
  return sol;
}

double c_crit(double eps, int r, const VariationalTolerances& tol) {
  return c_of_alpha(alpha1(eps, r, tol), r);
}

double delta_star(double c, double eps, int r, const VariationalTolerances& tol) {
  if (!(c > c_crit(eps, r, tol))) {
    throw std::domain_error("delta_star: c must exceed c_crit (the minimizer is 0 there)");
  }
  return stationary_points(alpha_of_c(c, r), eps, r, tol)->delta_plus;
}

CriticalConstants critical_constants(double eps, int r, const VariationalTolerances& tol) {
  CriticalConstants cc;
  cc.eps = eps;
  cc.r = r;
  cc.alpha0 = alpha0(eps, r, tol);
  cc.alpha1 = alpha1(eps, r, tol);
  cc.c_crit = c_of_alpha(cc.alpha1, r);
  return cc;
}

void write_curve_csv(std::ostream& out, double alpha, double eps, int r, int points) {
  check_eps_r(eps, r);
  if (points < 1) throw std::invalid_argument("invalid points: must be >= 1");
  out << "delta,f,g,h\n";
  char buf[128];
  for (int i = 1; i <= points; ++i) {
    const double d = eps * i / points;
    const double g = alpha / (r * std::pow(d, 1.0 - 1.0 / r));
    const double h = std::log1p(eps - d);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", d, f_alpha(alpha, d, eps, r), g, h);
    out << buf;
  }
}

}  // namespace startail
