#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "startail/rate_core.hpp"
#include "startail/variational.hpp"

using namespace startail;

namespace {

double phi_ref(double e) { return (1 + e) * std::log1p(e) - e; }

double objective(double c, double eps, int r, double d) {
  double fact = 1;
  for (int i = 2; i <= r; ++i) fact *= i;
  return phi_ref(eps - d) + std::pow(fact * d, 1.0 / r) / r * std::pow(c, 1.0 / r - 1.0);
}

struct Grid {
  double value, argmin;
};

Grid grid_min(double c, double eps, int r, int points, double from = 0.0) {
  Grid g{INFINITY, 0.0};
  for (int k = 0; k <= points; ++k) {
    const double d = eps * k / points;
    if (d < from) continue;
    const double v = objective(c, eps, r, d);
    if (v < g.value) g = {v, d};
  }
  return g;
}

double touch_max_grid(double eps, int r, int points) {
  double best = 0;
  for (int k = 0; k <= points; ++k) {
    const double d = eps * k / points;
    best = std::max(best, r * std::pow(d, 1.0 - 1.0 / r) * std::log1p(eps - d));
  }
  return best;
}

}  // namespace

TEST_CASE("f_alpha values") {
  CHECK(f_alpha(0.7, 1.5, 1.5, 2) == doctest::Approx(0.7 * std::sqrt(1.5)).epsilon(1e-15));
  CHECK(f_alpha(0.7, 1e-14, 1.5, 2) == doctest::Approx(phi(1.5)).epsilon(1e-6));
  CHECK(f_alpha(0.7, 0.0, 1.5, 2) == phi(1.5));
  CHECK(f_alpha(1.0, 1.0, 1.0, 2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("f_alpha_prime: endpoint sign, blow-up and finite differences") {
  const double a = 0.4, eps = 1.2;
  for (int r : {2, 3, 4}) {
    CHECK(f_alpha_prime(a, eps, eps, r) == doctest::Approx(a / (r * std::pow(eps, 1.0 - 1.0 / r))).epsilon(1e-15));
    CHECK(f_alpha_prime(a, eps, eps, r) > 0.0);
    CHECK(f_alpha_prime(a, 1e-12, eps, r) > 1e3);
    CHECK_THROWS_AS(f_alpha_prime(a, 0.0, eps, r), std::domain_error);

    for (double d = 0.1; d < 1.1; d += 0.1) {
      const double h1 = 1e-3, h2 = 5e-4;
      auto fd = [&](double h) { return (f_alpha(a, d + h, eps, r) - f_alpha(a, d - h, eps, r)) / (2 * h); };
      const double e1 = std::fabs(fd(h1) - f_alpha_prime(a, d, eps, r));
      const double e2 = std::fabs(fd(h2) - f_alpha_prime(a, d, eps, r));
      CHECK(e1 < 1e-4);
      // Halving h cuts the error by about four.
      if (e1 > 1e-10) CHECK(e2 < 0.35 * e1);
    }
    // Strict convexity of f': positive second differences.
    const double step = 0.01;
    for (double d = 0.02; d + step < eps; d += step) {
      const double dd = f_alpha_prime(a, d - step, eps, r) - 2 * f_alpha_prime(a, d, eps, r) +
                        f_alpha_prime(a, d + step, eps, r);
      CHECK(dd > 0.0);
    }
  }
}

TEST_CASE("alpha0") {
  CHECK(alpha0(1e-4, 2) < 1e-2);
  CHECK(alpha0(1.0, 2) == doctest::Approx(touch_max_grid(1.0, 2, 1000000)).epsilon(1e-6));
  CHECK(alpha0(1.0, 2) >= touch_max_grid(1.0, 2, 1000000) - 1e-15);
  CHECK(alpha0(2.0, 2) > alpha0(1.0, 2));
}

TEST_CASE("stationary points") {
  const double eps = 1.0;
  for (int r : {2, 3}) {
    const double a0 = alpha0(eps, r);
    CHECK_FALSE(stationary_points(a0 * 1.001, eps, r).has_value());
    const auto at = stationary_points(a0, eps, r);
    REQUIRE(at.has_value());
    CHECK(std::fabs(at->delta_plus - at->delta_minus) < 1e-6);
    const auto near = stationary_points(a0 * (1 - 1e-12), eps, r);
    REQUIRE(near.has_value());
    CHECK(std::fabs(near->delta_plus - near->delta_minus) < 1e-4);

    const auto small = stationary_points(1e-6, eps, r);
    REQUIRE(small.has_value());
    CHECK(eps - small->delta_plus < 1e-3);

    const auto mid = stationary_points(0.5 * a0, eps, r);
    REQUIRE(mid.has_value());
    CHECK(0.0 < mid->delta_minus);
    CHECK(mid->delta_minus < mid->delta_plus);
    CHECK(mid->delta_plus < eps);
    CHECK(std::fabs(f_alpha_prime(0.5 * a0, mid->delta_plus, eps, r)) < 1e-9);
    CHECK(std::fabs(f_alpha_prime(0.5 * a0, mid->delta_minus, eps, r)) < 1e-6);
  }
}

TEST_CASE("big_f") {
  const double eps = 1.0;
  for (int r : {2, 3}) {
    const double a0 = alpha0(eps, r);
    const double a = 1e-4;
    CHECK(big_f(a, eps, r) <= a * std::pow(eps, 1.0 / r) + 1e-15);
    CHECK(big_f(a0, eps, r) > phi(eps));
    double prev = -1;
    for (int k = 1; k <= 100; ++k) {
      const double v = big_f(a0 * k / 100.0, eps, r);
      CHECK(v > prev);
      prev = v;
    }
    CHECK(big_f(0.5 * a0, 2.0, r) > big_f(0.5 * a0, 1.0, r));
    CHECK_THROWS_AS(big_f(a0 * 1.01, eps, r), std::domain_error);
  }
}

TEST_CASE("alpha1") {
  for (int r : {2, 3}) {
    for (double eps : {0.5, 1.0, 2.0}) {
      const double a1 = alpha1(eps, r);
      CHECK(a1 > 0.0);
      CHECK(a1 < alpha0(eps, r));
      CHECK(big_f(a1 * (1 - 1e-6), eps, r) < phi(eps));
      CHECK(big_f(a1 * (1 + 1e-6), eps, r) > phi(eps));
    }
  }
  CHECK(alpha1(2.0, 2) > alpha1(1.0, 2));
}

TEST_CASE("alpha and c change of variable") {
  CHECK(alpha_of_c(1.0, 2) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
  for (int r : {2, 3, 4}) {
    double prev = INFINITY;
    for (double lc = -6; lc <= 6; lc += 0.5) {
      const double c = std::pow(10.0, lc);
      const double a = alpha_of_c(c, r);
      CHECK(c_of_alpha(a, r) == doctest::Approx(c).epsilon(1e-12));
      CHECK(a < prev);
      prev = a;
    }
  }
}

TEST_CASE("solve: minimizer cases and large-c asymptotics") {
  const double eps = 1.0;
  const int r = 2;
  const auto zero = solve(0.0, eps, r);
  CHECK(zero.value == phi(eps));
  REQUIRE(zero.minimizers.size() == 1);
  CHECK(zero.minimizers[0] == 0.0);

  const double cc = c_crit(eps, r);
  const auto below = solve(cc * 0.999, eps, r);
  REQUIRE(below.minimizers.size() == 1);
  CHECK(below.minimizers[0] == 0.0);
  const auto at = solve(cc, eps, r);
  CHECK(at.minimizers.size() == 2);
  const auto above = solve(cc * 1.001, eps, r);
  REQUIRE(above.minimizers.size() == 1);
  CHECK(above.minimizers[0] > 0.0);

  // Every reported minimizer attains the value.
  for (double f : {0.5, 1.0, 1.5, 20.0}) {
    const auto s = solve(f * cc, eps, r);
    for (double m : s.minimizers) CHECK(objective(f * cc, eps, r, m) == doctest::Approx(s.value).epsilon(1e-9));
  }

  double prev = 0;
  double crossing = -1;
  for (double lc = std::log10(cc); lc <= std::log10(cc) + 8; lc += 0.25) {
    const double c = std::pow(10.0, lc);
    const double ratio = solve(c, eps, r).value / (psi(r, eps) * std::pow(c, 1.0 / r - 1.0));
    CHECK(ratio >= prev);
    CHECK(ratio <= 1.0 + 1e-12);
    if (crossing < 0 && ratio > 0.99) crossing = c;
    prev = ratio;
  }
  CHECK(prev > 0.99);
  MESSAGE("ratio first exceeds 0.99 at c = " << crossing);
}

TEST_CASE("delta_star") {
  const double eps = 1.0;
  for (int r : {2, 3}) {
    const double cc = c_crit(eps, r);
    double prev = 0;
    for (double lc = std::log10(1.01); lc <= 6; lc += 0.5) {
      const double c = cc * std::pow(10.0, lc);
      const double d = delta_star(c, eps, r);
      CHECK(d > prev);
      CHECK(d > 0.0);
      CHECK(d < eps);
      prev = d;
    }
    const double c = 5 * cc;
    CHECK(std::fabs(grid_min(c, eps, r, 1000000).argmin - delta_star(c, eps, r)) <= 1e-4);
    CHECK_THROWS_AS(delta_star(cc * 0.5, eps, r), std::domain_error);
  }
}

TEST_CASE("c_crit") {
  CHECK(c_crit(2.0, 2) < c_crit(1.0, 2));
  const double eps = 1.0;
  const double cc = c_crit(eps, 2);
  CHECK(solve(cc * 0.99, eps, 2).value == phi(eps));
  CHECK(solve(cc * 1.01, eps, 2).value < phi(eps));
  CHECK(grid_min(cc * 1.01, eps, 2, 1000000).value < phi(eps));
  CHECK(grid_min(cc * 0.99, eps, 2, 1000000).value == doctest::Approx(phi(eps)).epsilon(1e-15));

  for (int r : {2, 3, 4}) {
    double pa = -1, pc = INFINITY;
    for (int k = 1; k <= 15; ++k) {
      const auto cons = critical_constants(0.3 * k, r);
      CHECK(cons.alpha1 > pa);
      CHECK(cons.alpha0 >= cons.alpha1);
      CHECK(cons.c_crit < pc);
      pa = cons.alpha1;
      pc = cons.c_crit;
    }
  }
}

TEST_CASE("continuity and growth in eps") {
  for (int r : {2, 3}) {
    for (double c : {0.5, 3.0, 50.0}) {
      double prev = 0;
      for (double eps = 0.2; eps <= 20.0; eps *= 1.5) {
        const double v = solve(c, eps, r).value;
        CHECK(std::fabs(solve(c, eps + 1e-6, r).value - v) <= 1e-4);
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("curve CSV") {
  std::ostringstream os;
  write_curve_csv(os, alpha0(1.0, 2), 1.0, 2, 50);
  const std::string s = os.str();
  CHECK(s.rfind("delta,f,g,h\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 51);
}
