#include "startail/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "startail/distribution.hpp"
#include "startail/exact_oracles.hpp"
#include "startail/numerics.hpp"
#include "startail/rate_core.hpp"
#include "startail/variational.hpp"

namespace startail {

namespace {

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

CheckResult result(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

double objective(double c, double eps, int r, double delta) {
  return phi(eps - delta) + psi(r, delta) * std::pow(c, 1.0 / r - 1.0);
}

// Exhaustive minimum of sum m_i subject to sum m_i^r >= t, m in [0, N]^n,
// for every integer t in [0, n N^r].
std::vector<std::int64_t> brute_convex_sum(int r, std::int64_t N, int n) {
  std::int64_t top = 1;
  for (int i = 0; i < r; ++i) top *= N;
  const std::int64_t cap = n * top;
  std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> m(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::int64_t s = 0, total = 0;
    for (auto mi : m) {
      std::int64_t pw = 1;
      for (int i = 0; i < r; ++i) pw *= mi;
      s += pw;
      total += mi;
    }
    best[static_cast<std::size_t>(s)] = std::min(best[static_cast<std::size_t>(s)], total);
    std::size_t k = 0;
    while (k < m.size() && m[k] == N) m[k++] = 0;
    if (k == m.size()) break;
    ++m[k];
  }
  for (std::size_t t = best.size() - 1; t-- > 0;) best[t] = std::min(best[t], best[t + 1]);
  return best;
}

}  // namespace

GridMinimum variational_grid_minimum(double c, double eps, int r, int points, double from) {
  GridMinimum g{kInf, 0.0};
  for (int k = 0; k <= points; ++k) {
    const double delta = eps * static_cast<double>(k) / points;
    if (delta < from) continue;
    const double v = objective(c, eps, r, delta);
    if (v < g.value) g = {v, delta};
  }
  return g;
}

CheckResult check_minimizer_against_grid(double c, double eps, int r, int points, double value_tol,
                                         double delta_tol) {
  const auto sol = solve(c, eps, r);
  const double cc = c_crit(eps, r);
  const auto grid = variational_grid_minimum(c, eps, r, points);
  const std::string name = fmt("minimize r=%d eps=%.17g c/c_crit=%.6g", r, eps, c / cc);
  const double gap = std::fabs(sol.value - grid.value);
  if (gap > value_tol) {
    return result(name, false, fmt("value %.17g grid %.17g", sol.value, grid.value));
  }
  const auto& M = sol.minimizers;
  bool ok = true;
  double dev = 0.0;
  if (std::fabs(c - cc) <= 1e-9 * cc) {
    ok = M.size() == 2 && M[0] == 0.0 && M[1] > 0.0 && M[1] < eps;
    if (ok) {
      dev = std::fabs(variational_grid_minimum(c, eps, r, points, 0.5 * M[1]).argmin - M[1]);
      ok = dev <= delta_tol;
    }
  } else if (c < cc) {
    ok = M.size() == 1 && M[0] == 0.0 && grid.argmin <= delta_tol;
    dev = grid.argmin;
  } else {
    ok = M.size() == 1 && M[0] > 0.0 && M[0] < eps;
    if (ok) {
      dev = std::fabs(grid.argmin - M[0]);
      ok = dev <= delta_tol;
    }
  }
  return result(name, ok,
                fmt("value_gap=%.3g minimizers=%zu delta_dev=%.3g", gap, M.size(), dev));
}

std::vector<CheckResult> verify_convex_sum() {
  std::int64_t cases = 0, mismatches = 0;
  for (int r : {2, 3}) {
    for (std::int64_t N = 1; N <= 6; ++N) {
      for (int n = 1; n <= 5; ++n) {
        const auto best = brute_convex_sum(r, N, n);
        for (std::size_t t = 0; t < best.size(); ++t) {
          ++cases;
          if (convex_sum_min(r, N, n, static_cast<double>(t)) != best[t]) ++mismatches;
        }
      }
    }
  }
  return {result("convex_sum exhaustive", mismatches == 0,
                 fmt("cases=%lld mismatches=%lld", static_cast<long long>(cases),
                     static_cast<long long>(mismatches)))};
}

std::vector<CheckResult> verify_bounds() {
  std::int64_t cases = 0, upper_bad = 0, lower_bad = 0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (double p : {0.05, 0.1, 0.3}) {
      const auto pmf = exact_binomial_pmf(n, p);
      for (std::int64_t t = 0; t <= n; ++t) {
        if (!(static_cast<double>(t) > std::exp(1.0) * n * p)) continue;
        ++cases;
        const double tail = pmf.log_tail(static_cast<double>(t));
        const double slack = 1e-12 * std::max(1.0, std::fabs(tail));
        if (tail > chernoff_upper_log(n, p, static_cast<double>(t)) + slack) ++upper_bad;
        if (tail < binom_point_lower_log(n, p, t) - slack) ++lower_bad;
      }
    }
  }
  return {result("bounds chernoff upper", upper_bad == 0,
                 fmt("cases=%lld violations=%lld", static_cast<long long>(cases),
                     static_cast<long long>(upper_bad))),
          result("bounds point lower", lower_bad == 0,
                 fmt("cases=%lld violations=%lld", static_cast<long long>(cases),
                     static_cast<long long>(lower_bad)))};
}

std::vector<CheckResult> verify_variational(int grid_points) {
  std::vector<CheckResult> out;
  for (int r : {2, 3, 4}) {
    for (double eps : {0.25, 0.5, 1.0, 2.0, 5.0}) {
      const double cc = c_crit(eps, r);
      for (double f : {0.1, 0.9, 1.0, 1.1, 10.0, 1e4}) {
        out.push_back(check_minimizer_against_grid(f * cc, eps, r, grid_points));
      }
    }
  }
  for (int r : {2, 3}) {
    double prev_a1 = -kInf, prev_cc = kInf;
    bool mono = true, levels = true, iff = true;
    for (int k = 1; k <= 20; ++k) {
      const double eps = 0.25 * k;
      const auto cc = critical_constants(eps, r);
      mono = mono && cc.alpha1 > prev_a1 && cc.c_crit < prev_cc;
      prev_a1 = cc.alpha1;
      prev_cc = cc.c_crit;
      const double ph = phi(eps);
      for (double f : {0.5, 1.0}) {
        levels = levels && std::fabs(solve(f * cc.c_crit, eps, r).value - ph) <= 1e-12 * ph;
      }
      levels = levels && solve(1.1 * cc.c_crit, eps, r).value < ph - 1e-8;
      for (double f : {0.1, 0.5, 0.9, 0.99, 1.0, 1.01, 1.1, 2.0, 10.0}) {
        const auto M = solve(f * cc.c_crit, eps, r).minimizers;
        const bool has_zero = M.front() == 0.0;
        iff = iff && (has_zero == (f <= 1.0)) && ((M.size() == 1 && has_zero) == (f < 1.0));
      }
    }
    out.push_back(result(fmt("critical monotone r=%d", r), mono, "alpha1 increasing, c_crit decreasing over 20 eps"));
    out.push_back(result(fmt("critical levels r=%d", r), levels, "I = phi for c <= c_crit, I < phi - 1e-8 at 1.1 c_crit"));
    out.push_back(result(fmt("poisson iff r=%d", r), iff, "0 is a minimizer iff c <= c_crit"));
  }
  return out;
}

std::vector<CheckResult> verify_enumeration() {
  std::vector<CheckResult> out;
  auto count_check = [&](const std::string& label, std::vector<int> d, std::uint64_t expected) {
    const auto got = count_graphs_with_degrees(DegreeSequence(std::move(d)));
    out.push_back(result("count " + label, got == expected,
                         fmt("got=%llu expected=%llu", static_cast<unsigned long long>(got),
                             static_cast<unsigned long long>(expected))));
  };
  count_check("1-regular k=1", {1, 1}, 1);
  count_check("1-regular k=2", {1, 1, 1, 1}, 3);
  count_check("1-regular k=3", {1, 1, 1, 1, 1, 1}, 15);
  count_check("(2,2,2)", {2, 2, 2}, 1);
  count_check("2-regular n=5", {2, 2, 2, 2, 2}, 12);

  for (int n = 1; n <= 5; ++n) {
    for (double p : {0.2, 0.5}) {
      long double total = 0.0L;
      std::vector<int> d(static_cast<std::size_t>(n), 0);
      for (;;) {
        total += std::exp(static_cast<long double>(exact_degree_measures(n, p, DegreeSequence(d)).log_PD));
        std::size_t k = 0;
        while (k < d.size() && d[k] == n - 1) d[k++] = 0;
        if (k == d.size()) break;
        ++d[k];
      }
      const double err = std::fabs(static_cast<double>(total) - 1.0);
      out.push_back(result(fmt("degree law sums to 1 n=%d p=%.2f", n, p), err <= 1e-10, fmt("error=%.3g", err)));
    }
  }

  std::vector<double> rel;
  for (int k = 1; k <= 3; ++k) {
    const DegreeSequence d(std::vector<int>(static_cast<std::size_t>(2 * k), 1));
    const double exact = static_cast<double>(count_graphs_with_degrees(d));
    const auto mw = mckay_wormald_estimate(d);
    rel.push_back(std::fabs(std::exp(mw.log_estimate) - exact) / exact);
  }
  out.push_back(result("mckay-wormald 1-regular error decreasing", rel[0] > rel[1] && rel[1] > rel[2],
                       fmt("rel_err k=1..3: %.6g %.6g %.6g", rel[0], rel[1], rel[2])));
  return out;
}

std::vector<CheckResult> verify_negative_association() {
  std::vector<CheckResult> out;
  for (double p : {0.1, 0.3, 0.5}) {
    const auto check = check_negative_association(exact_joint_YpYpp(3, 4, p, 2, 2));
    out.push_back(result(fmt("negative association n=3 N=4 p=%.1f r=2 R=2", p), check.violations == 0,
                         fmt("pairs=%lld violations=%lld worst_excess=%.3g",
                             static_cast<long long>(check.pairs_checked),
                             static_cast<long long>(check.violations), check.worst_excess)));
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite == "convex_sum") return verify_convex_sum();
  if (suite == "bounds") return verify_bounds();
  if (suite == "variational") return verify_variational();
  if (suite == "enumeration") return verify_enumeration();
  if (suite == "na") return verify_negative_association();
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const char* s : {"convex_sum", "bounds", "variational", "enumeration", "na"}) {
      auto part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("invalid suite: " + suite);
}

}  // namespace startail
