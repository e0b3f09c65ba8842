#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "startail/exact_oracles.hpp"
#include "startail/mc_simulator.hpp"

using namespace startail;

namespace {

SimulationOptions with_workers(int w) {
  SimulationOptions o;
  o.workers = w;
  return o;
}

}  // namespace

TEST_CASE("counter rng is a pure function of its key") {
  CounterRng a(7, 1, 42), b(7, 1, 42), c(7, 2, 42), d(7, 1, 43);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
  CounterRng u(1, 0, 0);
  double lo = 1, hi = 0;
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("sampled degrees") {
  CounterRng rng(1, 0, 0);
  CHECK(sample_gnp_degrees(6, 0.0, rng).degree_sum() == 0);
  const auto full = sample_gnp_degrees(6, 1.0, rng);
  for (int d : full.degrees()) CHECK(d == 5);

  const int n = 30, reps = 2000;
  const double p = 0.2;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < reps; ++i) {
    CounterRng g(3, 0, i);
    const auto d = sample_gnp_degrees(n, p, g);
    CHECK(d.has_even_sum());
    const double m = static_cast<double>(d.degree_sum()) / n;
    sum += m;
    sumsq += m * m;
  }
  const double mean = sum / reps;
  const double sd = std::sqrt((sumsq / reps - mean * mean) / reps);
  CHECK(std::fabs(mean - (n - 1) * p) < 4 * sd);
}

TEST_CASE("star_count and split_sum") {
  const std::vector<int> d{2, 2, 2};
  CHECK(star_count(d, 2) == 3);
  CHECK(star_count(d, 3) == 0);
  const std::vector<int> v{0, 1, 3, 5, 2};
  for (std::int64_t R : {0, 2, 3, 10}) {
    const auto s = split_sum(v, 2, R);
    CHECK(s.below + s.above == star_count(v, 2));
  }
  CHECK(split_sum(v, 2, 3).above == 10);
  CHECK(split_sum(v, 2, 3).below == 4);
}

TEST_CASE("naive estimator edge cases") {
  const auto s = StarParams::make(2, 6, 0.3);
  const auto all = naive_tail(s, -1.0, 1000, 5);
  CHECK(all.estimate == 1.0);
  CHECK(all.std_error == 0.0);
  CHECK(all.log_estimate == 0.0);
  const auto none = naive_tail(s, 1e6, 1000, 5);
  CHECK(none.estimate == 0.0);
  CHECK(none.log_estimate == -INFINITY);
  CHECK(none.std_error == 0.0);
  CHECK(none.wilson_upper > 0.0);
  CHECK_THROWS_AS(naive_tail(s, 0.5, 0, 5), std::invalid_argument);
}

TEST_CASE("naive estimator agrees with exact law") {
  const auto s = StarParams::make(2, 6, 0.3);
  const auto est = naive_tail(s, 0.5, 200000, 11);
  const double exact = std::exp(exact_gnp_star_tail(6, 0.3, 2, 0.5));
  CHECK(est.std_error > 0.0);
  CHECK(std::fabs(est.estimate - exact) < 4 * est.std_error);
  CHECK(est.wilson_lower <= est.estimate);
  CHECK(est.estimate <= est.wilson_upper);

  const auto iid = naive_tail(StarParams::make(2, 5, 0.3, 6), 0.5, 200000, 11, SampleMode::Iid);
  const double exact_iid = std::exp(exact_iid_tail(5, 6, 0.3, 2, 0.5));
  CHECK(std::fabs(iid.estimate - exact_iid) < 4 * iid.std_error);
}

TEST_CASE("results do not depend on the number of workers") {
  const auto s = StarParams::make(2, 12, 0.2);
  const auto one = naive_tail(s, 0.5, 20000, 3, SampleMode::Gnp, with_workers(1));
  const auto four = naive_tail(s, 0.5, 20000, 3, SampleMode::Gnp, with_workers(4));
  CHECK(one == four);

  const TiltedConfig cfg{10, 9, 0.2, 2, 1.0, 5, std::nullopt, false};
  CHECK(tilted_tail(cfg, 10000, 9, with_workers(1)).estimate == tilted_tail(cfg, 10000, 9, with_workers(3)).estimate);

  const auto p1 = planted_tail_lower(s, 1.0, 0.2, 5000, 4, with_workers(1));
  const auto p2 = planted_tail_lower(s, 1.0, 0.2, 5000, 4, with_workers(2));
  CHECK(p1.estimate == p2.estimate);

  const auto na1 = na_empirical_check(4, 5, 0.4, 2, 2, 3, 3, 5000, 2, with_workers(1));
  const auto na2 = na_empirical_check(4, 5, 0.4, 2, 2, 3, 3, 5000, 2, with_workers(2));
  CHECK(na1 == na2);
}

TEST_CASE("tilted binomial") {
  const auto t0 = TiltedBinomial::make(9, 0.2, 2, 0.0, 5);
  // Z = X 1{X <= R} carries all the mass, so Lambda(0) = 1.
  CHECK(t0.log_Lambda == doctest::Approx(0.0));
  const auto t1 = TiltedBinomial::make(9, 0.2, 2, 0.5, 5);
  const auto t2 = TiltedBinomial::make(9, 0.2, 2, 1.0, 5);
  CHECK(t2.tilted_mean() > t1.tilted_mean());
  CHECK(t1.tilted_mean() > t0.tilted_mean());

  const auto h = optimal_tilt(9, 0.2, 2, 5, 1.0);
  REQUIRE(h.has_value());
  const double target = 2.0 * 36 * 0.04;
  CHECK(TiltedBinomial::make(9, 0.2, 2, *h, 5).tilted_mean() == doctest::Approx(target).epsilon(1e-9));
  CHECK_FALSE(optimal_tilt(9, 0.2, 2, 2, 100.0).has_value());

  const auto cut = default_cutoff(10, 9, 0.2, 2, 1.0);
  CHECK(cut.R >= 2);
  CHECK(cut.eta == doctest::Approx(1.0 / std::pow(std::log(5.0), 2)));
}

TEST_CASE("tilted estimator") {
  const TiltedConfig cfg{10, 9, 0.2, 2, 1.0, 5, std::nullopt, false};
  const auto rep = tilted_tail(cfg, 100000, 21);
  const double exact = std::exp(exact_truncated_tail(10, 9, 0.2, 2, 5, 1.0));
  CHECK(std::fabs(rep.estimate.estimate - exact) < 4 * rep.estimate.std_error);
  CHECK(exact <= std::exp(exponential_moment_bound_log(rep.tilt, 10, 1.0)));

  TiltedConfig flat = cfg;
  flat.h = 0.0;
  const auto f = tilted_tail(flat, 20000, 21);
  CHECK(f.estimate.estimate <= 1.0);
  CHECK(f.estimate.std_error >= 0.0);

  TiltedConfig low = cfg;
  low.R = 1;
  CHECK_THROWS_AS(tilted_tail(low, 100, 1), std::domain_error);
}

TEST_CASE("planted construction") {
  const auto s = StarParams::make(2, 12, 0.2);
  const auto cfg = planted_config(s, 1.0, 0.2);
  CHECK(cfg.a == 0);
  CHECK(cfg.b_ceil == static_cast<std::int64_t>(std::ceil(cfg.b - 1e-12)));

  const auto rep = planted_tail_lower(s, 1.0, 0.2, 20000, 8);
  CHECK(rep.residual_threshold >= rep.typical_threshold);
  CHECK(rep.estimate.std_error >= 0.0);
  CHECK(rep.log_exact_factor <= 0.0);

  const auto small = StarParams::make(2, 7, 0.3);
  const auto lower = planted_tail_lower(small, 1.0, 0.2, 50000, 8);
  CHECK(lower.estimate.estimate <= std::exp(exact_gnp_star_tail(7, 0.3, 2, 1.0)) + 3 * lower.estimate.std_error);
}

TEST_CASE("negative association check") {
  const auto zero = na_empirical_check(4, 5, 0.4, 2, 2, 0, 0, 2000, 1);
  CHECK(zero.lhs == 1.0);
  CHECK(zero.rhs == 1.0);
  const auto nz = na_empirical_check(4, 5, 0.4, 2, 2, 2, 6, 20000, 1);
  CHECK(nz.lhs <= nz.rhs + 4 * std::max(1e-4, std::fabs(nz.lhs - nz.rhs) / std::max(1e-12, std::fabs(nz.z))));
}

TEST_CASE("rate comparison") {
  const auto s = StarParams::make(2, 12, 0.2);
  const auto est = naive_tail(s, 0.5, 20000, 5);
  const auto cmp = rate_comparison(s, 0.5, est);
  CHECK(std::isfinite(cmp.neg_log_estimate));
  CHECK(std::isfinite(cmp.prediction));
  TailEstimate empty;
  CHECK_THROWS_AS(rate_comparison(s, 0.5, empty), std::invalid_argument);
}

TEST_CASE("default workers honours the environment") {
  setenv("STARTAIL_THREADS", "3", 1);
  CHECK(default_workers() == 3);
  unsetenv("STARTAIL_THREADS");
  CHECK(default_workers() >= 1);
}
