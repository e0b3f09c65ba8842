#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "startail/distribution.hpp"

using namespace startail;

namespace {

std::vector<double> to_log(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(x > 0 ? std::log(x) : -INFINITY);
  return out;
}

}  // namespace

TEST_CASE("first_integer_at_least") {
  CHECK(first_integer_at_least(3.0) == 3);
  CHECK(first_integer_at_least(3.0 + 1e-12) == 3);
  CHECK(first_integer_at_least(3.0 - 1e-12) == 3);
  CHECK(first_integer_at_least(3.01) == 4);
  CHECK(first_integer_at_least(0.0) == 0);
  CHECK(first_integer_at_least(-2.5) == -2);
}

TEST_CASE("log_convolve matches linear convolution") {
  const std::vector<double> a{0.1, 0.0, 0.6, 0.3};
  const std::vector<double> b{0.25, 0.5, 0.25};
  std::vector<double> lin(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) lin[i + j] += a[i] * b[j];
  const auto got = log_convolve(to_log(a), to_log(b));
  REQUIRE(got.size() == lin.size());
  for (std::size_t k = 0; k < lin.size(); ++k) CHECK(std::exp(got[k]) == doctest::Approx(lin[k]).epsilon(1e-14));

  // Tiny masses survive without underflow.
  const auto tiny = log_convolve({-800.0, -900.0}, {-700.0});
  CHECK(tiny[0] == doctest::Approx(-1500.0));
  CHECK(tiny[1] == doctest::Approx(-1600.0));
}

TEST_CASE("log_convolve_power") {
  const std::vector<double> bern = to_log({0.7, 0.3});
  const auto b5 = log_convolve_power(bern, 5);
  REQUIRE(b5.size() == 6);
  const double binom5[] = {1, 5, 10, 10, 5, 1};
  for (int k = 0; k <= 5; ++k)
    CHECK(std::exp(b5[k]) == doctest::Approx(binom5[k] * std::pow(0.3, k) * std::pow(0.7, 5 - k)).epsilon(1e-13));
  const auto b0 = log_convolve_power(bern, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == 0.0);
}

TEST_CASE("DiscreteDistribution") {
  const auto d = DiscreteDistribution::from_dense(to_log({0.2, 0.0, 0.5, 0.3}));
  CHECK(d.size() == 3);
  CHECK(d.support() == std::vector<std::int64_t>{0, 2, 3});
  CHECK(std::exp(d.log_total()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.mean() == doctest::Approx(1.9).epsilon(1e-14));
  CHECK(std::exp(d.log_tail(1.5)) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(std::exp(d.log_tail(3.0)) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(d.log_tail(3.5) == -INFINITY);
  CHECK(d.log_tail(-1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(d.log_pmf(1) == -INFINITY);
  CHECK(std::exp(d.log_pmf(2)) == doctest::Approx(0.5));
  const auto dense = d.to_dense();
  REQUIRE(dense.size() == 4);
  CHECK(dense[1] == -INFINITY);

  CHECK_THROWS(DiscreteDistribution({2, 1}, {0.0, 0.0}));
  CHECK_THROWS(DiscreteDistribution({1, 2}, {0.0}));

  std::ostringstream os;
  d.write_csv(os);
  CHECK(os.str().rfind("support,log_mass\n", 0) == 0);
}

TEST_CASE("JointDistribution tails and marginals") {
  // Independent pair: A ~ {0: .5, 1: .5}, B ~ {0: .25, 1: .75}.
  const double pa[] = {0.5, 0.5}, pb[] = {0.25, 0.75};
  std::vector<double> lm;
  for (double x : pa)
    for (double y : pb) lm.push_back(std::log(x * y));
  const JointDistribution j(2, 2, lm);
  CHECK(j.joint_tail(1, 1) == doctest::Approx(0.375));
  CHECK(j.first_tail(1) == doctest::Approx(0.5));
  CHECK(j.second_tail(1) == doctest::Approx(0.75));
  CHECK(j.joint_tail(0, 0) == doctest::Approx(1.0));
  CHECK(j.joint_tail(2, 0) == 0.0);
  CHECK(std::exp(j.second_marginal().log_pmf(1)) == doctest::Approx(0.75));
  CHECK(std::exp(j.first_marginal().log_pmf(0)) == doctest::Approx(0.5));
}

TEST_CASE("log_convolve_2d") {
  const std::vector<double> a = to_log({0.5, 0.5});        // 2 x 1
  const std::vector<double> b = to_log({0.2, 0.8});        // 1 x 2
  const auto c = log_convolve_2d(a, 2, 1, b, 1, 2);
  REQUIRE(c.size() == 4);
  CHECK(std::exp(c[0]) == doctest::Approx(0.1));
  CHECK(std::exp(c[1]) == doctest::Approx(0.4));
  CHECK(std::exp(c[2]) == doctest::Approx(0.1));
  CHECK(std::exp(c[3]) == doctest::Approx(0.4));
}
