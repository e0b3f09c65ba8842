#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "startail/exact_oracles.hpp"

using namespace startail;

namespace {

double choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Every labeled graph on n vertices: degree sequence and edge count.
struct Graph {
  std::vector<int> deg;
  int edges;
};

std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Graph g{std::vector<int>(n, 0), 0};
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask >> e & 1u) {
        ++g.deg[slots[e].first];
        ++g.deg[slots[e].second];
        ++g.edges;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

double graph_prob(const Graph& g, int n, double p) {
  const int slots = n * (n - 1) / 2;
  return std::pow(p, g.edges) * std::pow(1 - p, slots - g.edges);
}

}  // namespace

TEST_CASE("binomial pmf") {
  const auto d = exact_binomial_pmf(4, 0.5);
  REQUIRE(d.size() == 5);
  const double w[] = {1, 4, 6, 4, 1};
  for (int k = 0; k <= 4; ++k) CHECK(std::exp(d.log_pmf(k)) == doctest::Approx(w[k] / 16.0).epsilon(1e-15));
  CHECK(exact_binomial_pmf(3, 0.0).size() == 1);
  CHECK(exact_binomial_pmf(3, 1.0).support() == std::vector<std::int64_t>{3});
}

TEST_CASE("law of Y for i.i.d. binomials") {
  // X_1, X_2 ~ Bin(2, 1/2), r = 2: Y counts X_i == 2.
  const auto y = exact_Y_distribution(2, 2, 0.5, 2);
  REQUIRE(y.support() == std::vector<std::int64_t>{0, 1, 2});
  CHECK(std::exp(y.log_pmf(0)) == doctest::Approx(9.0 / 16).epsilon(1e-14));
  CHECK(std::exp(y.log_pmf(1)) == doctest::Approx(6.0 / 16).epsilon(1e-14));
  CHECK(std::exp(y.log_pmf(2)) == doctest::Approx(1.0 / 16).epsilon(1e-14));

  for (int r : {2, 3}) {
    const std::int64_t n = 7, N = 6;
    const double p = 0.3;
    const auto d = exact_Y_distribution(n, N, p, r);
    CHECK(std::exp(d.log_total()) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d.mean() == doctest::Approx(n * choose(N, r) * std::pow(p, r)).epsilon(1e-12));
  }
}

TEST_CASE("truncated parts split Y") {
  const std::int64_t n = 3, N = 5, R = 2;
  const double p = 0.4;
  const int r = 2;
  const auto whole = exact_Y_distribution(n, N, p, r);
  const auto below = exact_Y_distribution(n, N, p, r, YPart::BelowCutoff, R);
  const auto above = exact_Y_distribution(n, N, p, r, YPart::AboveCutoff, R);
  CHECK(below.mean() + above.mean() == doctest::Approx(whole.mean()).epsilon(1e-12));
  CHECK(below.support().back() <= n * static_cast<std::int64_t>(choose(R, r)));

  const auto joint = exact_joint_YpYpp(n, N, p, r, R);
  CHECK(joint.first_marginal().mean() == doctest::Approx(below.mean()).epsilon(1e-12));
  CHECK(joint.second_marginal().mean() == doctest::Approx(above.mean()).epsilon(1e-12));
  const auto na = check_negative_association(joint);
  CHECK(na.violations == 0);
  CHECK(na.pairs_checked > 0);
}

TEST_CASE("tails at the extremes") {
  CHECK(exact_iid_tail(3, 4, 0.5, 2, 1e6) == -INFINITY);
  CHECK(exact_iid_tail(3, 4, 0.5, 2, -1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(exact_gnp_star_tail(4, 0.5, 2, -1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(exact_truncated_tail(3, 4, 0.5, 2, 1, 1.0) == -INFINITY);
}

TEST_CASE("Erdős–Gallai and graph counts agree with enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, std::uint64_t> counts;
    for (const auto& g : all_graphs(n)) ++counts[g.deg];
    // Walk every sequence in [0, n-1]^n.
    std::vector<int> d(n, 0);
    while (true) {
      const auto it = counts.find(d);
      const std::uint64_t expect = it == counts.end() ? 0 : it->second;
      CHECK(is_graphical(d) == (expect > 0));
      if (n <= 5) CHECK(count_graphs_with_degrees(DegreeSequence(d)) == expect);
      int i = 0;
      while (i < n && ++d[i] == n) d[i++] = 0;
      if (i == n) break;
    }
  }
  CHECK(count_graphs_with_degrees(DegreeSequence(std::vector<int>{})) == 1);
  CHECK(count_graphs_with_degrees(DegreeSequence({2, 2, 2, 2})) == 3);
  CHECK_THROWS_AS(count_graphs_with_degrees(DegreeSequence(std::vector<int>(9, 1))), std::length_error);
}

TEST_CASE("degree-sequence law sums to one and matches enumeration") {
  const int n = 4;
  const double p = 0.3;
  std::map<std::vector<int>, double> law;
  for (const auto& g : all_graphs(n)) law[g.deg] += graph_prob(g, n, p);
  double total = 0;
  for (const auto& [deg, pr] : law) {
    const auto m = exact_degree_measures(n, p, DegreeSequence(deg));
    CHECK(std::exp(m.log_PD) == doctest::Approx(pr).epsilon(1e-12));
    double pb = 1;
    for (int di : deg) pb *= choose(n - 1, di) * std::pow(p, di) * std::pow(1 - p, n - 1 - di);
    CHECK(std::exp(m.log_PB) == doctest::Approx(pb).epsilon(1e-12));
    total += std::exp(m.log_PD);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(exact_degree_measures(4, 0.3, DegreeSequence({1, 0, 0, 0})).log_PD == -INFINITY);
}

TEST_CASE("McKay-Wormald estimate") {
  const auto empty = mckay_wormald_estimate(DegreeSequence({0, 0, 0}));
  CHECK(empty.degenerate);
  const auto full = mckay_wormald_estimate(DegreeSequence({2, 2, 2}));
  CHECK(full.degenerate);
  // Regular sequences have gamma = 0.
  const auto reg = mckay_wormald_estimate(DegreeSequence({2, 2, 2, 2, 2, 2}));
  CHECK_FALSE(reg.degenerate);
  CHECK(reg.gamma_n == doctest::Approx(0.0));
  // 2-regular graphs on 6 labeled vertices: 60 hexagons + 10 pairs of triangles.
  CHECK(std::exp(reg.log_estimate) == doctest::Approx(70.0).epsilon(0.15));
  CHECK(count_graphs_with_degrees(DegreeSequence({2, 2, 2, 2, 2, 2})) == 70);
}

TEST_CASE("star-count distribution matches enumeration") {
  for (int r : {2, 3}) {
    for (double p : {0.2, 0.5}) {
      const int n = 5;
      std::map<std::int64_t, double> law;
      for (const auto& g : all_graphs(n)) {
        std::int64_t x = 0;
        for (int di : g.deg) x += static_cast<std::int64_t>(choose(di, r));
        law[x] += graph_prob(g, n, p);
      }
      const auto d = exact_gnp_star_distribution(n, p, r);
      CHECK(d.size() == law.size());
      for (const auto& [x, pr] : law) CHECK(std::exp(d.log_pmf(x)) == doctest::Approx(pr).epsilon(1e-12));
      const double mu = n * choose(n - 1, r) * std::pow(p, r);
      CHECK(d.mean() == doctest::Approx(mu).epsilon(1e-12));
      double tail = 0;
      for (const auto& [x, pr] : law)
        if (x >= std::ceil(1.5 * mu - 1e-9)) tail += pr;
      CHECK(std::exp(exact_gnp_star_tail(n, p, r, 0.5)) == doctest::Approx(tail).epsilon(1e-12));
    }
  }
  const StarCountHistogram h(4, 2);
  std::uint64_t total = 0;
  for (std::int64_t x = 0; x <= h.max_star_count(); ++x)
    for (int m = 0; m <= h.edge_slots(); ++m) total += h.count(x, m);
  CHECK(total == 64);
}

TEST_CASE("convex_sum_min") {
  CHECK(convex_sum_min(2, 3, 5, 10) == 4);
  CHECK(convex_sum_min(2, 3, 5, 0) == 0);
  CHECK(convex_sum_min(2, 3, 5, 45) == 15);
  CHECK_THROWS_AS(convex_sum_min(2, 3, 5, 46), std::domain_error);
}

TEST_CASE("guards") {
  OracleGuards g;
  g.max_graph_vertices = 4;
  CHECK_THROWS_AS(exact_gnp_star_distribution(5, 0.5, 2, g), std::length_error);
  g.max_support = 10;
  CHECK_THROWS_AS(exact_Y_distribution(50, 40, 0.5, 2, YPart::Whole, 0, g), std::length_error);
}
