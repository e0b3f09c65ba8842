#include "startail/exact_oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "startail/numerics.hpp"

namespace startail {

namespace {

void check_vertex_guard(int n, const OracleGuards& guards) {
  const int limit = std::min(guards.max_graph_vertices, kHardVertexLimit);
  if (n > limit) {
    throw std::length_error("guard max_graph_vertices exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(limit));
  }
}

void check_support_guard(long double points, const OracleGuards& guards) {
  if (points > static_cast<long double>(guards.max_support)) {
    throw std::length_error("guard max_support exceeded: " +
                            std::to_string(static_cast<double>(points)) + " > " +
                            std::to_string(guards.max_support));
  }
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("invalid p: must lie in [0, 1]");
}

double log_binomial_pmf(std::int64_t N, double p, std::int64_t k) {
  if (k < 0 || k > N) return kNegInf;
  if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return k == N ? 0.0 : kNegInf;
  const double kd = static_cast<double>(k);
  return log_binom(N, k) + kd * std::log(p) + static_cast<double>(N - k) * std::log1p(-p);
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  const int n = static_cast<int>(degrees_.size());
  for (int d : degrees_) {
    if (d < 0 || d > n - 1) {
      throw std::invalid_argument("DegreeSequence: degrees must lie in [0, n - 1]");
    }
    degree_sum_ += d;
  }
}

double DegreeSequence::lambda_density() const {
  const std::int64_t slots = static_cast<std::int64_t>(n()) * (n() - 1) / 2;
  return slots == 0 ? 0.0 : m() / static_cast<double>(slots);
}

int DegreeSequence::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool is_graphical(std::span<const int> degrees) {
  std::vector<int> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const auto n = static_cast<std::int64_t>(d.size());
  std::int64_t total = 0;
  for (int x : d) {
    if (x < 0 || x > n - 1) return false;
    total += x;
  }
  if (total % 2 != 0) return false;
  std::int64_t left = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    left += d[static_cast<std::size_t>(k - 1)];
    std::int64_t right = k * (k - 1);
    for (std::int64_t i = k; i < n; ++i) right += std::min<std::int64_t>(d[static_cast<std::size_t>(i)], k);
    if (left > right) return false;
  }
  return true;
}

DiscreteDistribution exact_binomial_pmf(std::int64_t N, double p) {
  if (N < 0) throw std::domain_error("invalid N: must be >= 0");
  check_probability(p);
  std::vector<double> dense(static_cast<std::size_t>(N) + 1);
  for (std::int64_t k = 0; k <= N; ++k) dense[static_cast<std::size_t>(k)] = log_binomial_pmf(N, p, k);
  return DiscreteDistribution::from_dense(dense);
}

DiscreteDistribution exact_Y_distribution(std::int64_t n, std::int64_t N, double p, int r,
                                          YPart part, std::int64_t R, const OracleGuards& guards) {
  if (n < 1) throw std::domain_error("invalid n: must be >= 1");
  if (N < 0) throw std::domain_error("invalid N: must be >= 0");
  if (r < 1) throw std::domain_error("invalid r: must be >= 1");
  check_probability(p);
  auto kept = [&](std::int64_t x) {
    switch (part) {
      case YPart::Whole: return true;
      case YPart::BelowCutoff: return x <= R;
      case YPart::AboveCutoff: return x > R;
    }
    return true;
  };
  std::int64_t vmax = 0;
  for (std::int64_t x = 0; x <= N; ++x) {
    if (kept(x)) vmax = std::max<std::int64_t>(vmax, static_cast<std::int64_t>(binom_exact(x, r)));
  }
  check_support_guard(static_cast<long double>(n) * vmax + 1, guards);

  std::vector<double> single(static_cast<std::size_t>(vmax) + 1, kNegInf);
  for (std::int64_t x = 0; x <= N; ++x) {
    const auto v = kept(x) ? static_cast<std::size_t>(binom_exact(x, r)) : 0;
    single[v] = log_add(single[v], log_binomial_pmf(N, p, x));
  }
  return DiscreteDistribution::from_dense(log_convolve_power(single, n));
}

double exact_iid_tail(std::int64_t n, std::int64_t N, double p, int r, double eps,
                      const OracleGuards& guards) {
  const double nu = static_cast<double>(n) * binom_real(N, r) * std::pow(p, r);
  const double threshold = (1.0 + eps) * nu;
  if (threshold <= 0.0) return 0.0;
  return exact_Y_distribution(n, N, p, r, YPart::Whole, 0, guards).log_tail(threshold);
}

double exact_truncated_tail(std::int64_t n, std::int64_t N, double p, int r, std::int64_t R,
                            double eps, const OracleGuards& guards) {
  const double nu = static_cast<double>(n) * binom_real(N, r) * std::pow(p, r);
  const double threshold = (1.0 + eps) * nu;
  if (threshold <= 0.0) return 0.0;
  return exact_Y_distribution(n, N, p, r, YPart::BelowCutoff, R, guards).log_tail(threshold);
}

namespace {

// Backtracking over vertices in order: vertex i picks its remaining
// neighbours among j > i, and the residual sequence of the later vertices
// must stay graphical.
class GraphCounter {
 public:
  explicit GraphCounter(std::vector<int> residual) : res_(std::move(residual)), n_(static_cast<int>(res_.size())) {}

  std::uint64_t run() {
    total_ = 0;
    if (is_graphical(res_)) visit(0);
    return total_;
  }

 private:
  void visit(int i) {
    if (i == n_) {
      ++total_;
      return;
    }
    const int need = res_[static_cast<std::size_t>(i)];
    std::vector<int> candidates;
    for (int j = i + 1; j < n_; ++j) {
      if (res_[static_cast<std::size_t>(j)] > 0) candidates.push_back(j);
    }
    if (static_cast<int>(candidates.size()) < need) return;
    res_[static_cast<std::size_t>(i)] = 0;
    choose(i, candidates, 0, need);
    res_[static_cast<std::size_t>(i)] = need;
  }

  void choose(int i, const std::vector<int>& cand, std::size_t from, int left) {
    if (left == 0) {
      std::span<const int> rest(res_.data() + i + 1, static_cast<std::size_t>(n_ - i - 1));
      if (is_graphical(rest)) visit(i + 1);
      return;
    }
    for (std::size_t k = from; k + static_cast<std::size_t>(left) <= cand.size(); ++k) {
      --res_[static_cast<std::size_t>(cand[k])];
      choose(i, cand, k + 1, left - 1);
      ++res_[static_cast<std::size_t>(cand[k])];
    }
  }

  std::vector<int> res_;
  int n_;
  std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t count_graphs_with_degrees(const DegreeSequence& d, const OracleGuards& guards) {
  check_vertex_guard(d.n(), guards);
  if (!d.has_even_sum()) return 0;
  return GraphCounter(d.degrees()).run();
}

McKayWormaldEstimate mckay_wormald_estimate(const DegreeSequence& d) {
  McKayWormaldEstimate est;
  const int n = d.n();
  const double lambda = d.lambda_density();
  const double m = d.m();
  est.condition_holds = d.max_degree() <= std::pow(m, 0.25);
  if (n < 2 || !(lambda > 0.0 && lambda < 1.0)) {
    est.degenerate = true;
    est.log_estimate = kNegInf;
    return est;
  }
  const double nd = n;
  const double mean = static_cast<double>(d.degree_sum()) / nd;
  double sq = 0.0;
  double log_binoms = 0.0;
  for (int di : d.degrees()) {
    sq += static_cast<double>(di) * di;
    log_binoms += log_binom(n - 1, di);
  }
  est.gamma_n = (sq - nd * mean * mean) / ((nd - 1.0) * (nd - 1.0));
  const double z = est.gamma_n / (2.0 * lambda * (1.0 - lambda));
  const double slots = nd * (nd - 1.0) / 2.0;
  est.log_estimate = 0.5 * std::log(2.0) + 0.25 - z * z +
                     slots * (lambda * std::log(lambda) + (1.0 - lambda) * std::log1p(-lambda)) +
                     log_binoms;
  return est;
}

DegreeMeasures exact_degree_measures(int n, double p, const DegreeSequence& d,
                                     const OracleGuards& guards) {
  if (d.n() != n) throw std::invalid_argument("exact_degree_measures: sequence length differs from n");
  check_vertex_guard(n, guards);
  check_probability(p);
  DegreeMeasures out;
  out.log_PB = 0.0;
  for (int di : d.degrees()) out.log_PB += log_binomial_pmf(n - 1, p, di);
  const std::uint64_t g = count_graphs_with_degrees(d, guards);
  if (g == 0) {
    out.log_PD = kNegInf;
    return out;
  }
  const double slots = static_cast<double>(n) * (n - 1) / 2.0;
  const double m = d.m();
  double lp = std::log(static_cast<double>(g));
  if (m > 0) lp += m * std::log(p);
  if (slots > m) lp += (slots - m) * std::log1p(-p);
  out.log_PD = lp;
  return out;
}

std::int64_t convex_sum_min(int r, std::int64_t N, std::int64_t n, double t) {
  if (r < 1) throw std::domain_error("convex_sum_min: r must be >= 1");
  if (N < 1 || n < 1) throw std::domain_error("convex_sum_min: N and n must be >= 1");
  std::int64_t top = 1;
  for (int i = 0; i < r; ++i) top *= N;
  const double cap = static_cast<double>(n) * static_cast<double>(top);
  if (!(t >= 0.0 && t <= cap)) throw std::domain_error("convex_sum_min: t must lie in [0, n N^r]");
  const auto full = static_cast<std::int64_t>(std::floor(t / static_cast<double>(top)));
  const double rem = std::max(0.0, t - static_cast<double>(full) * static_cast<double>(top));
  std::int64_t b = 0;
  while (b < N && std::pow(static_cast<double>(b), r) < rem) ++b;
  return full * N + b;
}

StarCountHistogram::StarCountHistogram(int n, int r, const OracleGuards& guards)
    : n_(n), r_(r), edges_(n * (n - 1) / 2) {
  if (n < 1) throw std::domain_error("invalid n: must be >= 1");
  if (r < 1) throw std::domain_error("invalid r: must be >= 1");
  check_vertex_guard(n, guards);
  max_x_ = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(binom_exact(n - 1, r));
  const std::size_t width = static_cast<std::size_t>(edges_) + 1;
  counts_.assign(static_cast<std::size_t>(max_x_ + 1) * width, 0);

  std::vector<std::pair<int, int>> edge;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edge.emplace_back(u, v);
  }
  // C(d, r - 1) is the change in C(d, r) when a degree goes from d to d + 1.
  std::vector<std::int64_t> step(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) step[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(binom_exact(d, r - 1));

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<char> on(edge.size(), 0);
  std::int64_t x = 0;
  int m = 0;
  counts_[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << edges_;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto e = static_cast<std::size_t>(std::countr_zero(g));
    auto& du = deg[static_cast<std::size_t>(edge[e].first)];
    auto& dv = deg[static_cast<std::size_t>(edge[e].second)];
    if (!on[e]) {
      x += step[static_cast<std::size_t>(du)] + step[static_cast<std::size_t>(dv)];
      ++du;
      ++dv;
      ++m;
    } else {
      --du;
      --dv;
      x -= step[static_cast<std::size_t>(du)] + step[static_cast<std::size_t>(dv)];
      --m;
    }
    on[e] ^= 1;
    ++counts_[static_cast<std::size_t>(x) * width + static_cast<std::size_t>(m)];
  }
}

std::uint64_t StarCountHistogram::count(std::int64_t x, int m) const {
  if (x < 0 || x > max_x_ || m < 0 || m > edges_) return 0;
  return counts_[static_cast<std::size_t>(x) * (static_cast<std::size_t>(edges_) + 1) + static_cast<std::size_t>(m)];
}

DiscreteDistribution StarCountHistogram::distribution(double p) const {
  check_probability(p);
  std::vector<double> dense(static_cast<std::size_t>(max_x_) + 1, kNegInf);
  std::vector<double> terms;
  for (std::int64_t x = 0; x <= max_x_; ++x) {
    terms.clear();
    for (int m = 0; m <= edges_; ++m) {
      const std::uint64_t c = count(x, m);
      if (c == 0) continue;
      const double lp = m == 0 ? 0.0 : (p == 0.0 ? kNegInf : m * std::log(p));
      const double lq = m == edges_ ? 0.0 : (p == 1.0 ? kNegInf : (edges_ - m) * std::log1p(-p));
      terms.push_back(std::log(static_cast<double>(c)) + lp + lq);
    }
    dense[static_cast<std::size_t>(x)] = log_sum_exp(terms);
  }
  return DiscreteDistribution::from_dense(dense);
}

DiscreteDistribution exact_gnp_star_distribution(int n, double p, int r, const OracleGuards& guards) {
  return StarCountHistogram(n, r, guards).distribution(p);
}

double exact_gnp_star_tail(int n, double p, int r, double eps, const OracleGuards& guards) {
  const double mu = static_cast<double>(n) * binom_real(n - 1, r) * std::pow(p, r);
  const double threshold = (1.0 + eps) * mu;
  if (threshold <= 0.0) return 0.0;
  return exact_gnp_star_distribution(n, p, r, guards).log_tail(threshold);
}

JointDistribution exact_joint_YpYpp(std::int64_t n, std::int64_t N, double p, int r,
                                    std::int64_t R, const OracleGuards& guards) {
  if (n < 1) throw std::domain_error("invalid n: must be >= 1");
  if (N < 0) throw std::domain_error("invalid N: must be >= 0");
  if (R < 0) throw std::domain_error("invalid R: must be >= 0");
  check_probability(p);
  const auto rows1 = static_cast<std::size_t>(binom_exact(std::min(R, N), r)) + 1;
  const auto cols1 = static_cast<std::size_t>(R < N ? binom_exact(N, r) : 0) + 1;
  check_support_guard(static_cast<long double>(n * static_cast<std::int64_t>(rows1 - 1) + 1) *
                          static_cast<long double>(n * static_cast<std::int64_t>(cols1 - 1) + 1),
                      guards);

  std::vector<double> single(rows1 * cols1, kNegInf);
  for (std::int64_t x = 0; x <= N; ++x) {
    const auto v = static_cast<std::size_t>(binom_exact(x, r));
    const std::size_t cell = x <= R ? v * cols1 : v;
    single[cell] = log_add(single[cell], log_binomial_pmf(N, p, x));
  }

  std::vector<double> result{0.0};
  std::size_t rr = 1, rc = 1;
  std::vector<double> sq = single;
  std::size_t sr = rows1, sc = cols1;
  std::int64_t k = n;
  while (k > 0) {
    if (k & 1) {
      result = log_convolve_2d(result, rr, rc, sq, sr, sc);
      rr += sr - 1;
      rc += sc - 1;
    }
    k >>= 1;
    if (k > 0) {
      sq = log_convolve_2d(sq, sr, sc, sq, sr, sc);
      sr = 2 * sr - 1;
      sc = 2 * sc - 1;
    }
  }
  return JointDistribution(rr, rc, std::move(result));
}

NegativeAssociationCheck check_negative_association(const JointDistribution& joint, double slack) {
  NegativeAssociationCheck out;
  out.worst_excess = -kInf;
  for (std::size_t t = 0; t < joint.rows(); ++t) {
    const double pa = joint.first_tail(static_cast<std::int64_t>(t));
    for (std::size_t u = 0; u < joint.cols(); ++u) {
      const double both = joint.joint_tail(static_cast<std::int64_t>(t), static_cast<std::int64_t>(u));
      const double excess = both - pa * joint.second_tail(static_cast<std::int64_t>(u));
      out.worst_excess = std::max(out.worst_excess, excess);
      ++out.pairs_checked;
      if (excess > slack) ++out.violations;
    }
  }
  return out;
}

}  // namespace startail
