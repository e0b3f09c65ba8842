#ifndef STARTAIL_EXACT_ORACLES_HPP
#define STARTAIL_EXACT_ORACLES_HPP

// Exact small-instance ground truth: distributions of star-count statistics
// of i.i.d. binomials and of G(n, p), graph counts by degree sequence, and
// the degree-sequence vs. product-binomial measure comparison.

#include <cstdint>
#include <span>
#include <vector>

#include "startail/distribution.hpp"

namespace startail {

/// Size limits for the exhaustive oracles. Exceeding one throws
/// std::length_error with the guard's name and limit in the message.
struct OracleGuards {
  int max_graph_vertices = 7;            ///< count_graphs / exact_degree_measures / exact_gnp_*
  std::int64_t max_support = 10'000'000;  ///< dense support points of a convolution result
};

/// Largest n accepted by the enumeration oracles, whatever the guard says.
inline constexpr int kHardVertexLimit = 8;

class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Each degree must lie in [0, n - 1]; odd sums are allowed (they have no
  /// realization) but flagged by has_even_sum().
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int n() const { return static_cast<int>(degrees_.size()); }
  std::int64_t degree_sum() const { return degree_sum_; }
  bool has_even_sum() const { return degree_sum_ % 2 == 0; }
  /// m(d) = half the degree sum.
  double m() const { return 0.5 * static_cast<double>(degree_sum_); }
  /// lambda(d) = m(d) / C(n, 2).
  double lambda_density() const;
  int max_degree() const;

 private:
  std::vector<int> degrees_;
  std::int64_t degree_sum_ = 0;
};

/// Erdős–Gallai test.
bool is_graphical(std::span<const int> degrees);

DiscreteDistribution exact_binomial_pmf(std::int64_t N, double p);

/// Which terms of Y = sum_i C(X_i, r) to keep.
enum class YPart {
  Whole,        ///< Y
  BelowCutoff,  ///< Y'  = sum over X_i <= R
  AboveCutoff,  ///< Y'' = sum over X_i >  R
};

/// Exact law of Y (or Y', Y'') for X_1..X_n i.i.d. Bin(N, p).
DiscreteDistribution exact_Y_distribution(std::int64_t n, std::int64_t N, double p, int r,
                                          YPart part = YPart::Whole, std::int64_t R = 0,
                                          const OracleGuards& guards = {});

/// log P(Y >= (1 + eps) nu), nu = n C(N, r) p^r.
double exact_iid_tail(std::int64_t n, std::int64_t N, double p, int r, double eps,
                      const OracleGuards& guards = {});

/// log P(Y' >= (1 + eps) nu) for the truncated sum with cutoff R.
double exact_truncated_tail(std::int64_t n, std::int64_t N, double p, int r, std::int64_t R,
                            double eps, const OracleGuards& guards = {});

/// Number of labeled graphs with degree sequence d.
std::uint64_t count_graphs_with_degrees(const DegreeSequence& d, const OracleGuards& guards = {});

struct McKayWormaldEstimate {
  double log_estimate = 0.0;
  double gamma_n = 0.0;
  bool condition_holds = false;  ///< max_i d_i <= m(d)^{1/4}
  bool degenerate = false;       ///< lambda in {0, 1}

  bool operator==(const McKayWormaldEstimate&) const = default;
};

McKayWormaldEstimate mckay_wormald_estimate(const DegreeSequence& d);

struct DegreeMeasures {
  double log_PD = 0.0;  ///< degree sequence law of G(n, p)
  double log_PB = 0.0;  ///< product of Bin(n - 1, p) marginals

  bool operator==(const DegreeMeasures&) const = default;
};

DegreeMeasures exact_degree_measures(int n, double p, const DegreeSequence& d,
                                     const OracleGuards& guards = {});

/// min sum_i m_i over integer m_i in [0, N] with sum_i m_i^r >= t, in the
/// closed form floor(t / N^r) N + b. Requires 0 <= t <= n N^r.
std::int64_t convex_sum_min(int r, std::int64_t N, std::int64_t n, double t);

/// Joint count of labeled graphs on n vertices by (star count, edge count).
class StarCountHistogram {
 public:
  StarCountHistogram(int n, int r, const OracleGuards& guards = {});

  int n() const { return n_; }
  int r() const { return r_; }
  int edge_slots() const { return edges_; }
  std::int64_t max_star_count() const { return max_x_; }
  std::uint64_t count(std::int64_t x, int m) const;

  /// Exact law of X under G(n, p).
  DiscreteDistribution distribution(double p) const;

 private:
  int n_, r_, edges_;
  std::int64_t max_x_;
  std::vector<std::uint64_t> counts_;  // (max_x_ + 1) x (edges_ + 1)
};

/// Exact law of the r-star count of G(n, p), by exhaustive enumeration.
DiscreteDistribution exact_gnp_star_distribution(int n, double p, int r,
                                                 const OracleGuards& guards = {});

/// log P(X >= (1 + eps) mu) in G(n, p).
double exact_gnp_star_tail(int n, double p, int r, double eps, const OracleGuards& guards = {});

/// Joint law of (Y', Y'') for cutoff R.
JointDistribution exact_joint_YpYpp(std::int64_t n, std::int64_t N, double p, int r,
                                    std::int64_t R, const OracleGuards& guards = {});

struct NegativeAssociationCheck {
  std::int64_t pairs_checked = 0;
  std::int64_t violations = 0;
  double worst_excess = 0.0;  ///< max over (t, u) of joint - product

  bool operator==(const NegativeAssociationCheck&) const = default;
};

/// Checks P(Y' >= t, Y'' >= u) <= P(Y' >= t) P(Y'' >= u) + slack for every
/// (t, u) on the joint support grid.
NegativeAssociationCheck check_negative_association(const JointDistribution& joint,
                                                    double slack = 1e-12);

}  // namespace startail

#endif  // STARTAIL_EXACT_ORACLES_HPP
