#ifndef STARTAIL_DISTRIBUTION_HPP
#define STARTAIL_DISTRIBUTION_HPP

#include <cstdint>
#include <ostream>
#include <vector>

namespace startail {

/// Smallest integer k with k >= t, treating values within a relative 1e-9
/// of an integer as that integer so thresholds like (1 + eps) mu that are
/// mathematically integral stay integral.
std::int64_t first_integer_at_least(double t);

/// Log-space probability mass function on an increasing integer support.
/// Points of zero mass are not stored.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;

  /// From parallel arrays; support must be strictly increasing.
  DiscreteDistribution(std::vector<std::int64_t> support, std::vector<double> log_mass);

  /// From a dense log pmf over 0, 1, ..., dense.size() - 1.
  static DiscreteDistribution from_dense(const std::vector<double>& dense);

  const std::vector<std::int64_t>& support() const { return support_; }
  const std::vector<double>& log_mass() const { return log_mass_; }
  std::size_t size() const { return support_.size(); }
  bool empty() const { return support_.empty(); }

  double log_total() const;
  double mean() const;

  /// log P(V >= threshold) for a real threshold.
  double log_tail(double threshold) const;

  /// log P(V = v); -inf off the support.
  double log_pmf(std::int64_t v) const;

  /// Dense log pmf over 0 .. max(support). Requires a non-negative support.
  std::vector<double> to_dense() const;

  void write_csv(std::ostream& out) const;

  bool operator==(const DiscreteDistribution&) const = default;

 private:
  std::vector<std::int64_t> support_;
  std::vector<double> log_mass_;
};

/// Dense log-space convolution of two pmfs indexed from 0. Entries equal to
/// -inf are skipped; each output cell is accumulated with its own max shift.
std::vector<double> log_convolve(const std::vector<double>& a, const std::vector<double>& b);

/// n-fold convolution power by repeated squaring.
std::vector<double> log_convolve_power(const std::vector<double>& base, std::int64_t n);

/// Joint log pmf of a pair of non-negative integer variables on a dense
/// rows x cols grid, row-major.
class JointDistribution {
 public:
  JointDistribution() = default;
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> log_mass);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double log_mass(std::size_t a, std::size_t b) const { return log_mass_[a * cols_ + b]; }
  const std::vector<double>& log_mass() const { return log_mass_; }

  /// P(A >= t, B >= u), P(A >= t), P(B >= u) in linear space.
  double joint_tail(std::int64_t t, std::int64_t u) const;
  double first_tail(std::int64_t t) const;
  double second_tail(std::int64_t u) const;

  DiscreteDistribution first_marginal() const;
  DiscreteDistribution second_marginal() const;

 private:
  void build_tails();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> log_mass_;
  std::vector<long double> suffix_;  // (rows + 1) x (cols + 1)
};

/// 2-D log-space convolution of two row-major grids.
std::vector<double> log_convolve_2d(const std::vector<double>& a, std::size_t arows,
                                    std::size_t acols, const std::vector<double>& b,
                                    std::size_t brows, std::size_t bcols);

}  // namespace startail

#endif  // STARTAIL_DISTRIBUTION_HPP
