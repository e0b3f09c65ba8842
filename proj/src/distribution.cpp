#include "startail/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "startail/numerics.hpp"

namespace startail {

std::int64_t first_integer_at_least(double t) {
  const double slack = 1e-9 * std::max(1.0, std::fabs(t));
  return static_cast<std::int64_t>(std::ceil(t - slack));
}

DiscreteDistribution::DiscreteDistribution(std::vector<std::int64_t> support,
                                           std::vector<double> log_mass)
    : support_(std::move(support)), log_mass_(std::move(log_mass)) {
  if (support_.size() != log_mass_.size()) {
    throw std::invalid_argument("DiscreteDistribution: support and mass sizes differ");
  }
  for (std::size_t i = 1; i < support_.size(); ++i) {
    if (support_[i] <= support_[i - 1]) {
      throw std::invalid_argument("DiscreteDistribution: support must be strictly increasing");
    }
  }
}

DiscreteDistribution DiscreteDistribution::from_dense(const std::vector<double>& dense) {
  std::vector<std::int64_t> support;
  std::vector<double> mass;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == kNegInf) continue;
    support.push_back(static_cast<std::int64_t>(i));
    mass.push_back(dense[i]);
  }
  return DiscreteDistribution(std::move(support), std::move(mass));
}

double DiscreteDistribution::log_total() const { return log_sum_exp(log_mass_); }

double DiscreteDistribution::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    s += static_cast<double>(support_[i]) * std::exp(log_mass_[i]);
  }
  return s;
}

double DiscreteDistribution::log_tail(double threshold) const {
  const std::int64_t k = first_integer_at_least(threshold);
  const auto it = std::lower_bound(support_.begin(), support_.end(), k);
  const auto first = static_cast<std::size_t>(it - support_.begin());
  return log_sum_exp(std::span<const double>(log_mass_).subspan(first));
}

double DiscreteDistribution::log_pmf(std::int64_t v) const {
  const auto it = std::lower_bound(support_.begin(), support_.end(), v);
  if (it == support_.end() || *it != v) return kNegInf;
  return log_mass_[static_cast<std::size_t>(it - support_.begin())];
}

std::vector<double> DiscreteDistribution::to_dense() const {
  if (empty()) return {};
  if (support_.front() < 0) throw std::domain_error("to_dense: negative support");
  std::vector<double> dense(static_cast<std::size_t>(support_.back()) + 1, kNegInf);
  for (std::size_t i = 0; i < size(); ++i) dense[static_cast<std::size_t>(support_[i])] = log_mass_[i];
  return dense;
}

void DiscreteDistribution::write_csv(std::ostream& out) const {
  out << "support,log_mass\n";
  char buf[64];
  for (std::size_t i = 0; i < size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", log_mass_[i]);
    out << support_[i] << ',' << buf << '\n';
  }
}

namespace {

std::vector<std::size_t> finite_indices(const std::vector<double>& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != kNegInf) idx.push_back(i);
  }
  return idx;
}

}  // namespace

std::vector<double> log_convolve(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const auto ia = finite_indices(a);
  const auto ib = finite_indices(b);
  std::vector<double> peak(len, kNegInf);
  for (std::size_t i : ia) {
    for (std::size_t j : ib) peak[i + j] = std::max(peak[i + j], a[i] + b[j]);
  }
  std::vector<double> acc(len, 0.0);
  for (std::size_t i : ia) {
    for (std::size_t j : ib) acc[i + j] += std::exp(a[i] + b[j] - peak[i + j]);
  }
  std::vector<double> out(len, kNegInf);
  for (std::size_t k = 0; k < len; ++k) {
    if (peak[k] != kNegInf) out[k] = peak[k] + std::log(acc[k]);
  }
  return out;
}

std::vector<double> log_convolve_power(const std::vector<double>& base, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("log_convolve_power: negative power");
  std::vector<double> result{0.0};
  std::vector<double> sq = base;
  while (n > 0) {
    if (n & 1) result = log_convolve(result, sq);
    n >>= 1;
    if (n > 0) sq = log_convolve(sq, sq);
  }
  return result;
}

std::vector<double> log_convolve_2d(const std::vector<double>& a, std::size_t arows,
                                    std::size_t acols, const std::vector<double>& b,
                                    std::size_t brows, std::size_t bcols) {
  const std::size_t rows = arows + brows - 1;
  const std::size_t cols = acols + bcols - 1;
  const auto ia = finite_indices(a);
  const auto ib = finite_indices(b);
  auto out_index = [&](std::size_t i, std::size_t j) {
    return (i / acols + j / bcols) * cols + (i % acols + j % bcols);
  };
  std::vector<double> peak(rows * cols, kNegInf);
  for (std::size_t i : ia) {
    for (std::size_t j : ib) {
      const std::size_t k = out_index(i, j);
      peak[k] = std::max(peak[k], a[i] + b[j]);
    }
  }
  std::vector<double> acc(rows * cols, 0.0);
  for (std::size_t i : ia) {
    for (std::size_t j : ib) {
      const std::size_t k = out_index(i, j);
      acc[k] += std::exp(a[i] + b[j] - peak[k]);
    }
  }
  std::vector<double> out(rows * cols, kNegInf);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (peak[k] != kNegInf) out[k] = peak[k] + std::log(acc[k]);
  }
  return out;
}

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> log_mass)
    : rows_(rows), cols_(cols), log_mass_(std::move(log_mass)) {
  if (log_mass_.size() != rows_ * cols_) {
    throw std::invalid_argument("JointDistribution: grid size mismatch");
  }
  build_tails();
}

void JointDistribution::build_tails() {
  const std::size_t w = cols_ + 1;
  suffix_.assign((rows_ + 1) * w, 0.0L);
  for (std::size_t a = rows_; a-- > 0;) {
    for (std::size_t b = cols_; b-- > 0;) {
      const double lm = log_mass_[a * cols_ + b];
      const long double m = lm == kNegInf ? 0.0L : std::exp(static_cast<long double>(lm));
      suffix_[a * w + b] = m + suffix_[(a + 1) * w + b] + suffix_[a * w + b + 1] -
                           suffix_[(a + 1) * w + b + 1];
    }
  }
}

double JointDistribution::joint_tail(std::int64_t t, std::int64_t u) const {
  const auto a = static_cast<std::size_t>(std::clamp<std::int64_t>(t, 0, static_cast<std::int64_t>(rows_)));
  const auto b = static_cast<std::size_t>(std::clamp<std::int64_t>(u, 0, static_cast<std::int64_t>(cols_)));
  return static_cast<double>(std::max(0.0L, suffix_[a * (cols_ + 1) + b]));
}

double JointDistribution::first_tail(std::int64_t t) const { return joint_tail(t, 0); }
double JointDistribution::second_tail(std::int64_t u) const { return joint_tail(0, u); }

DiscreteDistribution JointDistribution::first_marginal() const {
  std::vector<double> dense(rows_, kNegInf);
  for (std::size_t a = 0; a < rows_; ++a) {
    dense[a] = log_sum_exp(std::span<const double>(log_mass_).subspan(a * cols_, cols_));
  }
  return DiscreteDistribution::from_dense(dense);
}

DiscreteDistribution JointDistribution::second_marginal() const {
  std::vector<double> dense(cols_, kNegInf);
  std::vector<double> column(rows_);
  for (std::size_t b = 0; b < cols_; ++b) {
    for (std::size_t a = 0; a < rows_; ++a) column[a] = log_mass_[a * cols_ + b];
    dense[b] = log_sum_exp(column);
  }
  return DiscreteDistribution::from_dense(dense);
}

}  // namespace startail
