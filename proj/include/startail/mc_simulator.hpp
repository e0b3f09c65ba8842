#ifndef STARTAIL_MC_SIMULATOR_HPP
#define STARTAIL_MC_SIMULATOR_HPP

// Seeded Monte-Carlo estimators of upper-tail probabilities of star counts.
//
// Every sample draws from its own counter-based stream keyed by
// (seed, estimator stream, sample index). Samples are grouped in fixed-size
// blocks, block partial sums are reduced in block order, and so results do
// not depend on the number of workers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "startail/distribution.hpp"
#include "startail/exact_oracles.hpp"
#include "startail/rate_core.hpp"
#include "startail/rng.hpp"

namespace startail {

enum class EstimatorKind { Naive, Tilted, Planted };
std::string estimator_name(EstimatorKind k);

/// Whether the naive estimator samples G(n, p) degrees or n i.i.d. Bin(N, p).
enum class SampleMode { Gnp, Iid };

struct TailEstimate {
  double estimate = 0.0;
  double log_estimate = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  EstimatorKind estimator = EstimatorKind::Naive;
  std::uint64_t seed = 0;
  std::int64_t hits = 0;       ///< samples that reached the threshold
  double wilson_lower = 0.0;   ///< 95% Wilson interval (naive only)
  double wilson_upper = 0.0;

  bool operator==(const TailEstimate&) const = default;
};

struct SimulationOptions {
  int workers = 0;                 ///< 0 means default_workers()
  std::int64_t block_size = 4096;  ///< part of the result's identity; keep fixed
};

/// STARTAIL_THREADS if set and positive, else the hardware concurrency.
int default_workers();

/// Degree sequence of one G(n, p) draw.
DegreeSequence sample_gnp_degrees(int n, double p, CounterRng& rng);

std::int64_t star_count(std::span<const int> degrees, int r);

struct SplitSum {
  std::int64_t below = 0;  ///< Y'
  std::int64_t above = 0;  ///< Y''
};

/// Split of sum_i C(x_i, r) by x_i <= R versus x_i > R.
SplitSum split_sum(std::span<const int> values, int r, std::int64_t R);

/// Naive estimate of P(X >= (1 + eps) mu) (Gnp mode) or of
/// P(Y >= (1 + eps) nu) with Y built from params.N (Iid mode).
TailEstimate naive_tail(const StarParams& params, double eps, std::int64_t samples,
                        std::uint64_t seed, SampleMode mode = SampleMode::Gnp,
                        const SimulationOptions& options = {});

/// Law of Z = X 1{X <= R}, X ~ Bin(N, p), and its exponential tilt by
/// h C(Z, r).
struct TiltedBinomial {
  std::int64_t N = 0;
  double p = 0.0;
  int r = 2;
  double h = 0.0;
  std::int64_t R = 0;
  DiscreteDistribution zeta;  ///< untilted masses zeta_j, j = 0..min(R, N)
  double log_Lambda = 0.0;    ///< log sum_j e^{h C(j, r)} zeta_j

  static TiltedBinomial make(std::int64_t N, double p, int r, double h, std::int64_t R);

  /// Lambda'(h): mean of C(Z, r) under the tilted law.
  double tilted_mean() const;
};

struct CutoffChoice {
  std::int64_t R = 0;
  double eta = 0.0;
  double M = 0.0;
  bool clamped = false;  ///< ceil(eta M) < r, raised to r

  bool operator==(const CutoffChoice&) const = default;
};

/// R = max(r, ceil(eta M)) with eta = log(1/p)^{-2}, M = min((r! eps nu)^{1/r}, N).
CutoffChoice default_cutoff(std::int64_t n, std::int64_t N, double p, int r, double eps);

struct TiltedConfig {
  std::int64_t n = 0;
  std::int64_t N = 0;
  double p = 0.0;
  int r = 2;
  double eps = 0.0;
  std::optional<std::int64_t> R;  ///< default_cutoff when unset
  std::optional<double> h;        ///< log(1 + eps) when unset
  bool optimize_h = false;        ///< solve Lambda'(h) = t instead
};

/// Tilt solving Lambda'(h) = (1 + eps) C(N, r) p^r; nullopt if unreachable.
std::optional<double> optimal_tilt(std::int64_t N, double p, int r, std::int64_t R, double eps);

/// Chernoff-type bound n (Lambda(h) - h t) on log P(Y' >= n t),
/// t = (1 + eps) C(N, r) p^r.
double exponential_moment_bound_log(const TiltedBinomial& tilt, std::int64_t n, double eps);

struct TiltedReport {
  TailEstimate estimate;
  TiltedBinomial tilt;
  CutoffChoice cutoff;
  std::int64_t threshold = 0;
};

/// Importance-sampling estimate of P(Y' >= (1 + eps) nu).
TiltedReport tilted_tail(const TiltedConfig& config, std::int64_t samples, std::uint64_t seed,
                         const SimulationOptions& options = {});

struct PlantedConfig {
  std::int64_t a = 0;   ///< hubs of full degree
  double b = 0.0;       ///< degree threshold of the partial hub
  std::int64_t b_ceil = 0;
  double delta = 0.0;
  std::string b_case;   ///< "rho=0", "rho finite" or "rho=inf"

  bool operator==(const PlantedConfig&) const = default;
};

PlantedConfig planted_config(const StarParams& params, double eps, double delta,
                             double window = 4.0);

struct PlantedReport {
  TailEstimate estimate;              ///< certified lower bound on the tail
  PlantedConfig config;
  double log_exact_factor = 0.0;      ///< log P(planted event)
  double typical_threshold = 0.0;       ///< (1 - delta/2) mu_hat
  double residual_threshold = 0.0;    ///< threshold used for the certified bound
  TailEstimate residual;              ///< P(X_hat >= residual_threshold)
  TailEstimate residual_typical;      ///< P(X_hat >= (1 - delta/2) mu_hat)
};

/// Lower bound P(A) P(X_hat >= tau) on P(X >= (1 + eps) mu), where A plants
/// a full hubs and one hub of degree >= ceil(b), and X_hat counts stars in the
/// graph on the remaining n - a - 1 vertices. tau is the larger of
/// (1 - delta/2) mu_hat and the residual count that makes A imply the tail.
PlantedReport planted_tail_lower(const StarParams& params, double eps, double delta,
                                 std::int64_t samples, std::uint64_t seed,
                                 const SimulationOptions& options = {}, double window = 4.0);

struct NaCheck {
  double lhs = 0.0;  ///< P(Y' >= t, Y'' >= u)
  double rhs = 0.0;  ///< P(Y' >= t) P(Y'' >= u)
  double z = 0.0;    ///< (lhs - rhs) / se
  double p_first = 0.0;
  double p_second = 0.0;
  std::int64_t samples = 0;

  bool operator==(const NaCheck&) const = default;
};

NaCheck na_empirical_check(std::int64_t n, std::int64_t N, double p, int r, std::int64_t R,
                           double t, double u, std::int64_t samples, std::uint64_t seed,
                           const SimulationOptions& options = {});

struct RateComparison {
  double neg_log_estimate = 0.0;
  double prediction = 0.0;
  double phi_n = 0.0;
  double ratio_to_prediction = 0.0;
  double ratio_to_phi_n = 0.0;
  std::string regime;
  double mu = 0.0;

  bool operator==(const RateComparison&) const = default;
};

/// Compares -log(estimate) against the asymptotic rate for the classified
/// regime. Diagnostic only. Throws std::invalid_argument if estimate <= 0.
RateComparison rate_comparison(const StarParams& params, double eps, const TailEstimate& estimate,
                               double window = 4.0);

}  // namespace startail

#endif  // STARTAIL_MC_SIMULATOR_HPP
