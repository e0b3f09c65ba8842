#ifndef STARTAIL_RATE_CORE_HPP
#define STARTAIL_RATE_CORE_HPP

// Closed-form rate functions, tail bounds and finite-n quantities for the
// upper tail of r-star counts X = sum_i C(d_i, r) in G(n, p).
//
// Everything here is a pure function of its arguments. Probabilities and
// bounds are natural logarithms unless a name says otherwise.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace startail {

/// Problem instance (r, n, p) with its derived means.
struct StarParams {
  int r = 2;
  std::int64_t n = 0;
  double p = 0.0;
  std::int64_t N = 0;  ///< trials per i.i.d. binomial, n - 1 unless overridden
  double mu = 0.0;     ///< n C(n-1, r) p^r, the expected star count
  double nu = 0.0;     ///< n C(N, r) p^r, the expected i.i.d. sum
  double rho = 0.0;    ///< mu / C(n, r)

  /// Validates r >= 2, n > r, 0 < p < 1 and N >= 1, then fills the derived
  /// fields. Throws std::invalid_argument naming the offending field.
  static StarParams make(int r, std::int64_t n, double p,
                         std::optional<std::int64_t> N = std::nullopt);

  bool operator==(const StarParams&) const = default;
};

namespace regime {
struct PoissonTransition {
  double c = 0.0;  ///< finite-n proxy for lim mu / log^{r/(r-1)} n

  bool operator==(const PoissonTransition&) const = default;
};
struct Intermediate {
  bool operator==(const Intermediate&) const = default;
};
struct Fractional {
  double rho = 0.0;

  bool operator==(const Fractional&) const = default;
};
struct Dense {
  bool operator==(const Dense&) const = default;
};
}  // namespace regime

using RegimeTag = std::variant<regime::PoissonTransition, regime::Intermediate,
                               regime::Fractional, regime::Dense>;

std::string regime_name(const RegimeTag& tag);

enum class BoundSource { Chernoff, WeakChernoff, BinomLower, Warnke };

std::string bound_source_name(BoundSource s);

struct BoundReport {
  double log_upper = 0.0;
  double log_lower = 0.0;  ///< may be -inf
  BoundSource source = BoundSource::WeakChernoff;

  bool operator==(const BoundReport&) const = default;
};

/// phi(eps) = (1 + eps) log(1 + eps) - eps. Throws std::domain_error for
/// eps < 0.
double phi(double eps);

/// psi_r(delta) = (r! delta)^{1/r} / r.
double psi(int r, double delta);

/// Relative entropy H_p(lambda) of Bernoulli(lambda) w.r.t. Bernoulli(p),
/// extended to the endpoints by continuity (0 log 0 = 0, +inf where the
/// support condition fails).
double entropy_hp(double p, double lambda);

/// Order of magnitude Phi_n of the log-tail, with the three-case formula
/// evaluated at the exact finite-n thresholds.
double phi_order(const StarParams& params);

/// Asymptotic rate -log P(X >= (1 + eps) mu) for the case selected by tag.
/// Throws std::invalid_argument if the tag carries an out-of-range scalar.
double star_rate_asymptotic(const StarParams& params, double eps, const RegimeTag& tag);

/// Finite-n regime proxy. window > 1 is the multiplicative band that counts
/// as "tends to a constant".
RegimeTag classify_regime(const StarParams& params, double window = 4.0);

/// One-sided values of the fractional-regime rate at x = eps * rho. The
/// formula's coefficient {x}^{1/r} + floor(x) is evaluated from both sides
/// when x is within tol of an integer.
struct FractionalSides {
  double value = 0.0;
  double left = 0.0;
  double right = 0.0;
  bool at_integer = false;

  bool operator==(const FractionalSides&) const = default;
};
FractionalSides fractional_rate_sides(const StarParams& params, double eps, double rho,
                                      double tol = 1e-9);

/// All four case values plus the selected one.
struct RateReport {
  RegimeTag tag;
  double phi_n = 0.0;
  double poisson_c = 0.0;
  double poisson_value = 0.0;
  double intermediate_value = 0.0;
  FractionalSides fractional;
  double dense_value = 0.0;
  double selected = 0.0;

  bool operator==(const RateReport&) const = default;
};
RateReport rate_report(const StarParams& params, double eps, double window = 4.0);

/// Psi(delta) of the unified rate: the localized cost of an excess
/// delta * mu carried by hubs.
double unified_psi(const StarParams& params, double delta);

struct UnifiedRate {
  double delta_min = 0.0;
  double value = 0.0;

  bool operator==(const UnifiedRate&) const = default;
};

/// min over delta in [0, eps] of phi(eps - delta) mu + Psi(delta), by a
/// uniform scan with `grid` cells followed by golden-section refinement in
/// the best cell and evaluation at every floor jump of Psi.
UnifiedRate unified_rate(const StarParams& params, double eps, int grid = 10000);

/// Weak Chernoff bound -t log(t / (e n p)). Non-negative values are vacuous.
double chernoff_upper_log(std::int64_t n, double p, double t);

inline bool is_vacuous(double log_bound) { return log_bound >= 0.0; }

/// Full Chernoff bound -n H_p(t/n) for t in [np, n].
double chernoff_entropy_upper_log(std::int64_t n, double p, double t);

/// log[C(n,k) p^k (1-p)^{n-k}], a lower bound on log P(Bin(n,p) >= k).
double binom_point_lower_log(std::int64_t n, double p, std::int64_t k);

/// Upper and lower bound on log P(Bin(n,p) >= k) in one report.
BoundReport binomial_tail_bounds(std::int64_t n, double p, std::int64_t k);

/// -phi(t/mu) mu / C.
double warnke_bound_log(double mu, double t, double C);

/// S = (floor(x) + {x}^{1/r}) N with x = r! eps nu / N^r.
double large_value_threshold(const StarParams& params, double eps);

struct ReductionQuantities {
  double delta_n = 0.0;
  double Delta_n = 0.0;
  double S = 0.0;

  bool operator==(const ReductionQuantities&) const = default;
};

/// delta_n, Delta_n and S. Throws std::domain_error when
/// (log n + Phi_n) / (n p) <= 1.
ReductionQuantities reduction_quantities(const StarParams& params, double C, double eps);

}  // namespace startail

#endif  // STARTAIL_RATE_CORE_HPP
