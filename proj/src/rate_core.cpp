#include "startail/rate_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "startail/numerics.hpp"
#include "startail/variational.hpp"

namespace startail {

StarParams StarParams::make(int r, std::int64_t n, double p, std::optional<std::int64_t> N) {
  if (r < 2) throw std::invalid_argument("invalid r: must be >= 2");
  if (n <= r) throw std::invalid_argument("invalid n: must exceed r");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("invalid p: must lie in (0, 1)");
  StarParams s;
  s.r = r;
  s.n = n;
  s.p = p;
  s.N = N.value_or(n - 1);
  if (s.N < 1) throw std::invalid_argument("invalid N: must be >= 1");
  const double pr = std::pow(p, r);
  s.mu = static_cast<double>(n) * binom_real(n - 1, r) * pr;
  s.nu = static_cast<double>(n) * binom_real(s.N, r) * pr;
  s.rho = s.mu / binom_real(n, r);
  return s;
}

std::string regime_name(const RegimeTag& tag) {
  struct Visitor {
    std::string operator()(const regime::PoissonTransition&) const { return "PoissonTransition"; }
    std::string operator()(const regime::Intermediate&) const { return "Intermediate"; }
    std::string operator()(const regime::Fractional&) const { return "Fractional"; }
    std::string operator()(const regime::Dense&) const { return "Dense"; }
  };
  return std::visit(Visitor{}, tag);
}

std::string bound_source_name(BoundSource s) {
  switch (s) {
    case BoundSource::Chernoff: return "Chernoff";
    case BoundSource::WeakChernoff: return "WeakChernoff";
    case BoundSource::BinomLower: return "BinomLower";
    case BoundSource::Warnke: return "Warnke";
  }
  return "unknown";
}

double phi(double eps) {
  if (!(eps >= 0.0)) throw std::domain_error("phi: eps must be >= 0");
  if (eps == kInf) return kInf;
  return (1.0 + eps) * std::log1p(eps) - eps;
}

double psi(int r, double delta) {
  if (r < 2) throw std::domain_error("psi: r must be >= 2");
  if (!(delta >= 0.0)) throw std::domain_error("psi: delta must be >= 0");
  return std::pow(factorial(r) * delta, 1.0 / r) / r;
}

double entropy_hp(double p, double lambda) {
  if (!(p >= 0.0 && p <= 1.0 && lambda >= 0.0 && lambda <= 1.0)) {
    throw std::domain_error("entropy_hp: arguments must lie in [0, 1]");
  }
  auto term = [](double x, double q) {
    if (x == 0.0) return 0.0;
    if (q == 0.0) return kInf;
    return x * std::log(x / q);
  };
  return term(lambda, p) + term(1.0 - lambda, 1.0 - p);
}

double phi_order(const StarParams& s) {
  const double n = static_cast<double>(s.n);
  const double r = s.r;
  const double logn = std::log(n);
  const double first = std::pow(n, -1.0 - 1.0 / r) * std::pow(logn, 1.0 / (r - 1.0));
  const double second = std::pow(n, -1.0 / r);
  if (s.p <= first) return std::pow(n, r + 1.0) * std::pow(s.p, r);
  if (s.p <= second) return std::pow(n, 1.0 + 1.0 / r) * s.p * logn;
  return n * n * std::pow(s.p, r) * std::log(1.0 / s.p);
}

namespace {

double fractional_coefficient(double x, int r) {
  return std::pow(frac(x), 1.0 / r) + std::floor(x);
}

double poisson_c(const StarParams& s) {
  return s.mu / std::pow(std::log(static_cast<double>(s.n)), s.r / (s.r - 1.0));
}

}  // namespace

FractionalSides fractional_rate_sides(const StarParams& s, double eps, double rho, double tol) {
  const double n = static_cast<double>(s.n);
  const double scale = n * std::log(n) / s.r;
  const double x = eps * rho;
  FractionalSides out;
  out.value = fractional_coefficient(x, s.r) * scale;
  out.left = out.right = out.value;
  if (near_integer(x, tol)) {
    const double k = std::nearbyint(x);
    out.at_integer = true;
    out.left = k * scale;   // {x} -> 1, floor(x) = k - 1
    out.right = k * scale;  // {x} = 0, floor(x) = k
    out.value = out.right;
  }
  return out;
}

double star_rate_asymptotic(const StarParams& s, double eps, const RegimeTag& tag) {
  if (!(eps > 0.0)) throw std::invalid_argument("invalid eps: must be > 0");
  const double n = static_cast<double>(s.n);
  const double logn = std::log(n);
  struct Visitor {
    const StarParams& s;
    double eps, n, logn;
    double operator()(const regime::PoissonTransition& t) const {
      if (!(t.c >= 0.0) || !std::isfinite(t.c)) {
        throw std::invalid_argument("PoissonTransition tag needs a finite c >= 0");
      }
      return solve(t.c, eps, s.r).value * s.mu;
    }
    double operator()(const regime::Intermediate&) const {
      return psi(s.r, eps) * std::pow(s.mu, 1.0 / s.r) * logn;
    }
    double operator()(const regime::Fractional& t) const {
      if (!(t.rho > 0.0) || !std::isfinite(t.rho)) {
        throw std::invalid_argument("Fractional tag needs a finite rho > 0");
      }
      return fractional_rate_sides(s, eps, t.rho).value;
    }
    double operator()(const regime::Dense&) const {
      return eps * n * n * std::pow(s.p, s.r) * std::log(1.0 / s.p);
    }
  };
  return std::visit(Visitor{s, eps, n, logn}, tag);
}

RegimeTag classify_regime(const StarParams& s, double window) {
  if (!(window > 1.0)) throw std::invalid_argument("invalid window: must be > 1");
  const double q1 = poisson_c(s);
  if (q1 <= window) return regime::PoissonTransition{q1};
  if (s.rho >= 1.0 / window && s.rho <= window) return regime::Fractional{s.rho};
  if (s.rho > window) return regime::Dense{};
  return regime::Intermediate{};
}

RateReport rate_report(const StarParams& s, double eps, double window) {
  RateReport rep;
  rep.tag = classify_regime(s, window);
  rep.phi_n = phi_order(s);
  rep.poisson_c = poisson_c(s);
  rep.poisson_value = star_rate_asymptotic(s, eps, regime::PoissonTransition{rep.poisson_c});
  rep.intermediate_value = star_rate_asymptotic(s, eps, regime::Intermediate{});
  rep.fractional = fractional_rate_sides(s, eps, s.rho);
  rep.dense_value = star_rate_asymptotic(s, eps, regime::Dense{});
  rep.selected = star_rate_asymptotic(s, eps, rep.tag);
  return rep;
}

double unified_psi(const StarParams& s, double delta) {
  const double n = static_cast<double>(s.n);
  const double x = delta * s.mu / binom_real(s.n, s.r);
  return std::pow(frac(x), 1.0 / s.r) * n * std::log(n) / s.r +
         n * std::floor(x) * std::log(1.0 / s.p);
}

UnifiedRate unified_rate(const StarParams& s, double eps, int grid) {
  if (!(eps > 0.0)) throw std::invalid_argument("invalid eps: must be > 0");
  if (grid < 2) throw std::invalid_argument("invalid grid: must be >= 2");
  auto objective = [&](double delta) {
    delta = std::clamp(delta, 0.0, eps);
    return phi(eps - delta) * s.mu + unified_psi(s, delta);
  };

  UnifiedRate best{0.0, objective(0.0)};
  int best_i = 0;
  for (int i = 1; i <= grid; ++i) {
    const double d = eps * i / grid;
    const double v = objective(d);
    if (v < best.value) {
      best = {d, v};
      best_i = i;
    }
  }

  const double lo = eps * std::max(best_i - 1, 0) / grid;
  const double hi = eps * std::min(best_i + 1, grid) / grid;
  const auto refined = golden_section_min(objective, lo, hi, 1e-13 * std::max(eps, 1.0));
  if (refined.value < best.value) best = {refined.x, refined.value};

  // Psi jumps at delta_k = k C(n,r) / mu; the right-continuous values there
  // are attained and may be missed by the scan.
  const double step = binom_real(s.n, s.r) / s.mu;
  if (std::isfinite(step) && step > 0.0) {
    for (double k = 1.0; k * step <= eps && k < 1e6; k += 1.0) {
      const double v = objective(k * step);
      if (v < best.value) best = {k * step, v};
    }
  }
  return best;
}

double chernoff_upper_log(std::int64_t n, double p, double t) {
  if (!(t > 0.0)) throw std::domain_error("chernoff_upper_log: t must be > 0");
  const double np = static_cast<double>(n) * p;
  return -t * (std::log(t / np) - 1.0);
}

double chernoff_entropy_upper_log(std::int64_t n, double p, double t) {
  const double lambda = t / static_cast<double>(n);
  if (lambda <= p) return 0.0;
  if (lambda > 1.0) return kNegInf;
  return -static_cast<double>(n) * entropy_hp(p, lambda);
}

double binom_point_lower_log(std::int64_t n, double p, std::int64_t k) {
  if (k < 0 || k > n) throw std::domain_error("binom_point_lower_log: k must lie in [0, n]");
  const double kd = static_cast<double>(k);
  const double tail = static_cast<double>(n - k);
  double out = log_binom(n, k);
  if (k > 0) out += kd * std::log(p);
  if (n > k) out += tail * std::log1p(-p);
  return out;
}

BoundReport binomial_tail_bounds(std::int64_t n, double p, std::int64_t k) {
  BoundReport rep;
  rep.source = BoundSource::WeakChernoff;
  rep.log_upper = k > 0 ? std::min(0.0, chernoff_upper_log(n, p, static_cast<double>(k))) : 0.0;
  if (k > n) {
    rep.log_lower = kNegInf;
  } else {
    rep.log_lower = binom_point_lower_log(n, p, std::max<std::int64_t>(k, 0));
  }
  return rep;
}

double warnke_bound_log(double mu, double t, double C) {
  if (!(mu > 0.0 && t > 0.0 && C > 0.0)) {
    throw std::domain_error("warnke_bound_log: arguments must be positive");
  }
  return -phi(t / mu) * mu / C;
}

double large_value_threshold(const StarParams& s, double eps) {
  const double Nd = static_cast<double>(s.N);
  double x = factorial(s.r) * eps * s.nu / std::pow(Nd, s.r);
  if (near_integer(x, 1e-12 * std::max(1.0, x))) x = std::nearbyint(x);
  return (std::floor(x) + std::pow(frac(x), 1.0 / s.r)) * Nd;
}

ReductionQuantities reduction_quantities(const StarParams& s, double C, double eps) {
  if (!(C > 1.0)) throw std::invalid_argument("invalid C: must be > 1");
  if (!(eps > 0.0)) throw std::invalid_argument("invalid eps: must be > 0");
  const double n = static_cast<double>(s.n);
  const double Phi = phi_order(s);
  const double top = std::log(n) + Phi;
  const double ratio = top / (n * s.p);
  if (!(ratio > 1.0)) {
    throw std::domain_error(
        "reduction_quantities: (log n + Phi_n)/(n p) <= 1, outside the sparse regime");
  }
  ReductionQuantities q;
  q.delta_n = std::sqrt(2.0 * C * Phi / (binom_real(s.n, 2) * s.p));
  q.Delta_n = C * top / std::log(ratio);
  q.S = large_value_threshold(s, eps);
  return q;
}

}  // namespace startail
