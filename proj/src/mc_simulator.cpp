#include "startail/mc_simulator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "startail/numerics.hpp"

namespace startail {

namespace {

enum Stream : std::uint64_t { kNaiveStream = 0, kTiltedStream = 1, kPlantedStream = 2, kNaStream = 3 };

template <class Acc, class Fn>
Acc run_blocks(std::int64_t samples, const SimulationOptions& opt, Fn&& fn) {
  const std::int64_t bs = opt.block_size > 0 ? opt.block_size : 4096;
  const std::int64_t nblocks = (samples + bs - 1) / bs;
  std::vector<Acc> parts(static_cast<std::size_t>(nblocks));
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      parts[static_cast<std::size_t>(b)] = fn(b * bs, std::min(samples, (b + 1) * bs));
    }
  };
  const std::int64_t workers =
      std::clamp<std::int64_t>(opt.workers > 0 ? opt.workers : default_workers(), 1, std::max<std::int64_t>(nblocks, 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  Acc total{};
  for (const auto& p : parts) total.merge(p);
  return total;
}

struct HitCounts {
  std::array<std::int64_t, 2> hits{};
  void merge(const HitCounts& o) {
    hits[0] += o.hits[0];
    hits[1] += o.hits[1];
  }
};

struct WeightSums {
  std::int64_t hits = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  void merge(const WeightSums& o) {
    hits += o.hits;
    s1 += o.s1;
    s2 += o.s2;
  }
};

struct NaCounts {
  std::int64_t first = 0, second = 0, both = 0;
  void merge(const NaCounts& o) {
    first += o.first;
    second += o.second;
    both += o.both;
  }
};

std::vector<std::int64_t> binom_table(std::int64_t top, int r) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(top) + 1);
  for (std::int64_t d = 0; d <= top; ++d) t[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(binom_exact(d, r));
  return t;
}

// Inverse-CDF sampler on 0..K for a small finite pmf.
class TableSampler {
 public:
  explicit TableSampler(const std::vector<double>& probs) : cdf_(probs.size()) {
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      acc += probs[k];
      cdf_[k] = acc;
      if (probs[k] > 0.0) last_ = static_cast<int>(k);
    }
  }
  int draw(CounterRng& rng) const {
    const double u = rng.uniform() * cdf_.back();
    const auto k = static_cast<int>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
    return std::min(k, last_);
  }

 private:
  std::vector<double> cdf_;
  int last_ = 0;
};

std::vector<double> binomial_probs(std::int64_t N, double p) {
  const auto dense = exact_binomial_pmf(N, p).to_dense();
  std::vector<double> probs(static_cast<std::size_t>(N) + 1, 0.0);
  for (std::size_t k = 0; k < dense.size(); ++k) probs[k] = std::exp(dense[k]);
  return probs;
}

constexpr double kWilsonZ = 1.959963984540054;

TailEstimate make_naive_estimate(std::int64_t hits, std::int64_t samples, std::uint64_t seed,
                                 EstimatorKind kind) {
  TailEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.estimator = kind;
  est.hits = hits;
  const double s = static_cast<double>(samples);
  const double ph = static_cast<double>(hits) / s;
  est.estimate = ph;
  est.log_estimate = hits > 0 ? std::log(ph) : kNegInf;
  est.std_error = std::sqrt(ph * (1.0 - ph) / s);
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / s;
  const double center = (ph + z2 / (2.0 * s)) / denom;
  const double half = kWilsonZ / denom * std::sqrt(ph * (1.0 - ph) / s + z2 / (4.0 * s * s));
  est.wilson_lower = std::max(0.0, center - half);
  est.wilson_upper = std::min(1.0, center + half);
  return est;
}

void fill_gnp_degrees(int n, double p, CounterRng& rng, std::vector<int>& deg) {
  std::fill(deg.begin(), deg.end(), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      }
    }
  }
}

// Hit counts of X >= k0 and X >= k1 over G(n, p) draws on one stream.
HitCounts gnp_hits(int n, double p, int r, std::int64_t k0, std::int64_t k1, std::int64_t samples,
                   std::uint64_t seed, std::uint64_t stream, const SimulationOptions& opt) {
  const auto table = binom_table(std::max(n - 1, 0), r);
  return run_blocks<HitCounts>(samples, opt, [&](std::int64_t begin, std::int64_t end) {
    HitCounts acc;
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (std::int64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, stream, static_cast<std::uint64_t>(i));
      fill_gnp_degrees(n, p, rng, deg);
      std::int64_t x = 0;
      for (int d : deg) x += table[static_cast<std::size_t>(d)];
      acc.hits[0] += x >= k0;
      acc.hits[1] += x >= k1;
    }
    return acc;
  });
}

void check_samples(std::int64_t samples) {
  if (samples < 1) throw std::invalid_argument("invalid samples: must be >= 1");
}

}  // namespace

std::string estimator_name(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::Naive: return "Naive";
    case EstimatorKind::Tilted: return "Tilted";
    case EstimatorKind::Planted: return "Planted";
  }
  return "unknown";
}

int default_workers() {
  if (const char* env = std::getenv("STARTAIL_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

DegreeSequence sample_gnp_degrees(int n, double p, CounterRng& rng) {
  std::vector<int> deg(static_cast<std::size_t>(std::max(n, 0)));
  fill_gnp_degrees(n, p, rng, deg);
  return DegreeSequence(std::move(deg));
}

std::int64_t star_count(std::span<const int> degrees, int r) {
  std::int64_t x = 0;
  for (int d : degrees) x += static_cast<std::int64_t>(binom_exact(d, r));
  return x;
}

SplitSum split_sum(std::span<const int> values, int r, std::int64_t R) {
  SplitSum s;
  for (int v : values) {
    const auto c = static_cast<std::int64_t>(binom_exact(v, r));
    (v <= R ? s.below : s.above) += c;
  }
  return s;
}

TailEstimate naive_tail(const StarParams& params, double eps, std::int64_t samples,
                        std::uint64_t seed, SampleMode mode, const SimulationOptions& options) {
  check_samples(samples);
  const int r = params.r;
  if (mode == SampleMode::Gnp) {
    const std::int64_t k = first_integer_at_least((1.0 + eps) * params.mu);
    const auto counts = gnp_hits(static_cast<int>(params.n), params.p, r, k, k, samples, seed,
                                 kNaiveStream, options);
    return make_naive_estimate(counts.hits[0], samples, seed, EstimatorKind::Naive);
  }

  const std::int64_t k = first_integer_at_least((1.0 + eps) * params.nu);
  const TableSampler sampler(binomial_probs(params.N, params.p));
  const auto table = binom_table(params.N, r);
  const auto n = params.n;
  const auto counts = run_blocks<HitCounts>(samples, options, [&](std::int64_t begin, std::int64_t end) {
    HitCounts acc;
    for (std::int64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, kNaiveStream, static_cast<std::uint64_t>(i));
      std::int64_t y = 0;
      for (std::int64_t j = 0; j < n; ++j) y += table[static_cast<std::size_t>(sampler.draw(rng))];
      acc.hits[0] += y >= k;
    }
    return acc;
  });
  return make_naive_estimate(counts.hits[0], samples, seed, EstimatorKind::Naive);
}

TiltedBinomial TiltedBinomial::make(std::int64_t N, double p, int r, double h, std::int64_t R) {
  if (R < 0) throw std::domain_error("invalid R: must be >= 0");
  TiltedBinomial tb;
  tb.N = N;
  tb.p = p;
  tb.r = r;
  tb.h = h;
  tb.R = R;
  const auto pmf = exact_binomial_pmf(N, p).to_dense();
  const std::int64_t top = std::min(R, N);
  std::vector<double> zeta(static_cast<std::size_t>(top) + 1, kNegInf);
  for (std::int64_t j = 0; j <= top && j < static_cast<std::int64_t>(pmf.size()); ++j) {
    zeta[static_cast<std::size_t>(j)] = pmf[static_cast<std::size_t>(j)];
  }
  if (R < N) {
    const auto above = std::span<const double>(pmf).subspan(static_cast<std::size_t>(R) + 1);
    zeta[0] = log_add(zeta[0], log_sum_exp(above));
  }
  std::vector<double> tilted(zeta.size());
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    tilted[j] = zeta[j] == kNegInf ? kNegInf : h * binom_real(static_cast<std::int64_t>(j), r) + zeta[j];
  }
  tb.log_Lambda = log_sum_exp(tilted);
  tb.zeta = DiscreteDistribution::from_dense(zeta);
  return tb;
}

double TiltedBinomial::tilted_mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    const double c = binom_real(zeta.support()[i], r);
    m += c * std::exp(h * c + zeta.log_mass()[i] - log_Lambda);
  }
  return m;
}

CutoffChoice default_cutoff(std::int64_t n, std::int64_t N, double p, int r, double eps) {
  CutoffChoice c;
  const double nu = static_cast<double>(n) * binom_real(N, r) * std::pow(p, r);
  const double lp = std::log(1.0 / p);
  c.eta = 1.0 / (lp * lp);
  c.M = std::min(std::pow(factorial(r) * eps * nu, 1.0 / r), static_cast<double>(N));
  const auto raw = static_cast<std::int64_t>(std::ceil(c.eta * c.M));
  c.clamped = raw < r;
  c.R = std::max<std::int64_t>(raw, r);
  return c;
}

std::optional<double> optimal_tilt(std::int64_t N, double p, int r, std::int64_t R, double eps) {
  const double t = (1.0 + eps) * binom_real(N, r) * std::pow(p, r);
  auto mean_at = [&](double h) { return TiltedBinomial::make(N, p, r, h, R).tilted_mean(); };
  const auto base = TiltedBinomial::make(N, p, r, 0.0, R);
  const double cmax = binom_real(base.zeta.support().back(), r);
  if (!(cmax > t)) return std::nullopt;
  if (mean_at(0.0) >= t) return 0.0;
  double hi = 1.0;
  while (mean_at(hi) < t && hi < 1e6) hi *= 2.0;
  return bisect([&](double h) { return mean_at(h) - t; }, 0.0, hi, 1e-12, 1e-12);
}

double exponential_moment_bound_log(const TiltedBinomial& tilt, std::int64_t n, double eps) {
  const double t = (1.0 + eps) * binom_real(tilt.N, tilt.r) * std::pow(tilt.p, tilt.r);
  return static_cast<double>(n) * (tilt.log_Lambda - tilt.h * t);
}

TiltedReport tilted_tail(const TiltedConfig& cfg, std::int64_t samples, std::uint64_t seed,
                         const SimulationOptions& options) {
  check_samples(samples);
  if (cfg.n < 1) throw std::invalid_argument("invalid n: must be >= 1");
  if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw std::invalid_argument("invalid p: must lie in (0, 1)");
  if (!(cfg.eps > 0.0)) throw std::invalid_argument("invalid eps: must be > 0");
  TiltedReport rep;
  rep.cutoff = default_cutoff(cfg.n, cfg.N, cfg.p, cfg.r, cfg.eps);
  if (cfg.R) {
    rep.cutoff.R = *cfg.R;
    rep.cutoff.clamped = false;
  }
  const std::int64_t R = rep.cutoff.R;
  if (R < cfg.r) throw std::domain_error("tilted_tail: R must be >= r (Y' is identically 0 otherwise)");

  double h = cfg.h.value_or(std::log1p(cfg.eps));
  if (cfg.optimize_h) {
    if (auto opt = optimal_tilt(cfg.N, cfg.p, cfg.r, R, cfg.eps)) h = *opt;
  }
  rep.tilt = TiltedBinomial::make(cfg.N, cfg.p, cfg.r, h, R);

  const auto& zs = rep.tilt.zeta;
  const std::int64_t top = zs.support().back();
  std::vector<double> q(static_cast<std::size_t>(top) + 1, 0.0);
  std::vector<std::int64_t> value(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) value[j] = static_cast<std::int64_t>(binom_exact(static_cast<std::int64_t>(j), cfg.r));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto j = static_cast<std::size_t>(zs.support()[i]);
    q[j] = std::exp(h * static_cast<double>(value[j]) + zs.log_mass()[i] - rep.tilt.log_Lambda);
  }
  const TableSampler sampler(q);

  const double nu = static_cast<double>(cfg.n) * binom_real(cfg.N, cfg.r) * std::pow(cfg.p, cfg.r);
  rep.threshold = first_integer_at_least((1.0 + cfg.eps) * nu);
  const double log_norm = static_cast<double>(cfg.n) * rep.tilt.log_Lambda;
  const auto n = cfg.n;
  const auto k = rep.threshold;
  const auto sums = run_blocks<WeightSums>(samples, options, [&](std::int64_t begin, std::int64_t end) {
    WeightSums acc;
    for (std::int64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, kTiltedStream, static_cast<std::uint64_t>(i));
      std::int64_t y = 0;
      for (std::int64_t j = 0; j < n; ++j) y += value[static_cast<std::size_t>(sampler.draw(rng))];
      if (y >= k) {
        const double w = std::exp(log_norm - h * static_cast<double>(y));
        ++acc.hits;
        acc.s1 += w;
        acc.s2 += w * w;
      }
    }
    return acc;
  });

  auto& est = rep.estimate;
  const double s = static_cast<double>(samples);
  est.estimator = EstimatorKind::Tilted;
  est.samples = samples;
  est.seed = seed;
  est.hits = sums.hits;
  est.estimate = std::clamp(sums.s1 / s, 0.0, 1.0);
  est.log_estimate = sums.s1 > 0.0 ? std::log(sums.s1 / s) : kNegInf;
  const double var = samples > 1 ? std::max(0.0, (sums.s2 - s * (sums.s1 / s) * (sums.s1 / s)) / (s - 1.0)) : 0.0;
  est.std_error = std::sqrt(var / s);
  est.wilson_lower = est.wilson_upper = est.estimate;
  return rep;
}

PlantedConfig planted_config(const StarParams& s, double eps, double delta, double window) {
  if (!(eps > 0.0)) throw std::invalid_argument("invalid eps: must be > 0");
  if (!(delta > 0.0)) throw std::invalid_argument("invalid delta: must be > 0");
  PlantedConfig cfg;
  cfg.delta = delta;
  const double n1 = static_cast<double>(s.n - 1);
  cfg.a = static_cast<std::int64_t>(std::floor((eps + delta) * s.mu / binom_real(s.n, s.r)));
  const auto tag = classify_regime(s, window);
  if (std::holds_alternative<regime::Dense>(tag)) {
    cfg.b = n1;
    cfg.b_case = "rho=inf";
  } else if (std::holds_alternative<regime::Fractional>(tag)) {
    cfg.b = std::pow(frac((eps + delta) * s.rho), 1.0 / s.r) * n1;
    cfg.b_case = "rho finite";
  } else {
    cfg.b = std::pow(factorial(s.r) * (eps + delta) * s.mu, 1.0 / s.r);
    cfg.b_case = "rho=0";
  }
  cfg.b = std::clamp(cfg.b, 0.0, n1);
  cfg.b_ceil = static_cast<std::int64_t>(std::ceil(cfg.b - 1e-12));
  return cfg;
}

PlantedReport planted_tail_lower(const StarParams& s, double eps, double delta,
                                 std::int64_t samples, std::uint64_t seed,
                                 const SimulationOptions& options, double window) {
  check_samples(samples);
  PlantedReport rep;
  rep.config = planted_config(s, eps, delta, window);
  const auto a = rep.config.a;
  if (a + 1 >= s.n) throw std::domain_error("planted_tail_lower: a + 1 must be < n");

  // P(A) = p^{a(n-1) - C(a,2)} P(Bin(n-1-a, p) >= ceil(b) - a).
  const double planted_edges = static_cast<double>(a) * static_cast<double>(s.n - 1) -
                               static_cast<double>(a) * static_cast<double>(a - 1) / 2.0;
  const std::int64_t need = rep.config.b_ceil - a;
  const double log_partial = need <= 0 ? 0.0 : exact_binomial_pmf(s.n - 1 - a, s.p).log_tail(static_cast<double>(need));
  rep.log_exact_factor = (planted_edges > 0 ? planted_edges * std::log(s.p) : 0.0) + log_partial;

  const std::int64_t rest = s.n - a - 1;
  const double mu_hat = static_cast<double>(rest) * binom_real(rest - 1, s.r) * std::pow(s.p, s.r);
  rep.typical_threshold = (1.0 - delta / 2.0) * mu_hat;
  const double secured = static_cast<double>(a) * binom_real(s.n - 1, s.r) +
                         binom_real(rep.config.b_ceil, s.r);
  rep.residual_threshold = std::max(rep.typical_threshold, (1.0 + eps) * s.mu - secured);

  const auto counts = gnp_hits(static_cast<int>(rest), s.p, s.r,
                               first_integer_at_least(rep.residual_threshold),
                               first_integer_at_least(rep.typical_threshold), samples, seed,
                               kPlantedStream, options);
  rep.residual = make_naive_estimate(counts.hits[0], samples, seed, EstimatorKind::Naive);
  rep.residual_typical = make_naive_estimate(counts.hits[1], samples, seed, EstimatorKind::Naive);

  auto& est = rep.estimate;
  const double factor = std::exp(rep.log_exact_factor);
  est.estimator = EstimatorKind::Planted;
  est.samples = samples;
  est.seed = seed;
  est.hits = rep.residual.hits;
  est.estimate = factor * rep.residual.estimate;
  est.log_estimate = rep.log_exact_factor + rep.residual.log_estimate;
  est.std_error = factor * rep.residual.std_error;
  est.wilson_lower = factor * rep.residual.wilson_lower;
  est.wilson_upper = factor * rep.residual.wilson_upper;
  return rep;
}

NaCheck na_empirical_check(std::int64_t n, std::int64_t N, double p, int r, std::int64_t R,
                           double t, double u, std::int64_t samples, std::uint64_t seed,
                           const SimulationOptions& options) {
  check_samples(samples);
  if (R < 0) throw std::invalid_argument("invalid R: must be >= 0");
  const TableSampler sampler(binomial_probs(N, p));
  const auto table = binom_table(N, r);
  const std::int64_t kt = first_integer_at_least(t);
  const std::int64_t ku = first_integer_at_least(u);
  const auto counts = run_blocks<NaCounts>(samples, options, [&](std::int64_t begin, std::int64_t end) {
    NaCounts acc;
    for (std::int64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, kNaStream, static_cast<std::uint64_t>(i));
      std::int64_t below = 0, above = 0;
      for (std::int64_t j = 0; j < n; ++j) {
        const int x = sampler.draw(rng);
        (x <= R ? below : above) += table[static_cast<std::size_t>(x)];
      }
      const bool A = below >= kt, B = above >= ku;
      acc.first += A;
      acc.second += B;
      acc.both += A && B;
    }
    return acc;
  });
  NaCheck out;
  const double s = static_cast<double>(samples);
  out.samples = samples;
  out.p_first = static_cast<double>(counts.first) / s;
  out.p_second = static_cast<double>(counts.second) / s;
  out.lhs = static_cast<double>(counts.both) / s;
  out.rhs = out.p_first * out.p_second;
  const double a = out.p_first, b = out.p_second;
  const double p11 = out.lhs, p10 = a - p11, p01 = b - p11, p00 = 1.0 - a - b + p11;
  const double m4 = p11 * (1 - a) * (1 - a) * (1 - b) * (1 - b) + p10 * (1 - a) * (1 - a) * b * b +
                    p01 * a * a * (1 - b) * (1 - b) + p00 * a * a * b * b;
  const double cov = out.lhs - out.rhs;
  const double se = std::sqrt(std::max(0.0, m4 - cov * cov) / s);
  out.z = se > 0.0 ? cov / se : 0.0;
  return out;
}

RateComparison rate_comparison(const StarParams& s, double eps, const TailEstimate& estimate,
                               double window) {
  if (!(estimate.estimate > 0.0)) throw std::invalid_argument("rate_comparison: estimate must be > 0");
  RateComparison rc;
  const auto tag = classify_regime(s, window);
  rc.regime = regime_name(tag);
  rc.mu = s.mu;
  rc.neg_log_estimate = -estimate.log_estimate;
  rc.prediction = star_rate_asymptotic(s, eps, tag);
  rc.phi_n = phi_order(s);
  rc.ratio_to_prediction = rc.neg_log_estimate / rc.prediction;
  rc.ratio_to_phi_n = rc.neg_log_estimate / rc.phi_n;
  return rc;
}

}  // namespace startail
