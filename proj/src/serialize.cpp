#include "startail/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace startail {

namespace {

void put(Json& j, const char* key, double x) { j[key] = real_to_json(x); }
void get(const Json& j, const char* key, double& x) { x = real_from_json(j.at(key)); }

template <class T>
void get(const Json& j, const char* key, T& x) {
  j.at(key).get_to(x);
}

}  // namespace

void put_real(Json& j, const char* key, double x) { put(j, key, x); }

Json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw std::invalid_argument("not a real number: " + s);
  }
  return j.get<double>();
}

void to_json(Json& j, const StarParams& v) {
  j = Json::object();
  j["r"] = v.r;
  j["n"] = v.n;
  put(j, "p", v.p);
  j["N"] = v.N;
  put(j, "mu", v.mu);
  put(j, "nu", v.nu);
  put(j, "rho", v.rho);
}

void from_json(const Json& j, StarParams& v) {
  get(j, "r", v.r);
  get(j, "n", v.n);
  get(j, "p", v.p);
  get(j, "N", v.N);
  get(j, "mu", v.mu);
  get(j, "nu", v.nu);
  get(j, "rho", v.rho);
}

void to_json(Json& j, const RegimeTag& v) {
  j = Json::object();
  j["name"] = regime_name(v);
  if (const auto* pt = std::get_if<regime::PoissonTransition>(&v)) put(j, "c", pt->c);
  if (const auto* fr = std::get_if<regime::Fractional>(&v)) put(j, "rho", fr->rho);
}

void from_json(const Json& j, RegimeTag& v) {
  const auto name = j.at("name").get<std::string>();
  if (name == "PoissonTransition") {
    regime::PoissonTransition t;
    get(j, "c", t.c);
    v = t;
  } else if (name == "Intermediate") {
    v = regime::Intermediate{};
  } else if (name == "Fractional") {
    regime::Fractional t;
    get(j, "rho", t.rho);
    v = t;
  } else if (name == "Dense") {
    v = regime::Dense{};
  } else {
    throw std::invalid_argument("unknown regime: " + name);
  }
}

void to_json(Json& j, const FractionalSides& v) {
  j = Json::object();
  put(j, "value", v.value);
  put(j, "left", v.left);
  put(j, "right", v.right);
  j["at_integer"] = v.at_integer;
}

void from_json(const Json& j, FractionalSides& v) {
  get(j, "value", v.value);
  get(j, "left", v.left);
  get(j, "right", v.right);
  get(j, "at_integer", v.at_integer);
}

void to_json(Json& j, const RateReport& v) {
  j = Json::object();
  Json tag;
  to_json(tag, v.tag);
  j["regime"] = std::move(tag);
  put(j, "phi_n", v.phi_n);
  put(j, "poisson_c", v.poisson_c);
  put(j, "poisson_value", v.poisson_value);
  put(j, "intermediate_value", v.intermediate_value);
  j["fractional"] = v.fractional;
  put(j, "dense_value", v.dense_value);
  put(j, "selected", v.selected);
}

void from_json(const Json& j, RateReport& v) {
  from_json(j.at("regime"), v.tag);
  get(j, "phi_n", v.phi_n);
  get(j, "poisson_c", v.poisson_c);
  get(j, "poisson_value", v.poisson_value);
  get(j, "intermediate_value", v.intermediate_value);
  get(j, "fractional", v.fractional);
  get(j, "dense_value", v.dense_value);
  get(j, "selected", v.selected);
}

void to_json(Json& j, const BoundReport& v) {
  j = Json::object();
  put(j, "log_upper", v.log_upper);
  put(j, "log_lower", v.log_lower);
  j["source"] = bound_source_name(v.source);
}

void from_json(const Json& j, BoundReport& v) {
  get(j, "log_upper", v.log_upper);
  get(j, "log_lower", v.log_lower);
  v.source = bound_source_from_name(j.at("source").get<std::string>());
}

void to_json(Json& j, const UnifiedRate& v) {
  j = Json::object();
  put(j, "delta_min", v.delta_min);
  put(j, "value", v.value);
}

void from_json(const Json& j, UnifiedRate& v) {
  get(j, "delta_min", v.delta_min);
  get(j, "value", v.value);
}

void to_json(Json& j, const ReductionQuantities& v) {
  j = Json::object();
  put(j, "delta_n", v.delta_n);
  put(j, "Delta_n", v.Delta_n);
  put(j, "S", v.S);
}

void from_json(const Json& j, ReductionQuantities& v) {
  get(j, "delta_n", v.delta_n);
  get(j, "Delta_n", v.Delta_n);
  get(j, "S", v.S);
}

void to_json(Json& j, const VariationalSolution& v) {
  j = Json::object();
  j["r"] = v.r;
  put(j, "eps", v.eps);
  put(j, "c", v.c);
  put(j, "value", v.value);
  Json mins = Json::array();
  for (double d : v.minimizers) mins.push_back(real_to_json(d));
  j["minimizers"] = std::move(mins);
  put(j, "alpha", v.alpha);
}

void from_json(const Json& j, VariationalSolution& v) {
  get(j, "r", v.r);
  get(j, "eps", v.eps);
  get(j, "c", v.c);
  get(j, "value", v.value);
  v.minimizers.clear();
  for (const auto& d : j.at("minimizers")) v.minimizers.push_back(real_from_json(d));
  get(j, "alpha", v.alpha);
}

void to_json(Json& j, const CriticalConstants& v) {
  j = Json::object();
  j["r"] = v.r;
  put(j, "eps", v.eps);
  put(j, "alpha0", v.alpha0);
  put(j, "alpha1", v.alpha1);
  put(j, "c_crit", v.c_crit);
}

void from_json(const Json& j, CriticalConstants& v) {
  get(j, "r", v.r);
  get(j, "eps", v.eps);
  get(j, "alpha0", v.alpha0);
  get(j, "alpha1", v.alpha1);
  get(j, "c_crit", v.c_crit);
}

void to_json(Json& j, const DiscreteDistribution& v) {
  j = Json::object();
  j["support"] = v.support();
  Json mass = Json::array();
  for (double m : v.log_mass()) mass.push_back(real_to_json(m));
  j["log_mass"] = std::move(mass);
}

void from_json(const Json& j, DiscreteDistribution& v) {
  std::vector<double> mass;
  for (const auto& m : j.at("log_mass")) mass.push_back(real_from_json(m));
  v = DiscreteDistribution(j.at("support").get<std::vector<std::int64_t>>(), std::move(mass));
}

void to_json(Json& j, const McKayWormaldEstimate& v) {
  j = Json::object();
  put(j, "log_estimate", v.log_estimate);
  put(j, "gamma_n", v.gamma_n);
  j["condition_holds"] = v.condition_holds;
  j["degenerate"] = v.degenerate;
}

void from_json(const Json& j, McKayWormaldEstimate& v) {
  get(j, "log_estimate", v.log_estimate);
  get(j, "gamma_n", v.gamma_n);
  get(j, "condition_holds", v.condition_holds);
  get(j, "degenerate", v.degenerate);
}

void to_json(Json& j, const DegreeMeasures& v) {
  j = Json::object();
  put(j, "log_PD", v.log_PD);
  put(j, "log_PB", v.log_PB);
}

void from_json(const Json& j, DegreeMeasures& v) {
  get(j, "log_PD", v.log_PD);
  get(j, "log_PB", v.log_PB);
}

void to_json(Json& j, const NegativeAssociationCheck& v) {
  j = Json::object();
  j["pairs_checked"] = v.pairs_checked;
  j["violations"] = v.violations;
  put(j, "worst_excess", v.worst_excess);
}

void from_json(const Json& j, NegativeAssociationCheck& v) {
  get(j, "pairs_checked", v.pairs_checked);
  get(j, "violations", v.violations);
  get(j, "worst_excess", v.worst_excess);
}

void to_json(Json& j, const TailEstimate& v) {
  j = Json::object();
  j["estimator"] = estimator_name(v.estimator);
  j["seed"] = v.seed;
  j["samples"] = v.samples;
  put(j, "estimate", v.estimate);
  put(j, "log_estimate", v.log_estimate);
  put(j, "std_error", v.std_error);
  j["hits"] = v.hits;
  put(j, "wilson_lower", v.wilson_lower);
  put(j, "wilson_upper", v.wilson_upper);
}

void from_json(const Json& j, TailEstimate& v) {
  v.estimator = estimator_from_name(j.at("estimator").get<std::string>());
  get(j, "seed", v.seed);
  get(j, "samples", v.samples);
  get(j, "estimate", v.estimate);
  get(j, "log_estimate", v.log_estimate);
  get(j, "std_error", v.std_error);
  get(j, "hits", v.hits);
  get(j, "wilson_lower", v.wilson_lower);
  get(j, "wilson_upper", v.wilson_upper);
}

void to_json(Json& j, const CutoffChoice& v) {
  j = Json::object();
  j["R"] = v.R;
  put(j, "eta", v.eta);
  put(j, "M", v.M);
  j["clamped"] = v.clamped;
}

void from_json(const Json& j, CutoffChoice& v) {
  get(j, "R", v.R);
  get(j, "eta", v.eta);
  get(j, "M", v.M);
  get(j, "clamped", v.clamped);
}

void to_json(Json& j, const PlantedConfig& v) {
  j = Json::object();
  j["a"] = v.a;
  put(j, "b", v.b);
  j["b_ceil"] = v.b_ceil;
  put(j, "delta", v.delta);
  j["b_case"] = v.b_case;
}

void from_json(const Json& j, PlantedConfig& v) {
  get(j, "a", v.a);
  get(j, "b", v.b);
  get(j, "b_ceil", v.b_ceil);
  get(j, "delta", v.delta);
  get(j, "b_case", v.b_case);
}

void to_json(Json& j, const NaCheck& v) {
  j = Json::object();
  put(j, "lhs", v.lhs);
  put(j, "rhs", v.rhs);
  put(j, "z", v.z);
  put(j, "p_first", v.p_first);
  put(j, "p_second", v.p_second);
  j["samples"] = v.samples;
}

void from_json(const Json& j, NaCheck& v) {
  get(j, "lhs", v.lhs);
  get(j, "rhs", v.rhs);
  get(j, "z", v.z);
  get(j, "p_first", v.p_first);
  get(j, "p_second", v.p_second);
  get(j, "samples", v.samples);
}

void to_json(Json& j, const RateComparison& v) {
  j = Json::object();
  put(j, "neg_log_estimate", v.neg_log_estimate);
  put(j, "prediction", v.prediction);
  put(j, "phi_n", v.phi_n);
  put(j, "ratio_to_prediction", v.ratio_to_prediction);
  put(j, "ratio_to_phi_n", v.ratio_to_phi_n);
  j["regime"] = v.regime;
  put(j, "mu", v.mu);
}

void from_json(const Json& j, RateComparison& v) {
  get(j, "neg_log_estimate", v.neg_log_estimate);
  get(j, "prediction", v.prediction);
  get(j, "phi_n", v.phi_n);
  get(j, "ratio_to_prediction", v.ratio_to_prediction);
  get(j, "ratio_to_phi_n", v.ratio_to_phi_n);
  get(j, "regime", v.regime);
  get(j, "mu", v.mu);
}

EstimatorKind estimator_from_name(const std::string& name) {
  for (auto k : {EstimatorKind::Naive, EstimatorKind::Tilted, EstimatorKind::Planted}) {
    if (estimator_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown estimator: " + name);
}

BoundSource bound_source_from_name(const std::string& name) {
  for (auto s : {BoundSource::Chernoff, BoundSource::WeakChernoff, BoundSource::BinomLower,
                 BoundSource::Warnke}) {
    if (bound_source_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown bound source: " + name);
}

Json simulation_record(const Json& params, const TailEstimate& est) {
  Json j = Json::object();
  j["estimator"] = estimator_name(est.estimator);
  j["params"] = params;
  j["seed"] = est.seed;
  j["samples"] = est.samples;
  put(j, "estimate", est.estimate);
  put(j, "log_estimate", est.log_estimate);
  put(j, "std_error", est.std_error);
  j["hits"] = est.hits;
  if (est.estimator == EstimatorKind::Naive) {
    put(j, "wilson_lower", est.wilson_lower);
    put(j, "wilson_upper", est.wilson_upper);
  }
  return j;
}

namespace {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

void dump_into(std::string& out, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ',';
      first = false;
      newline(depth + 1);
      out += Json(key).dump();
      out += pretty ? ": " : ":";
      dump_into(out, value, indent, depth + 1);
    }
    newline(depth);
    out += '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += '[';
    bool first = true;
    for (const auto& value : j) {
      if (!first) out += pretty ? ", " : ",";
      first = false;
      dump_into(out, value, indent, depth + 1);
    }
    out += ']';
  } else if (j.is_number_float()) {
    out += format_real(j.get<double>());
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

}  // namespace startail
