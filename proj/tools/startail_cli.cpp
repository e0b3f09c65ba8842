// startail: command-line front end.
//
// Exit codes: 0 success, 1 a selected check failed, 2 usage or validation
// error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "startail/exact_oracles.hpp"
#include "startail/mc_simulator.hpp"
#include "startail/numerics.hpp"
#include "startail/rate_core.hpp"
#include "startail/serialize.hpp"
#include "startail/variational.hpp"
#include "startail/verification.hpp"

namespace st = startail;
using st::Json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string real17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---- output ---------------------------------------------------------------

struct Output {
  std::string format = "json";
  std::string path;
};

std::string csv_cell(const Json& v) {
  if (v.is_number_float()) return real17(v.get<double>());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.emplace_back(prefix, csv_cell(j));
  }
}

// One header row plus one row per record; records are flattened with
// dotted keys and must share the first record's columns.
std::string to_csv(const Json& records) {
  std::vector<Json> rows;
  if (records.is_array()) {
    for (const auto& r : records) rows.push_back(r);
  } else {
    rows.push_back(records);
  }
  std::ostringstream os;
  std::vector<std::string> header;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(rows[i], "", cells);
    if (i == 0) {
      for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c].first;
      os << '\n';
      for (const auto& c : cells) header.push_back(c.first);
    }
    std::map<std::string, std::string> byname(cells.begin(), cells.end());
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << byname[header[c]];
    os << '\n';
  }
  return os.str();
}

void emit(const Output& out, const Json& doc) {
  const std::string text = out.format == "csv" ? to_csv(doc) : st::dump(doc) + "\n";
  if (out.path.empty() || out.path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw UsageError("invalid output: cannot open " + out.path);
  f << text;
}

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--output", out.path, "Output file (default stdout)");
}

// ---- shared parameter groups ---------------------------------------------

struct GraphArgs {
  int r = 2;
  std::int64_t n = 0;
  double p = 0.0;
  std::optional<std::int64_t> N;
  double window = 4.0;

  st::StarParams params() const { return st::StarParams::make(r, n, p, N); }
};

void add_graph_options(CLI::App* cmd, GraphArgs& g, bool with_window = true) {
  cmd->add_option("--r", g.r, "Star size r (>= 2)")->required();
  cmd->add_option("--n", g.n, "Number of vertices")->required();
  cmd->add_option("--p", g.p, "Edge probability in (0, 1)")->required();
  cmd->add_option("--N", g.N, "Trials per i.i.d. binomial (default n - 1)");
  if (with_window) cmd->add_option("--window", g.window, "Regime classification band (> 1)");
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string("invalid ") + name + ": must be > 0");
}

// ---- rate / classify ------------------------------------------------------

struct RateArgs {
  GraphArgs g;
  double eps = 1.0;
  std::optional<double> c;
  Output out;
};

int cmd_rate(const RateArgs& a) {
  require_positive(a.eps, "eps");
  const auto params = a.g.params();
  const auto report = st::rate_report(params, a.eps, a.g.window);
  Json doc;
  doc["params"] = params;
  st::put_real(doc, "eps", a.eps);
  doc["rate"] = report;
  doc["unified"] = st::unified_rate(params, a.eps);
  if (a.c) {
    if (!(*a.c >= 0.0)) throw UsageError("invalid c: must be >= 0");
    const auto sol = st::solve(*a.c, a.eps, params.r);
    st::put_real(doc, "c", *a.c);
    st::put_real(doc, "rate_at_c", sol.value * params.mu);
  }
  emit(a.out, doc);
  return 0;
}

struct ClassifyArgs {
  GraphArgs g;
  Output out;
};

int cmd_classify(const ClassifyArgs& a) {
  const auto params = a.g.params();
  Json doc;
  doc["params"] = params;
  Json tag;
  st::to_json(tag, st::classify_regime(params, a.g.window));
  doc["regime"] = std::move(tag);
  st::put_real(doc, "phi_n", st::phi_order(params));
  st::put_real(doc, "log_scale", std::pow(std::log(static_cast<double>(params.n)),
                                          static_cast<double>(params.r) / (params.r - 1)));
  emit(a.out, doc);
  return 0;
}

// ---- minimize / critical / curves -----------------------------------------

struct MinimizeArgs {
  int r = 2;
  double eps = 1.0;
  double c = 0.0;
  bool verify = false;
  int grid_points = 1000000;
  Output out;
};

int cmd_minimize(const MinimizeArgs& a) {
  Json doc = st::solve(a.c, a.eps, a.r);
  if (!a.verify) {
    emit(a.out, doc);
    return 0;
  }
  if (a.grid_points < 10) throw UsageError("invalid grid-points: must be >= 10");
  const auto check = st::check_minimizer_against_grid(a.c, a.eps, a.r, a.grid_points);
  doc["verify"] = {{"passed", check.passed}, {"detail", check.detail}};
  emit(a.out, doc);
  return check.passed ? 0 : kExitCheckFailed;
}

struct CriticalArgs {
  int r = 2;
  double eps = 1.0;
  Output out;
};

int cmd_critical(const CriticalArgs& a) {
  emit(a.out, st::critical_constants(a.eps, a.r));
  return 0;
}

struct CurvesArgs {
  int r = 2;
  double eps = 1.0;
  std::vector<double> alphas;
  int points = 1000;
  std::string out_dir = ".";
};

int cmd_curves(const CurvesArgs& a) {
  if (a.points < 1) throw UsageError("invalid points: must be >= 1");
  const double a0 = st::alpha0(a.eps, a.r);
  std::vector<double> alphas = a.alphas;
  if (alphas.empty()) {
    for (double f : {0.5, 0.75, 1.0, 1.25}) alphas.push_back(f * a0);
  }
  std::filesystem::create_directories(a.out_dir);
  Json manifest;
  manifest["r"] = a.r;
  st::put_real(manifest, "eps", a.eps);
  st::put_real(manifest, "alpha0", a0);
  manifest["files"] = Json::array();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    require_positive(alphas[i], "alpha");
    const auto path = (std::filesystem::path(a.out_dir) / ("curve_" + std::to_string(i) + ".csv")).string();
    std::ofstream f(path);
    if (!f) throw UsageError("invalid out-dir: cannot write " + path);
    st::write_curve_csv(f, alphas[i], a.eps, a.r, a.points);
    double min_fprime = st::kInf;
    for (int k = 1; k <= a.points; ++k) {
      const double delta = a.eps * k / a.points;
      if (delta < a.eps) min_fprime = std::min(min_fprime, st::f_alpha_prime(alphas[i], delta, a.eps, a.r));
    }
    Json entry;
    st::put_real(entry, "alpha", alphas[i]);
    entry["path"] = path;
    st::put_real(entry, "min_fprime", min_fprime);
    manifest["files"].push_back(std::move(entry));
  }
  std::cout << st::dump(manifest) << "\n";
  return 0;
}

// ---- exact ----------------------------------------------------------------

struct ExactArgs {
  std::string kind = "gnp";
  int r = 2;
  std::int64_t n = 0;
  std::optional<double> p;
  std::optional<std::int64_t> N;
  double eps = 1.0;
  std::int64_t R = 0;
  std::vector<int> degrees;
  bool distribution = false;
  int max_vertices = 7;
  double max_support = 1e7;
  Output out;
};

int cmd_exact(const ExactArgs& a) {
  st::OracleGuards guards;
  guards.max_graph_vertices = a.max_vertices;
  guards.max_support = a.max_support;
  Json doc;
  doc["kind"] = a.kind;

  if (a.kind == "count") {
    if (a.degrees.empty()) throw UsageError("invalid degrees: required for kind=count");
    const st::DegreeSequence d(a.degrees);
    doc["degrees"] = a.degrees;
    doc["graphical"] = st::is_graphical(a.degrees);
    doc["count"] = st::count_graphs_with_degrees(d, guards);
    doc["mckay_wormald"] = st::mckay_wormald_estimate(d);
    if (a.p) doc["measures"] = st::exact_degree_measures(d.n(), *a.p, d, guards);
    emit(a.out, doc);
    return 0;
  }

  if (!a.p) throw UsageError("invalid p: required");
  const auto params = st::StarParams::make(a.r, a.n, *a.p, a.N);
  require_positive(a.eps, "eps");
  doc["params"] = params;
  st::put_real(doc, "eps", a.eps);

  if (a.kind == "gnp") {
    const int n = static_cast<int>(params.n);
    st::put_real(doc, "log_tail", st::exact_gnp_star_tail(n, params.p, params.r, a.eps, guards));
    if (a.distribution) doc["distribution"] = st::exact_gnp_star_distribution(n, params.p, params.r, guards);
  } else if (a.kind == "iid") {
    st::put_real(doc, "log_tail", st::exact_iid_tail(params.n, params.N, params.p, params.r, a.eps, guards));
    if (a.distribution) {
      doc["distribution"] = st::exact_Y_distribution(params.n, params.N, params.p, params.r,
                                                     st::YPart::Whole, 0, guards);
    }
  } else if (a.kind == "truncated") {
    doc["R"] = a.R;
    st::put_real(doc, "log_tail",
                 st::exact_truncated_tail(params.n, params.N, params.p, params.r, a.R, a.eps, guards));
    if (a.distribution) {
      doc["distribution"] = st::exact_Y_distribution(params.n, params.N, params.p, params.r,
                                                     st::YPart::BelowCutoff, a.R, guards);
    }
  } else if (a.kind == "joint") {
    doc["R"] = a.R;
    if (a.R >= params.N) {
      doc["note"] = "Y'' is identically 0 because R >= N";
      std::cerr << "note: Y'' is degenerate (identically 0) because R >= N\n";
    }
    const auto joint = st::exact_joint_YpYpp(params.n, params.N, params.p, params.r, a.R, guards);
    doc["rows"] = joint.rows();
    doc["cols"] = joint.cols();
    doc["negative_association"] = st::check_negative_association(joint);
    if (a.distribution) {
      doc["first_marginal"] = joint.first_marginal();
      doc["second_marginal"] = joint.second_marginal();
    }
  } else {
    throw UsageError("invalid kind: " + a.kind);
  }
  emit(a.out, doc);
  return 0;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string estimator = "naive";
  std::string mode = "gnp";
  int r = 2;
  std::int64_t n = 0;
  double p = 0.0;
  std::optional<std::int64_t> N;
  double eps = 1.0;
  double delta = 0.2;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> R;
  std::optional<double> h;
  bool optimize_h = false;
  double window = 4.0;
  int threads = 0;
  bool compare = false;
  std::string batch;
  Output out;
};

Json simulate_one(const SimulateArgs& a) {
  if (a.samples < 1) throw UsageError("invalid samples: must be >= 1");
  require_positive(a.eps, "eps");
  if (a.threads < 0) throw UsageError("invalid threads: must be >= 0");
  st::SimulationOptions opt;
  opt.workers = a.threads;
  const auto params = st::StarParams::make(a.r, a.n, a.p, a.N);

  Json pj;
  pj["r"] = params.r;
  pj["n"] = params.n;
  st::put_real(pj, "p", params.p);
  pj["N"] = params.N;
  st::put_real(pj, "eps", a.eps);

  Json details;
  st::TailEstimate est;
  if (a.estimator == "naive") {
    if (a.mode != "gnp" && a.mode != "iid") throw UsageError("invalid mode: " + a.mode);
    pj["mode"] = a.mode;
    est = st::naive_tail(params, a.eps, a.samples, a.seed,
                         a.mode == "gnp" ? st::SampleMode::Gnp : st::SampleMode::Iid, opt);
  } else if (a.estimator == "tilted") {
    st::TiltedConfig cfg{params.n, params.N, params.p, params.r, a.eps, a.R, a.h, a.optimize_h};
    if (a.R) pj["R"] = *a.R;
    if (a.h) st::put_real(pj, "h", *a.h);
    pj["optimize_h"] = a.optimize_h;
    const auto rep = st::tilted_tail(cfg, a.samples, a.seed, opt);
    est = rep.estimate;
    st::put_real(details, "h", rep.tilt.h);
    st::put_real(details, "log_Lambda", rep.tilt.log_Lambda);
    details["cutoff"] = rep.cutoff;
    details["threshold"] = rep.threshold;
    st::put_real(details, "exp_moment_bound_log", st::exponential_moment_bound_log(rep.tilt, params.n, a.eps));
  } else if (a.estimator == "planted") {
    require_positive(a.delta, "delta");
    st::put_real(pj, "delta", a.delta);
    const auto rep = st::planted_tail_lower(params, a.eps, a.delta, a.samples, a.seed, opt, a.window);
    est = rep.estimate;
    details["config"] = rep.config;
    st::put_real(details, "log_exact_factor", rep.log_exact_factor);
    st::put_real(details, "typical_threshold", rep.typical_threshold);
    st::put_real(details, "residual_threshold", rep.residual_threshold);
    details["residual"] = rep.residual;
    details["residual_typical"] = rep.residual_typical;
  } else {
    throw UsageError("invalid estimator: " + a.estimator);
  }
  Json record = st::simulation_record(pj, est);
  if (!details.is_null()) record["details"] = std::move(details);
  if (a.compare && est.estimate > 0.0) record["rate_comparison"] = st::rate_comparison(params, a.eps, est, a.window);
  return record;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

// Batch rows override the command-line values column by column.
SimulateArgs apply_row(SimulateArgs a, const std::vector<std::string>& header,
                       const std::vector<std::string>& row, std::size_t line_no) {
  if (row.size() != header.size()) {
    throw UsageError("invalid batch: line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                     " cells, header has " + std::to_string(header.size()));
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto& k = header[i];
    const auto& v = row[i];
    if (v.empty()) continue;
    try {
      if (k == "estimator") a.estimator = v;
      else if (k == "mode") a.mode = v;
      else if (k == "r") a.r = std::stoi(v);
      else if (k == "n") a.n = std::stoll(v);
      else if (k == "p") a.p = std::stod(v);
      else if (k == "N") a.N = std::stoll(v);
      else if (k == "eps") a.eps = std::stod(v);
      else if (k == "delta") a.delta = std::stod(v);
      else if (k == "samples") a.samples = std::stoll(v);
      else if (k == "seed") a.seed = std::stoull(v);
      else if (k == "R") a.R = std::stoll(v);
      else if (k == "h" || k == "tilt") a.h = std::stod(v);
      else throw UsageError("invalid batch: unknown column " + k);
    } catch (const std::logic_error&) {
      throw UsageError("invalid " + k + ": cannot parse '" + v + "' on batch line " + std::to_string(line_no));
    }
  }
  return a;
}

int cmd_simulate(const SimulateArgs& a) {
  if (a.batch.empty()) {
    emit(a.out, simulate_one(a));
    return 0;
  }
  std::ifstream in(a.batch);
  if (!in) throw UsageError("invalid batch: cannot open " + a.batch);
  std::string line;
  if (!std::getline(in, line)) throw UsageError("invalid batch: empty file");
  const auto header = split_csv_line(line);
  Json records = Json::array();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto row_args = apply_row(a, header, split_csv_line(line), line_no);
    Json rec = simulate_one(row_args);
    if (a.out.format == "csv") {
      // Keep batch CSV columns uniform across estimators.
      Json flat;
      flat["estimator"] = rec["estimator"];
      for (const char* k : {"r", "n", "p", "N", "eps"}) flat[k] = rec["params"][k];
      for (const char* k : {"seed", "samples", "estimate", "log_estimate", "std_error", "hits"}) flat[k] = rec[k];
      rec = std::move(flat);
    }
    records.push_back(std::move(rec));
  }
  emit(a.out, records);
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  Output out;
};

int cmd_verify(const VerifyArgs& a) {
  const auto checks = st::run_suite(a.suite);
  bool all_ok = true;
  Json doc = Json::array();
  for (const auto& c : checks) {
    all_ok = all_ok && c.passed;
    doc.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  if (a.out.format == "json" && a.out.path.empty()) {
    for (const auto& c : checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    std::cout << (all_ok ? "all checks passed" : "some checks failed") << " (" << checks.size() << ")\n";
  } else {
    emit(a.out, doc);
  }
  return all_ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper tails of star counts in G(n, p): rates, exact oracles and simulation"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with default option values; command-line flags win");
  app.set_version_flag("--version", "startail 0.1.0");

  RateArgs rate;
  auto* c_rate = app.add_subcommand("rate", "Regime tag, Phi_n and all four case rates");
  add_graph_options(c_rate, rate.g);
  c_rate->add_option("--eps", rate.eps, "Relative excess eps > 0");
  c_rate->add_option("--c", rate.c, "Also report I_r(c, eps) mu for this c");
  add_output_options(c_rate, rate.out);

  ClassifyArgs classify;
  auto* c_classify = app.add_subcommand("classify", "Finite-n regime tag");
  add_graph_options(c_classify, classify.g);
  add_output_options(c_classify, classify.out);

  MinimizeArgs minimize;
  auto* c_min = app.add_subcommand("minimize", "Solve the one-dimensional variational problem");
  c_min->add_option("--r", minimize.r)->required();
  c_min->add_option("--eps", minimize.eps)->required();
  c_min->add_option("--c", minimize.c)->required();
  c_min->add_flag("--verify", minimize.verify, "Cross-check against a uniform grid");
  c_min->add_option("--grid-points", minimize.grid_points, "Grid size for --verify");
  add_output_options(c_min, minimize.out);

  CriticalArgs critical;
  auto* c_crit = app.add_subcommand("critical", "alpha0, alpha1 and the critical c");
  c_crit->add_option("--r", critical.r)->required();
  c_crit->add_option("--eps", critical.eps)->required();
  add_output_options(c_crit, critical.out);

  CurvesArgs curves;
  auto* c_curves = app.add_subcommand("curves", "Write delta,f,g,h curve data, one CSV per alpha");
  c_curves->add_option("--r", curves.r)->required();
  c_curves->add_option("--eps", curves.eps)->required();
  c_curves->add_option("--alpha", curves.alphas, "Tilt values (default alpha0 x 0.5, 0.75, 1, 1.25)");
  c_curves->add_option("--points", curves.points, "Grid points per curve");
  c_curves->add_option("--out-dir", curves.out_dir, "Directory for curve_<i>.csv files");

  ExactArgs exact;
  auto* c_exact = app.add_subcommand("exact", "Exact small-instance laws and tails");
  c_exact->add_option("--kind", exact.kind)->check(CLI::IsMember({"gnp", "iid", "truncated", "joint", "count"}));
  c_exact->add_option("--r", exact.r);
  c_exact->add_option("--n", exact.n);
  c_exact->add_option("--p", exact.p);
  c_exact->add_option("--N", exact.N);
  c_exact->add_option("--eps", exact.eps);
  c_exact->add_option("--R", exact.R, "Cutoff for truncated and joint");
  c_exact->add_option("--degrees", exact.degrees, "Degree sequence for kind=count")->delimiter(',');
  c_exact->add_flag("--distribution", exact.distribution, "Include the full law");
  c_exact->add_option("--max-vertices", exact.max_vertices, "Guard on enumerated graph size");
  c_exact->add_option("--max-support", exact.max_support, "Guard on distribution support size");
  add_output_options(c_exact, exact.out);

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Seeded Monte-Carlo tail estimate");
  c_sim->add_option("--estimator", sim.estimator)->check(CLI::IsMember({"naive", "tilted", "planted"}));
  c_sim->add_option("--mode", sim.mode, "naive only: gnp or iid")->check(CLI::IsMember({"gnp", "iid"}));
  c_sim->add_option("--r", sim.r);
  c_sim->add_option("--n", sim.n);
  c_sim->add_option("--p", sim.p);
  c_sim->add_option("--N", sim.N);
  c_sim->add_option("--eps", sim.eps);
  c_sim->add_option("--delta", sim.delta, "planted only");
  c_sim->add_option("--samples", sim.samples);
  c_sim->add_option("--seed", sim.seed);
  c_sim->add_option("--R", sim.R, "tilted only: cutoff");
  c_sim->add_option("--tilt", sim.h, "tilted only: tilt h (default log(1 + eps))");
  c_sim->add_flag("--optimize-h", sim.optimize_h, "tilted only: solve Lambda'(h) = t");
  c_sim->add_option("--window", sim.window);
  c_sim->add_option("--threads", sim.threads, "Workers (default STARTAIL_THREADS or all cores)");
  c_sim->add_flag("--compare", sim.compare, "Add the ratio to the asymptotic rate");
  c_sim->add_option("--batch", sim.batch, "CSV of parameter rows for a sweep");
  add_output_options(c_sim, sim.out);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run invariant suites");
  c_verify->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"convex_sum", "bounds", "variational", "enumeration", "na", "all"}));
  add_output_options(c_verify, verify.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_rate) return cmd_rate(rate);
    if (*c_classify) return cmd_classify(classify);
    if (*c_min) return cmd_minimize(minimize);
    if (*c_crit) return cmd_critical(critical);
    if (*c_curves) return cmd_curves(curves);
    if (*c_exact) return cmd_exact(exact);
    if (*c_sim) return cmd_simulate(sim);
    if (*c_verify) return cmd_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error: a precondition of the operation.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
