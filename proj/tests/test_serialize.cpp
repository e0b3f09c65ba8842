#include <doctest.h>

#include <cmath>
#include <string>

#include "startail/serialize.hpp"

using namespace startail;

namespace {

template <class T>
T round_trip(const T& v) {
  const Json j = v;
  return Json::parse(dump(j)).template get<T>();
}

RegimeTag regime_round_trip(const RegimeTag& tag) {
  Json j;
  to_json(j, tag);
  RegimeTag out;
  from_json(Json::parse(dump(j)), out);
  return out;
}

}  // namespace

TEST_CASE("non-finite reals") {
  CHECK(real_to_json(INFINITY) == "inf");
  CHECK(real_to_json(-INFINITY) == "-inf");
  CHECK(real_to_json(NAN) == "nan");
  CHECK(real_from_json(real_to_json(-INFINITY)) == -INFINITY);
  CHECK(std::isnan(real_from_json(real_to_json(NAN))));
  CHECK(real_from_json(Json(2.5)) == 2.5);
  CHECK_THROWS(real_from_json(Json("many")));
}

TEST_CASE("floats are written with 17 significant digits") {
  Json j;
  put_real(j, "x", 0.1);
  put_real(j, "y", 3.0);
  const std::string s = dump(j, -1);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("3.0") != std::string::npos);
  const double tricky = 2.9333439167618858;
  CHECK(Json::parse(dump(Json(tricky))).get<double>() == tricky);
}

TEST_CASE("reports survive a round trip") {
  const auto s = StarParams::make(2, 200, 0.05);
  CHECK(round_trip(s) == s);
  CHECK(round_trip(StarParams::make(3, 20, 0.4, 7)) == StarParams::make(3, 20, 0.4, 7));

  for (const RegimeTag& tag : {RegimeTag{regime::PoissonTransition{1.5}}, RegimeTag{regime::Intermediate{}},
                               RegimeTag{regime::Fractional{0.3}}, RegimeTag{regime::Dense{}}})
    CHECK(regime_round_trip(tag) == tag);

  const auto rep = rate_report(s, 1.0);
  CHECK(round_trip(rep) == rep);
  const auto dense = rate_report(StarParams::make(2, 1000, 0.5), 1.0);
  CHECK(round_trip(dense) == dense);
  const auto ur = unified_rate(s, 1.0, 1000);
  CHECK(round_trip(ur) == ur);
  const auto br = binomial_tail_bounds(100, 0.1, 30);
  CHECK(round_trip(br) == br);
  const auto rq = reduction_quantities(s, 2.0, 1.0);
  CHECK(round_trip(rq) == rq);
  const auto fs = fractional_rate_sides(StarParams::make(2, 1000, 0.5), 1.0, 0.25);
  CHECK(round_trip(fs) == fs);

  const auto sol = solve(5.0, 1.0, 2);
  CHECK(round_trip(sol) == sol);
  const auto zero = solve(0.0, 1.0, 2);
  CHECK(round_trip(zero) == zero);
  const auto cc = critical_constants(1.0, 2);
  CHECK(round_trip(cc) == cc);

  const auto dist = exact_Y_distribution(3, 4, 0.3, 2);
  CHECK(round_trip(dist) == dist);
  const DegreeSequence d({2, 2, 2, 2, 2, 2});
  const auto mw = mckay_wormald_estimate(d);
  CHECK(round_trip(mw) == mw);
  const auto dm = exact_degree_measures(6, 0.4, d);
  CHECK(round_trip(dm) == dm);
  const auto na = check_negative_association(exact_joint_YpYpp(3, 4, 0.4, 2, 2));
  CHECK(round_trip(na) == na);

  const auto est = naive_tail(StarParams::make(2, 6, 0.3), 1.0, 5000, 1);
  CHECK(round_trip(est) == est);
  const auto none = naive_tail(StarParams::make(2, 6, 0.3), 1e6, 100, 1);
  CHECK(round_trip(none) == none);
  const auto cut = default_cutoff(10, 9, 0.2, 2, 1.0);
  CHECK(round_trip(cut) == cut);
  const auto pc = planted_config(StarParams::make(2, 12, 0.2), 1.0, 0.2);
  CHECK(round_trip(pc) == pc);
  const auto nc = na_empirical_check(4, 5, 0.4, 2, 2, 2, 6, 1000, 1);
  CHECK(round_trip(nc) == nc);
  const auto cmp = rate_comparison(StarParams::make(2, 6, 0.3), 1.0, est);
  CHECK(round_trip(cmp) == cmp);
}

TEST_CASE("enum names") {
  for (auto k : {EstimatorKind::Naive, EstimatorKind::Tilted, EstimatorKind::Planted})
    CHECK(estimator_from_name(estimator_name(k)) == k);
  CHECK_THROWS(estimator_from_name("other"));
}

TEST_CASE("simulation record") {
  const auto s = StarParams::make(2, 6, 0.3);
  const auto est = naive_tail(s, 1.0, 1000, 4);
  const Json rec = simulation_record(Json(s), est);
  CHECK(rec["estimator"] == "Naive");
  CHECK(rec["samples"] == 1000);
  CHECK(rec.contains("wilson_lower"));
  CHECK(rec.contains("std_error"));
}
