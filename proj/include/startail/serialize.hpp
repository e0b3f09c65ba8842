#ifndef STARTAIL_SERIALIZE_HPP
#define STARTAIL_SERIALIZE_HPP

// JSON encoding of report types. Non-finite doubles are written as the
// strings "inf", "-inf" and "nan" so every report survives a round trip.

#include <string>

#include <json.hpp>

#include "startail/distribution.hpp"
#include "startail/exact_oracles.hpp"
#include "startail/mc_simulator.hpp"
#include "startail/rate_core.hpp"
#include "startail/variational.hpp"

namespace startail {

using Json = nlohmann::ordered_json;

Json real_to_json(double x);
double real_from_json(const Json& j);

/// j[key] = real_to_json(x).
void put_real(Json& j, const char* key, double x);

void to_json(Json& j, const StarParams& v);
void from_json(const Json& j, StarParams& v);
void to_json(Json& j, const RegimeTag& v);
void from_json(const Json& j, RegimeTag& v);
void to_json(Json& j, const FractionalSides& v);
void from_json(const Json& j, FractionalSides& v);
void to_json(Json& j, const RateReport& v);
void from_json(const Json& j, RateReport& v);
void to_json(Json& j, const BoundReport& v);
void from_json(const Json& j, BoundReport& v);
void to_json(Json& j, const UnifiedRate& v);
void from_json(const Json& j, UnifiedRate& v);
void to_json(Json& j, const ReductionQuantities& v);
void from_json(const Json& j, ReductionQuantities& v);
void to_json(Json& j, const VariationalSolution& v);
void from_json(const Json& j, VariationalSolution& v);
void to_json(Json& j, const CriticalConstants& v);
void from_json(const Json& j, CriticalConstants& v);
void to_json(Json& j, const DiscreteDistribution& v);
void from_json(const Json& j, DiscreteDistribution& v);
void to_json(Json& j, const McKayWormaldEstimate& v);
void from_json(const Json& j, McKayWormaldEstimate& v);
void to_json(Json& j, const DegreeMeasures& v);
void from_json(const Json& j, DegreeMeasures& v);
void to_json(Json& j, const NegativeAssociationCheck& v);
void from_json(const Json& j, NegativeAssociationCheck& v);
void to_json(Json& j, const TailEstimate& v);
void from_json(const Json& j, TailEstimate& v);
void to_json(Json& j, const CutoffChoice& v);
void from_json(const Json& j, CutoffChoice& v);
void to_json(Json& j, const PlantedConfig& v);
void from_json(const Json& j, PlantedConfig& v);
void to_json(Json& j, const NaCheck& v);
void from_json(const Json& j, NaCheck& v);
void to_json(Json& j, const RateComparison& v);
void from_json(const Json& j, RateComparison& v);

EstimatorKind estimator_from_name(const std::string& name);
BoundSource bound_source_from_name(const std::string& name);

/// {estimator, params, seed, samples, estimate, log_estimate, std_error}
/// plus hit count and, for the naive estimator, the Wilson interval.
Json simulation_record(const Json& params, const TailEstimate& est);

/// Serialized text with every float at 17 significant digits; `indent` < 0
/// gives a single line.
std::string dump(const Json& j, int indent = 2);

}  // namespace startail

#endif  // STARTAIL_SERIALIZE_HPP
