#pragma once

#include <string>

#include <json.hpp>

#include "frechet3/bounds.hpp"
#include "frechet3/copula2.hpp"
#include "frechet3/family_path.hpp"
#include "frechet3/product_lift.hpp"
#include "frechet3/sampler.hpp"

namespace frechet3 {

// Wire formats:
//   copula:  {"family":"pi"|"m"|"w"}, {"family":"fgm","theta":1.0},
//            {"family":"clayton","alpha":2.0},
//            {"family":"checkerboard","weights":[[...]]},
//            {"family":"transpose","inner":{...}}
//   path:    {"breakpoints":[0.0,1.0],"pieces":[{"family":"m"}]}
//   triple:  {"c12":{...},"c13":{...},"c23":{...}}
//   quad:    {"nodes":16,"panels":32,"tol":1e-8}

nlohmann::json copula_to_json(const CopulaSpec2& c);
CopulaSpec2 copula_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const FamilyPath& p);
FamilyPath path_from_json(const nlohmann::json& j);

nlohmann::json quad_to_json(const QuadratureConfig& q);
QuadratureConfig quad_from_json(const nlohmann::json& j);

nlohmann::json lift_to_json(const LiftedCopula3& l);
LiftedCopula3 lift_from_json(const nlohmann::json& j);

struct Triple {
  CopulaSpec2 c12, c13, c23;
};
Triple triple_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness& w, bool pairwise);
nlohmann::json verdict_to_json(const CompatVerdict& v);

/// CSV with header u1,u2,u3; one row per draw.
std::string batch_to_csv(const SampleBatch& batch);

/// CSV with header u1,u2,u3,FL,CL,CU,FU.
std::string report_to_csv(const BoundsReport& rep);
nlohmann::json report_summary_json(const BoundsReport& rep);

/// Seed accepted as decimal or 0x-prefixed hex.
std::uint64_t parse_seed(const std::string& s);

/// %.12g rendering used for all CLI numeric output.
std::string format_value(double x);

}  // namespace frechet3
