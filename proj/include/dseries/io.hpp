#pragma once

#include <string>

#include <json.hpp>

#include "dseries/characters.hpp"
#include "dseries/dirac.hpp"
#include "dseries/spectrum.hpp"
#include "dseries/unipotent.hpp"
#include "dseries/unitarity.hpp"
#include "dseries/weights.hpp"

namespace dseries {

using Json = nlohmann::json;

// "C_even:2", "B:1,2": the form accepted by UnipotentFamily::parse.
std::string family_key(const UnipotentFamily& family);

void to_json(Json& j, const Weight& w);
void from_json(const Json& j, Weight& w);

void to_json(Json& j, const TensorTerm& t);
void from_json(const Json& j, TensorTerm& t);

void to_json(Json& j, const SpinLkt& s);
void from_json(const Json& j, SpinLkt& s);

void to_json(Json& j, const DiracChecks& c);
void from_json(const Json& j, DiracChecks& c);

void to_json(Json& j, const DiracResult& r);
void from_json(const Json& j, DiracResult& r);

void to_json(Json& j, const GlBlock& b);
void from_json(const Json& j, GlBlock& b);

void to_json(Json& j, const InductionData& d);
void from_json(const Json& j, InductionData& d);

void to_json(Json& j, const CoordinateString& s);
void from_json(const Json& j, CoordinateString& s);

void to_json(Json& j, const StringDecomp& d);
void from_json(const Json& j, StringDecomp& d);

void to_json(Json& j, const UnitarityVerdict& v);
void from_json(const Json& j, UnitarityVerdict& v);

void to_json(Json& j, const UnipotentParameter& p);
void from_json(const Json& j, UnipotentParameter& p);

void to_json(Json& j, const PositivityReport& r);
void from_json(const Json& j, PositivityReport& r);

}  // namespace dseries

namespace nlohmann {

template <>
struct adl_serializer<dseries::UnipotentFamily> {
  static dseries::UnipotentFamily from_json(const json& j) {
    return dseries::UnipotentFamily::parse(j.get<std::string>());
  }
  static void to_json(json& j, const dseries::UnipotentFamily& f) { j = dseries::family_key(f); }
};

}  // namespace nlohmann
