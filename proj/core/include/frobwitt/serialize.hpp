#pragma once

// JSON views of the public report types. nlohmann::json orders object keys
// alphabetically, so serialized output is deterministic for identical inputs.

#include "json.hpp"

#include "frobwitt/elliptic.hpp"
#include "frobwitt/field.hpp"
#include "frobwitt/hassewitt.hpp"
#include "frobwitt/linalg.hpp"
#include "frobwitt/modrep.hpp"
#include "frobwitt/poly.hpp"
#include "frobwitt/semilinear.hpp"
#include "frobwitt/variety.hpp"

namespace frobwitt {

// A field element serializes to its coordinate vector over GF(p).
void to_json(nlohmann::json& j, const FieldElem& x);
void to_json(nlohmann::json& j, const Mat& m);
void to_json(nlohmann::json& j, const MultiPoly& a);
void to_json(nlohmann::json& j, const PointCount& c);
void to_json(nlohmann::json& j, const SmoothnessReport& r);
void to_json(nlohmann::json& j, const SigmaFixedPoint& p);
void to_json(nlohmann::json& j, const FixedPointReport& r);
void to_json(nlohmann::json& j, const HWBasis& b);
void to_json(nlohmann::json& j, const HWMatrix& m);
void to_json(nlohmann::json& j, const ZetaModP& z);
void to_json(nlohmann::json& j, const KatzRow& r);
void to_json(nlohmann::json& j, const KatzReport& r);
void to_json(nlohmann::json& j, const FixedSpaceResult& r);
void to_json(nlohmann::json& j, const FittingDecomp& d);
void to_json(nlohmann::json& j, const TateResult& t);
void to_json(nlohmann::json& j, const LLPrimeResult& r);
void to_json(nlohmann::json& j, const CheckLine& c);
void to_json(nlohmann::json& j, const Prop3435Report& r);
void to_json(nlohmann::json& j, const MuReport& r);

// {"p": ..., "f": ...}
nlohmann::json field_json(const FieldCtx& k);

}  // namespace frobwitt
