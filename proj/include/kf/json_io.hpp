#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of the library's values. Rationals are decimal strings "p/q".
 *
 * Parsers throw Error(Parse) on malformed input.
 */

#include <json.hpp>

#include "kf/census.hpp"
#include "kf/density.hpp"
#include "kf/twist.hpp"

namespace kf::io {

using json = nlohmann::ordered_json;

json to_json(const Rat& r);
Rat rat_from(const json& j);

json to_json(const UPoly& p);  // sparse terms [[e], "c"], ascending e
UPoly upoly_from(const json& j);

json to_json(const WeierstrassCurve& E);  // {"A": .., "B": ..}
WeierstrassCurve curve_from(const json& j);

json to_json(const ECPoint& P);  // "inf" or [x, y]
ECPoint point_from(const json& j);

json to_json(const ProjPoint& P);  // [X, Y, Z]
ProjPoint proj_point_from(const json& j);

json to_json(const PlaneCubic& C);  // 10 coefficients in cubic_monomial order
PlaneCubic cubic_from(const json& j);

json to_json(const TorsionVerdict& v);
TorsionVerdict torsion_verdict_from(const json& j);

json to_json(const ChordTorsionVerdict& v);
ChordTorsionVerdict chord_verdict_from(const json& j);

json to_json(const QuotientSurface& S);  // {"k", "n", "a", "b", "c", "d"}
QuotientSurface surface_from(const json& j);

json to_json(const KthPowerFreeClass& c);
KthPowerFreeClass class_from(const json& j);

json to_json(const TwistPairWitness& w);
TwistPairWitness twist_witness_from(const json& j);

json to_json(const XBound& b);
json to_json(const ComponentCensus& c);

/// A density witness together with the g and f it refers to.
struct DensityRecord {
    DensityWitness witness;
    UPoly g, f;
};
json to_json(const DensityRecord& r);
DensityRecord density_record_from(const json& j);

/// The canonical text form: two-space indent and a trailing newline.
std::string dump(const json& j);

}  // namespace kf::io
