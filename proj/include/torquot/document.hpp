#pragma once

// Versioned JSON documents for fans, cones, sublattices, matrices and
// results. Output is canonical: identical values give byte-identical text.

#include <string>

#include <json.hpp>

#include "torquot/good_model.hpp"

namespace torquot {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json integerToJson(const Integer& x);
Integer integerFromJson(const Json& j);

Json matrixToJson(const IntegerMatrix& m);
IntegerMatrix matrixFromJson(const Json& j);

// {formatVersion, latticeRank, rays, [linealityGenerators], cones}. Cones are
// index lists into `rays`; each listed cone brings all of its faces along,
// and `linealityGenerators` (if present) are added to every cone with both
// signs. Only maximal cones are written.
Json fanToJson(const ConeSystem& system);
ConeSystem fanFromJson(const Json& j);

// {formatVersion, latticeRank, generators}
Json coneToJson(const Cone& c);
Cone coneFromJson(const Json& j);

// {formatVersion, ambientRank, basis}. Non-saturated input is rejected with
// NonPrimitiveSublattice unless `saturateInput` is set.
Json sublatticeToJson(const SublatticeBasis& l);
SublatticeBasis sublatticeFromJson(const Json& j, bool saturateInput = false);

Json quotientResultToJson(const QuotientResult& q, bool withTrace = false);
Json goodModelToJson(const GoodModelResult& m);
Json goodnessReportToJson(const GoodnessReport& r);
Json affineQuotientToJson(const AffineQuotient& a);
Json fanQuotientToJson(const FanQuotient& q);

// Objects one key per line, numeric arrays inline, other arrays one element
// per line; trailing newline.
std::string canonicalDump(const Json& j);

Json parseDocument(const std::string& text);
Json readDocument(const std::string& path);

}  // namespace torquot
