#include "torquot/document.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace torquot {

namespace {

[[noreturn]] void parseError(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void requireObject(const Json& j, const char* what) {
  if (!j.is_object()) parseError(std::string(what) + " must be a JSON object");
}

// Rejects unknown keys and checks the required ones are present.
void checkFields(const Json& j, const char* what, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  requireObject(j, what);
  for (const auto& [key, value] : j.items()) {
    auto known = [&](std::initializer_list<const char*> keys) {
      return std::any_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; });
    };
    if (!known(required) && !known(optional)) parseError(std::string(what) + ": unknown field '" + key + "'");
  }
  for (const char* key : required)
    if (!j.contains(key)) parseError(std::string(what) + ": missing field '" + key + "'");
  const Json& version = j.at("formatVersion");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
    parseError(std::string(what) + ": unsupported formatVersion");
}

std::size_t sizeFromJson(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

IntegerVector vectorFromJson(const Json& j, std::size_t rank, const char* what) {
  if (!j.is_array()) parseError(std::string(what) + " must be an array of integers");
  if (j.size() != rank)
    parseError(std::string(what) + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(rank));
  IntegerVector v;
  for (const auto& x : j) v.push_back(integerFromJson(x));
  return v;
}

std::vector<IntegerVector> vectorsFromJson(const Json& j, std::size_t rank, const char* what) {
  if (!j.is_array()) parseError(std::string(what) + " must be an array");
  std::vector<IntegerVector> out;
  for (const auto& v : j) out.push_back(vectorFromJson(v, rank, what));
  return out;
}

Json vectorToJson(const IntegerVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(integerToJson(x));
  return j;
}

Json vectorsToJson(const std::vector<IntegerVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(vectorToJson(v));
  return j;
}

void sortVectors(std::vector<IntegerVector>& vs) {
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return compareLex(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<IntegerVector> sortedGenerators(const Cone& c) {
  std::vector<IntegerVector> g = c.generators();
  sortVectors(g);
  return g;
}

Json optionalCone(const std::optional<Cone>& c) { return c ? coneToJson(*c) : Json(nullptr); }

bool isScalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void dumpInto(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      os << inner << Json(key).dump() << ": ";
      dumpInto(os, value, indent + 1);
      os << (++k < j.size() ? ",\n" : "\n");
    }
    os << pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
    } else if (std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number(); })) {
      os << j.dump();
    } else if (std::all_of(j.begin(), j.end(), [](const Json& x) {
                 return x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_number(); });
               }) && j.size() <= 1) {
      os << '[' << j.front().dump() << ']';
    } else {
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        os << inner;
        if (isScalar(j[k]))
          os << j[k].dump();
        else
          dumpInto(os, j[k], indent + 1);
        os << (k + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << ']';
    }
  } else {
    os << j.dump();
  }
}

}  // namespace

Json integerToJson(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
  return Json(x.get_str());
}

Integer integerFromJson(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    return Integer(static_cast<long>(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) parseError("'" + s + "' is not a decimal integer");
    return x;
  }
  parseError("expected an integer, got " + j.dump());
}

Json matrixToJson(const IntegerMatrix& m) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = vectorsToJson(m.rowVectors());
  return j;
}

IntegerMatrix matrixFromJson(const Json& j) {
  checkFields(j, "matrix", {"formatVersion", "rows", "cols", "entries"});
  std::size_t rows = sizeFromJson(j.at("rows"), "rows");
  std::size_t cols = sizeFromJson(j.at("cols"), "cols");
  std::vector<IntegerVector> entries = vectorsFromJson(j.at("entries"), cols, "matrix row");
  if (entries.size() != rows) parseError("matrix: expected " + std::to_string(rows) + " rows");
  return IntegerMatrix::fromRows(cols, entries);
}

Json fanToJson(const ConeSystem& system) {
  const std::vector<Cone> maximal = system.maximalCones();
  std::vector<IntegerVector> rays;
  for (const auto& c : maximal)
    for (auto& g : c.generators()) rays.push_back(std::move(g));
  sortVectors(rays);

  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : maximal) {
    std::vector<std::size_t> idx;
    for (const auto& g : c.generators()) {
      auto it = std::lower_bound(rays.begin(), rays.end(), g, [](const auto& a, const auto& b) { return compareLex(a, b) < 0; });
      idx.push_back(static_cast<std::size_t>(it - rays.begin()));
    }
    std::sort(idx.begin(), idx.end());
    cones.push_back(std::move(idx));
  }
  std::sort(cones.begin(), cones.end());

  Json j;
  j["formatVersion"] = kFormatVersion;
  j["latticeRank"] = system.ambientRank();
  j["rays"] = vectorsToJson(rays);
  j["cones"] = Json::array();
  for (const auto& c : cones) j["cones"].push_back(Json(c));
  return j;
}

ConeSystem fanFromJson(const Json& j) {
  checkFields(j, "fan", {"formatVersion", "latticeRank", "rays", "cones"}, {"linealityGenerators"});
  const std::size_t n = sizeFromJson(j.at("latticeRank"), "latticeRank");
  std::vector<IntegerVector> rays = vectorsFromJson(j.at("rays"), n, "ray");
  for (const auto& r : rays)
    if (isZero(r)) parseError("rays must be non-zero");
  std::vector<IntegerVector> lineality;
  if (j.contains("linealityGenerators")) lineality = vectorsFromJson(j.at("linealityGenerators"), n, "lineality generator");

  const Json& conesJson = j.at("cones");
  if (!conesJson.is_array()) parseError("cones must be an array of index lists");
  std::vector<Cone> cones;
  for (const auto& idx : conesJson) {
    if (!idx.is_array()) parseError("each cone must be an array of ray indices");
    std::vector<IntegerVector> gens;
    for (const auto& i : idx) {
      if (!i.is_number_integer() || i.get<long long>() < 0 || i.get<std::size_t>() >= rays.size())
        parseError("ray index " + i.dump() + " out of range");
      gens.push_back(rays[i.get<std::size_t>()]);
    }
    for (const auto& l : lineality) {
      gens.push_back(l);
      gens.push_back(negated(l));
    }
    cones.push_back(Cone::fromGenerators(n, gens));
  }
  return ConeSystem::faceClosureOf(n, cones);
}

Json coneToJson(const Cone& c) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["latticeRank"] = c.ambientRank();
  j["generators"] = vectorsToJson(sortedGenerators(c));
  return j;
}

Cone coneFromJson(const Json& j) {
  checkFields(j, "cone", {"formatVersion", "latticeRank", "generators"});
  const std::size_t n = sizeFromJson(j.at("latticeRank"), "latticeRank");
  return Cone::fromGenerators(n, vectorsFromJson(j.at("generators"), n, "generator"));
}

Json sublatticeToJson(const SublatticeBasis& l) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["ambientRank"] = l.ambientRank();
  j["basis"] = vectorsToJson(l.basis());
  return j;
}

SublatticeBasis sublatticeFromJson(const Json& j, bool saturateInput) {
  checkFields(j, "sublattice", {"formatVersion", "ambientRank", "basis"});
  const std::size_t n = sizeFromJson(j.at("ambientRank"), "ambientRank");
  SublatticeBasis l(n, vectorsFromJson(j.at("basis"), n, "basis vector"));
  if (l.isPrimitive()) return l;
  if (saturateInput) return saturate(l);
  throw Error(ErrorKind::NonPrimitiveSublattice, "sublattice is not saturated (pass --saturate to saturate it)");
}

Json quotientResultToJson(const QuotientResult& q, bool withTrace) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "QuotientResult";
  j["sublattice"] = sublatticeToJson(q.sublattice);
  j["enlargedKernel"] = sublatticeToJson(q.enlargedKernel);
  j["projection"] = matrixToJson(q.projection);
  j["quotientFan"] = fanToJson(q.quotientFan);
  if (withTrace) j["trace"] = q.trace.lines();
  return j;
}

Json goodModelToJson(const GoodModelResult& m) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "GoodModel";
  j["quotient"] = quotientResultToJson(m.quotient);
  j["hulls"] = Json::array();
  for (const auto& h : m.hulls) j["hulls"].push_back(coneToJson(h));
  j["collapsed"] = sublatticeToJson(m.collapsed);
  j["projection"] = matrixToJson(m.projection);
  j["model"] = fanToJson(m.model);
  j["factor"] = matrixToJson(m.factor);
  return j;
}

Json goodnessReportToJson(const GoodnessReport& r) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "GoodnessReport";
  j["isGood"] = r.isGood;
  j["isGeometric"] = r.isGeometric;
  j["perMaximalCone"] = Json::array();
  for (const auto& e : r.perMaximalCone) {
    Json x;
    x["target"] = coneToJson(e.target);
    x["source"] = optionalCone(e.source);
    x["failure"] = std::string(goodnessFailureName(e.failure));
    x["strayRay"] = optionalCone(e.strayRay);
    x["targetDim"] = e.targetDim;
    x["sourceDim"] = e.sourceDim ? Json(*e.sourceDim) : Json(nullptr);
    j["perMaximalCone"].push_back(std::move(x));
  }
  return j;
}

Json affineQuotientToJson(const AffineQuotient& a) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "AffineQuotient";
  j["face"] = coneToJson(a.face);
  j["enlargedKernel"] = sublatticeToJson(a.enlargedKernel);
  j["projection"] = matrixToJson(a.projection);
  j["image"] = coneToJson(a.image);
  return j;
}

Json fanQuotientToJson(const FanQuotient& q) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "FanQuotient";
  j["sublattice"] = sublatticeToJson(q.lattice);
  j["projection"] = matrixToJson(q.projection);
  j["fan"] = fanToJson(q.fan);
  return j;
}

std::string canonicalDump(const Json& j) {
  std::ostringstream os;
  dumpInto(os, j, 0);
  os << '\n';
  return os.str();
}

Json parseDocument(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parseError(e.what());
  }
}

Json readDocument(const std::string& path) {
  std::ifstream in(path);
  if (!in) parseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseDocument(buffer.str());
}

}  // namespace torquot
