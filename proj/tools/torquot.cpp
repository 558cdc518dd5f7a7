#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torquot/document.hpp"

using namespace torquot;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;
constexpr int kNegative = 3;

void emit(const Json& doc, const std::string& out) {
  const std::string text = canonicalDump(doc);
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + out + "'");
  file << text;
}

ConeSystem loadFan(const std::string& path) { return fanFromJson(readDocument(path)); }

SublatticeBasis loadSublattice(const std::string& path, bool saturateInput) {
  return sublatticeFromJson(readDocument(path), saturateInput);
}

void requireFan(const ConeSystem& fan, bool allowSystem) {
  if (fan.empty()) throw Error(ErrorKind::EmptySystem, "the fan document has no cones");
  if (allowSystem) return;
  FanValidation v = validateFan(fan);
  if (!v.isFan())
    throw Error(ErrorKind::InvalidFan, std::string("input is classified as ") +
                                           std::string(fanClassName(v.classification)));
}

int runValidate(const std::string& path, const std::string& accept, bool listCones) {
  ConeSystem system = loadFan(path);
  FanValidation v = validateFan(system);
  std::cout << fanClassName(v.classification) << '\n';
  for (const auto& violation : v.violations) {
    std::cout << "violation " << violationKindName(violation.kind) << ' ' << violation.first;
    if (violation.second) std::cout << ' ' << *violation.second;
    std::cout << '\n';
  }
  if (listCones)
    for (std::size_t i = 0; i < system.size(); ++i) std::cout << "cone " << i << ' ' << system.cones()[i].toString() << '\n';
  bool ok = accept == "fan" ? v.isFan() : accept == "quasifan" ? v.isQuasifan() : !system.empty();
  return ok ? kOk : kNegative;
}

struct QuotientOptions {
  std::string fan, sublattice, out, oracle;
  bool trace = false, allowSystem = false, saturate = false;
};

int runQuotient(const QuotientOptions& o) {
  ConeSystem fan = loadFan(o.fan);
  SublatticeBasis l = loadSublattice(o.sublattice, o.saturate);
  requireFan(fan, o.allowSystem);
  QuotientResult q = quotientFan(fan, l);
  if (!o.oracle.empty()) {
    QuotientResult oracle = codim2QuotientOracle(fan, l);
    if (canonicalDump(quotientResultToJson(q)) != canonicalDump(quotientResultToJson(oracle))) {
      std::cerr << "oracle mismatch\nalgorithm:\n"
                << canonicalDump(quotientResultToJson(q)) << "oracle:\n"
                << canonicalDump(quotientResultToJson(oracle));
      return kInternalError;
    }
  }
  emit(quotientResultToJson(q, o.trace), o.out);
  return kOk;
}

int runGoodModel(const std::string& fanPath, const std::string& subPath, const std::string& out, bool saturate) {
  ConeSystem fan = loadFan(fanPath);
  SublatticeBasis l = loadSublattice(subPath, saturate);
  requireFan(fan, false);
  emit(goodModelToJson(goodModel(fan, l)), out);
  return kOk;
}

int runCheckGood(const std::string& fanPath, const std::string& subPath, bool requireGeometric, bool saturate) {
  ConeSystem fan = loadFan(fanPath);
  SublatticeBasis l = loadSublattice(subPath, saturate);
  requireFan(fan, false);
  GoodnessReport report = checkGoodQuotient(fan, quotientFan(fan, l));
  emit(goodnessReportToJson(report), "");
  bool ok = requireGeometric ? report.isGeometric : report.isGood;
  return ok ? kOk : kNegative;
}

int runAffineQuotient(const std::string& conePath, const std::string& subPath, const std::string& out, bool saturate) {
  Cone sigma = coneFromJson(readDocument(conePath));
  SublatticeBasis l = loadSublattice(subPath, saturate);
  emit(affineQuotientToJson(affineQuotient(sigma, l)), out);
  return kOk;
}

int runOrbitClosure(const std::string& fanPath, std::optional<std::size_t> index, const std::string& conePath,
                    const std::string& out) {
  ConeSystem fan = loadFan(fanPath);
  requireFan(fan, false);
  Cone tau;
  if (index) {
    if (*index >= fan.size())
      throw Error(ErrorKind::ConeNotInFan, "cone index " + std::to_string(*index) + " out of range (fan has " +
                                               std::to_string(fan.size()) + " cones)");
    tau = fan.cones()[*index];
  } else {
    tau = coneFromJson(readDocument(conePath));
  }
  emit(fanQuotientToJson(orbitClosureFan(fan, tau)), out);
  return kOk;
}

struct InducedOptions {
  std::string sourceFan, sourceSublattice, targetFan, targetSublattice, matrix, out;
  bool saturate = false;
};

int runInducedMap(const InducedOptions& o) {
  ConeSystem from = loadFan(o.sourceFan);
  ConeSystem to = loadFan(o.targetFan);
  requireFan(from, false);
  requireFan(to, false);
  SublatticeBasis l = loadSublattice(o.sourceSublattice, o.saturate);
  SublatticeBasis lt = loadSublattice(o.targetSublattice, o.saturate);
  IntegerMatrix f = matrixFromJson(readDocument(o.matrix));
  GoodModelResult source = goodModel(from, l);
  GoodModelResult target = goodModel(to, lt);
  IntegerMatrix induced = inducedGoodModelMap(f, source, target);
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "InducedMap";
  j["sourceModel"] = fanToJson(source.model);
  j["targetModel"] = fanToJson(target.model);
  j["matrix"] = matrixToJson(induced);
  emit(j, o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotient fans of toric varieties by subtori"};
  app.require_subcommand(1);

  std::string validatePath, accept = "fan";
  bool listCones = false;
  auto* validate = app.add_subcommand("validate", "Classify a cone system as Fan, Quasifan or ConeSystem");
  validate->add_option("fan", validatePath, "fan document")->required();
  validate->add_option("--accept", accept, "class required for exit code 0")
      ->check(CLI::IsMember({"fan", "quasifan", "system"}));
  validate->add_flag("--list-cones", listCones, "print the face-closed cone list");

  QuotientOptions q;
  auto* quotient = app.add_subcommand("quotient", "Quotient fan by a sublattice");
  quotient->add_option("--fan", q.fan)->required();
  quotient->add_option("--sublattice", q.sublattice)->required();
  quotient->add_option("--out", q.out);
  quotient->add_flag("--trace", q.trace, "include the loop log");
  quotient->add_option("--oracle", q.oracle, "cross-check against another construction")
      ->check(CLI::IsMember({"codim2"}));
  quotient->add_flag("--allow-system", q.allowSystem, "accept any cone system");
  quotient->add_flag("--saturate", q.saturate, "saturate a non-primitive sublattice");

  std::string fanPath, subPath, conePath, out;
  bool saturate = false, requireGeometric = false;
  auto* good = app.add_subcommand("good-model", "Good model of a fan");
  good->add_option("--fan", fanPath)->required();
  good->add_option("--sublattice", subPath)->required();
  good->add_option("--out", out);
  good->add_flag("--saturate", saturate);

  auto* check = app.add_subcommand("check-good", "Check whether the quotient is good");
  check->add_option("--fan", fanPath)->required();
  check->add_option("--sublattice", subPath)->required();
  check->add_flag("--require-geometric", requireGeometric);
  check->add_flag("--saturate", saturate);

  auto* affine = app.add_subcommand("affine-quotient", "Quotient of an affine toric variety");
  affine->add_option("--cone", conePath)->required();
  affine->add_option("--sublattice", subPath)->required();
  affine->add_option("--out", out);
  affine->add_flag("--saturate", saturate);

  std::optional<std::size_t> coneIndex;
  auto* orbit = app.add_subcommand("orbit-closure", "Fan of an orbit closure");
  orbit->add_option("--fan", fanPath)->required();
  auto* indexOpt = orbit->add_option("--cone-index", coneIndex, "index into the face-closed cone list");
  auto* raysOpt = orbit->add_option("--cone-rays", conePath, "cone document");
  indexOpt->excludes(raysOpt);
  orbit->add_option("--out", out);

  InducedOptions im;
  auto* induced = app.add_subcommand("induced-map", "Map of good models induced by an equivariant map");
  induced->add_option("--source-fan", im.sourceFan)->required();
  induced->add_option("--source-sublattice", im.sourceSublattice)->required();
  induced->add_option("--target-fan", im.targetFan)->required();
  induced->add_option("--target-sublattice", im.targetSublattice)->required();
  induced->add_option("--matrix", im.matrix)->required();
  induced->add_option("--out", im.out);
  induced->add_flag("--saturate", im.saturate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return runValidate(validatePath, accept, listCones);
    if (*quotient) return runQuotient(q);
    if (*good) return runGoodModel(fanPath, subPath, out, saturate);
    if (*check) return runCheckGood(fanPath, subPath, requireGeometric, saturate);
    if (*affine) return runAffineQuotient(conePath, subPath, out, saturate);
    if (*orbit) {
      if (!coneIndex && conePath.empty()) {
        std::cerr << "orbit-closure: one of --cone-index or --cone-rays is required\n";
        return kInputError;
      }
      return runOrbitClosure(fanPath, coneIndex, conePath, out);
    }
    if (*induced) return runInducedMap(im);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.isInternal() ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}
