#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "singulct/error.hpp"
#include "singulct/harness.hpp"

using namespace singulct;


namespace {

const Check& findCheck(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return c;
  }
  throw std::runtime_error("missing check " + prefix);
}

RunConfig quickConfig() {
  RunConfig c;
  c.grid = {FamilyDescriptor::diagonal(3, 2), FamilyDescriptor::diagonal(4, 3), FamilyDescriptor::determinantal(2)};
  c.primes = {5};
  c.maxLevel = 2;
  c.localizationPolynomials = {{"x^2", {"x"}}};
  c.localizationPrimes = {5};
  c.localizationLevels = {2};
  c.slopePrime = 5;
  c.enumeration.budget = 100000;
  return c;
}

}  // namespace

TEST_CASE("family reports") {
  const auto d43 = runFamilyReport(FamilyDescriptor::diagonal(4, 3));
  const auto& b = d43.families.at(0).bundle;
  CHECK(b.lctPair.value.toString() == "5/4");
  CHECK(b.minExp->toString() == "4/3");
  CHECK(b.rationalSingularities);
  CHECK(toString(findCheck(d43, "thmB").verdict) == "pass");
  CHECK(findCheck(d43, "thmB").note == "strict");
  CHECK(toString(d43.verdict()) == "pass");

  const auto det2 = runFamilyReport(FamilyDescriptor::determinantal(2));
  CHECK(det2.families.at(0).bundle.lctPair.value.toString() == "2/1");
  CHECK(det2.families.at(0).bundle.minExp->toString() == "2/1");
  CHECK(det2.families.at(0).bundle.rationalSingularities);
  CHECK(findCheck(det2, "thmB").note == "equality");

  const auto d24 = runFamilyReport(FamilyDescriptor::diagonal(2, 4));
  CHECK(d24.families.at(0).bundle.lctPair.value.toString() == "1/2");
  CHECK(d24.families.at(0).bundle.lctF.toString() == "1/2");
  CHECK_FALSE(d24.families.at(0).bundle.rationalSingularities);
  CHECK(d24.families.at(0).bundle.milnor == 9u);
}

TEST_CASE("Theorem B suite") {
  const auto full = verifyThmB(defaultGrid());
  CHECK(toString(full.verdict()) == "pass");
  for (const auto& record : full.families) {
    const auto& check = findCheck(full, "thmB:" + record.label);
    const bool strictExpected = record.family->kind() == FamilyKind::Diagonal && record.family->d() >= 3 &&
                                record.family->d() < record.family->n();
    CHECK_MESSAGE(check.note == (strictExpected ? "strict" : "equality"), record.label);
  }
  const auto single = verifyThmB({FamilyDescriptor::diagonal(5, 3)});
  CHECK(toString(single.verdict()) == "pass");
  CHECK(single.checks.at(0).note == "strict");
  CHECK_THROWS_AS(verifyThmB({}), DomainError);
}

TEST_CASE("moi bound suite") {
  RunConfig config;
  config.primes = {3, 5, 7};
  config.maxLevel = 6;
  const auto square = verifyMoiBound({"x^2", {"x"}}, config);
  CHECK(toString(square.verdict()) == "pass");
  CHECK(square.profiles.at(0).profile.sigmaHat.value() == doctest::Approx(0.5).epsilon(1e-9));
  for (const auto& row : square.profiles.at(0).profile.rows) {
    if (row.level % 2 == 0) CHECK(row.exponent == doctest::Approx(0.5).epsilon(1e-9));
  }

  RunConfig cubic;
  cubic.primes = {7};
  cubic.maxLevel = 3;
  CHECK(toString(verifyMoiBound({"x1^3 + x2^3", {"x1", "x2"}}, cubic).verdict()) == "pass");

  const auto smooth = verifyMoiBound({"x", {"x"}}, cubic);
  CHECK(toString(smooth.verdict()) == "pass");
  CHECK(std::isinf(smooth.profiles.at(0).profile.sigmaHat.value()));

  // level 2 alone sees exponent 1, far from lct_pair = 2/3
  RunConfig shallow = cubic;
  shallow.primes = {5};
  shallow.maxLevel = 2;
  const auto failing = verifyMoiBound({"x1^3 + x2^3", {"x1", "x2"}}, shallow);
  CHECK(toString(failing.verdict()) == "fail");
  CHECK(findCheck(failing, "moi-sigma").counterexample.has_value());

  RunConfig starved = cubic;
  starved.enumeration.budget = 1000;
  CHECK(toString(verifyMoiBound({"x1^3 + x2^3", {"x1", "x2"}}, starved).verdict()) == "inconclusive");

  CHECK_THROWS_AS(verifyMoiBound({"x^2 + x*y^3 + y^5", {"x", "y"}}, cubic), DomainError);
}

TEST_CASE("localization and point-count suites") {
  const auto loc = verifyLocalization();
  CHECK(toString(loc.verdict()) == "pass");
  CHECK(loc.checks.size() == 12);

  RunConfig low;
  low.localizationPolynomials = {{"x^3", {"x"}}};
  low.localizationPrimes = {3};
  CHECK(toString(verifyLocalization(low).verdict()) == "inconclusive");

  const auto slope = verifyPointCountSlope(FamilyDescriptor::diagonal(2, 3), 7);
  CHECK(toString(slope.verdict()) == "pass");
  const auto& rows = slope.checks.at(0).data.at("rows");
  CHECK(rows.back().at("j") == 4);
  CHECK(rows.back().at("count") == 19ULL * 2401ULL);
}

TEST_CASE("report rendering") {
  RunConfig config = quickConfig();
  const auto report = runFullSuite(config);
  const std::string a = renderReport(report, ReportFormat::Json);
  const std::string b = renderReport(runFullSuite(config), ReportFormat::Json);
  CHECK(a == b);
  CHECK(a.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(a.find("\"lct_pair\"") != std::string::npos);

  const auto parsed = nlohmann::json::parse(a);
  CHECK(parsed.at("version") == versionString());

  const std::string csv = renderReport(report, ReportFormat::Csv);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,d,lct_pair,lct_f,min_exp,milnor,rs");
  std::string row;
  std::getline(lines, row);
  CHECK(row == "3,2,3/2,1/1,3/2,1,true");
  // same rationals in both renderings
  for (const auto& family : parsed.at("families")) {
    CHECK(csv.find(family.at("lct_pair").at("value").get<std::string>()) != std::string::npos);
  }

  CHECK(canonicalJson({{"b", 0.1}, {"a", std::numeric_limits<double>::infinity()}}) ==
        "{\"a\":\"inf\",\"b\":0.10000000000000001}");

  const auto dir = std::filesystem::temp_directory_path() / "singulct_report_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "r.json").string();
  emitReport(report, ReportFormat::Json, path);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == a);

  const std::string bad = "/nonexistent-dir/x/report.json";
  try {
    emitReport(report, ReportFormat::Csv, bad);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(bad) != std::string::npos);
  }
  CHECK_THROWS_AS(parseReportFormat("xml"), DomainError);
}

TEST_CASE("run config validation") {
  RunConfig c;
  c.tolerance = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = RunConfig{};
  c.primes = {4};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = RunConfig{};
  c.enumeration.budget = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK_NOTHROW(RunConfig{}.validate());
}
