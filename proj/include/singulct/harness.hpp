#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singulct/classify.hpp"
#include "singulct/expsum.hpp"
#include "singulct/families.hpp"

namespace singulct {

std::string versionString();

enum class Verdict { Pass, Fail, Inconclusive };
std::string toString(Verdict v);
/// Fail dominates Inconclusive, which dominates Pass.
Verdict combine(Verdict a, Verdict b);

/// diagonal(n, d) for n, d in [2, 6], then determinantal(n) for n in [2, 4].
std::vector<FamilyDescriptor> defaultGrid();

struct PolynomialInput {
  std::string text;
  std::vector<std::string> variables;

  Polynomial parse() const;
};

struct RunConfig {
  std::vector<FamilyDescriptor> grid = defaultGrid();

  /// verifyMoiBound input.
  PolynomialInput moiPolynomial{"x1^3 + x2^3", {"x1", "x2"}};
  std::string subscheme = "full";
  std::vector<std::uint64_t> primes{5, 7};
  unsigned maxLevel = 3;
  TwistSample twists;
  double epsilon = 0.1;
  /// |sigmaHat - lctPair| allowed when lctPair <= 1.
  double tolerance = 0.15;
  /// Boundedness passes when max_m |E(p^m)| p^{m (lctPair - epsilon)} <= boundCap for every prime.
  double boundCap = 1.0;

  /// Localization suite: every polynomial at every prime and level.
  std::vector<PolynomialInput> localizationPolynomials{
      {"x^2", {"x"}}, {"x1^2 + x2^2", {"x1", "x2"}}, {"x1^3 + x2^3", {"x1", "x2"}}};
  std::vector<std::uint64_t> localizationPrimes{5, 7};
  std::vector<unsigned> localizationLevels{2, 3};
  double localizationTolerance = 1e-9;

  /// Point-count slope check for the pair ideal.
  FamilyDescriptor slopeFamily = FamilyDescriptor::diagonal(2, 3);
  std::uint64_t slopePrime = 7;

  EnumerationOptions enumeration;
  BundleOptions bundle;

  /// Throws DomainError on nonpositive tolerances or budgets, or non-prime primes.
  void validate() const;
};

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string note;
  /// Present exactly when verdict is Fail: the smallest input that reproduces it.
  std::optional<nlohmann::json> counterexample;
  nlohmann::json data = nlohmann::json::object();
};

struct FamilyRecord {
  /// Family key ("diag:4,3") or polynomial text.
  std::string label;
  std::optional<FamilyDescriptor> family;
  std::size_t variableCount = 0;
  InvariantBundle bundle;
};

struct LabelledProfile {
  std::string label;
  DecayProfile profile;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<FamilyRecord> families;
  std::vector<LabelledProfile> profiles;
  std::vector<Check> checks;

  Verdict verdict() const;
};

Report runFamilyReport(const FamilyDescriptor& family, const RunConfig& config = {});
/// Throws DomainError on an empty grid.
Report verifyThmB(const std::vector<FamilyDescriptor>& grid, const RunConfig& config = {});
Report verifyMoiBound(const PolynomialInput& f, const RunConfig& config = {});
Report verifyLocalization(const RunConfig& config = {});
/// -log_p(N_j / p^{jn}) / j for the pair ideal at the largest j within budget, against lctPair - tolerance.
Report verifyPointCountSlope(const FamilyDescriptor& family, std::uint64_t prime, const RunConfig& config = {});
Report invariantsReport(const PolynomialInput& f, const RunConfig& config = {});
Report expsumReport(const PolynomialInput& f, const RunConfig& config = {});
/// Family grid, Theorem B, moi bound, localization and point-count checks together.
Report runFullSuite(const RunConfig& config = {});

enum class ReportFormat { Json, Csv };
ReportFormat parseReportFormat(const std::string& text);

nlohmann::json reportToJson(const Report& report);
/// Canonical text: sorted keys, floats with 17 significant digits, rationals as "num/den".
std::string renderReport(const Report& report, ReportFormat format);
/// Throws IoError (echoing the path) when the file cannot be written.
void emitReport(const Report& report, ReportFormat format, const std::string& path);

/// Compact canonical JSON of an arbitrary value.
std::string canonicalJson(const nlohmann::json& value);

}  // namespace singulct
