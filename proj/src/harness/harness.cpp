#include "singulct/harness.hpp"

#include <cmath>

#include "singulct/error.hpp"
#include "singulct/ideals.hpp"
#include "singulct/modular.hpp"

#ifndef SINGULCT_VERSION
#define SINGULCT_VERSION "0.0.0"
#endif

namespace singulct {

using nlohmann::json;

namespace {

const ExtendedRational kOne{Rational(1)};

json exactField(const ExtendedRational& value, Provenance provenance) {
  return {{"value", value.toString()}, {"provenance", toString(provenance)}};
}

json bundleToJson(const FamilyRecord& record) {
  const auto& b = record.bundle;
  json out = {{"label", record.label}, {"variables", record.variableCount}};
  if (record.family) {
    out["family"] = record.family->key();
  }
  out["lct_pair"] = {{"value", b.lctPair.value.toString()},
                     {"provenance", toString(b.lctPair.provenance)},
                     {"pathway", b.lctPair.pathway},
                     {"certified", b.lctPair.certified}};
  out["lct_f"] = exactField(b.lctF, b.lctFProvenance);
  out["min_exp"] = b.minExp ? exactField(*b.minExp, b.minExpProvenance) : json(nullptr);
  out["milnor"] = b.milnor ? json{{"value", *b.milnor}, {"provenance", toString(b.milnorProvenance)}} : json(nullptr);
  out["rational_singularities"] = {{"value", b.rationalSingularities}, {"pathway", "lct_pair > 1"}};
  return out;
}

json profileToJson(const LabelledProfile& labelled) {
  const auto& p = labelled.profile;
  json rows = json::array();
  for (const auto& r : p.rows) {
    rows.push_back({{"p", r.prime},
                    {"m", r.level},
                    {"twists", r.twistCount},
                    {"max_abs", r.maxAbs},
                    {"exponent", r.exponent},
                    {"all_exact_zero", r.allExactZero},
                    {"skipped", r.skipped}});
  }
  json perPrime = json::object();
  for (const auto& [prime, sigma] : p.sigmaPerPrime) perPrime[std::to_string(prime)] = sigma;
  return {{"label", labelled.label},
          {"rows", rows},
          {"sigma_per_prime", perPrime},
          {"sigma_hat", p.sigmaHat ? json(*p.sigmaHat) : json(nullptr)},
          {"sigma_hat_kind", "empirical estimate over sampled twists"},
          {"incomplete", p.incomplete}};
}

FamilyRecord familyRecord(const FamilyDescriptor& family, const RunConfig& config) {
  return {family.key(), family, family.polynomial().variableCount(), invariantBundle(family, config.bundle)};
}

Check makeCheck(std::string name, Verdict verdict = Verdict::Pass, std::string note = {}) {
  Check check;
  check.name = std::move(name);
  check.verdict = verdict;
  check.note = std::move(note);
  return check;
}

Check failCheck(Check check, json counterexample) {
  check.verdict = Verdict::Fail;
  check.counterexample = std::move(counterexample);
  return check;
}

// Theorem B for one family: min_exp >= lct_pair, with the strict/equality label.
Check thmBCheck(const FamilyRecord& record) {
  Check check = makeCheck("thmB:" + record.label);
  const auto& b = record.bundle;
  if (!b.minExp) {
    check.verdict = Verdict::Inconclusive;
    check.note = "minimal exponent unavailable";
    return check;
  }
  const bool strict = *b.minExp > b.lctPair.value;
  check.data = {{"lct_pair", b.lctPair.value.toString()},
                {"min_exp", b.minExp->toString()},
                {"relation", strict ? "strict" : (*b.minExp == b.lctPair.value ? "equality" : "violated")}};
  if (*b.minExp < b.lctPair.value) {
    return failCheck(check, {{"family", record.label}});
  }
  if (!b.lctPair.certified) {
    check.verdict = Verdict::Inconclusive;
    check.note = "lct search not certified";
    return check;
  }
  check.note = strict ? "strict" : "equality";
  return check;
}

// Theorem A at family scale: lct_pair > 1 iff min_exp > 1.
Check thmACheck(const FamilyRecord& record) {
  Check check = makeCheck("thmA:" + record.label);
  const auto& b = record.bundle;
  if (!b.minExp) {
    check.verdict = Verdict::Inconclusive;
    check.note = "minimal exponent unavailable";
    return check;
  }
  const bool viaMinExp = *b.minExp > kOne;
  check.data = {{"rs_by_lct_pair", b.rationalSingularities}, {"rs_by_min_exp", viaMinExp}};
  if (viaMinExp != b.rationalSingularities) return failCheck(check, {{"family", record.label}});
  check.note = b.rationalSingularities ? "rational singularities" : "not rational";
  return check;
}

enum EchoSection : unsigned { kEchoGrid = 1, kEchoMoi = 2, kEchoLocalization = 4, kEchoSlope = 8, kEchoAll = 15 };

std::string twistText(const TwistSample& t) {
  if (t.mode == TwistSample::Mode::All) return "all";
  if (t.mode == TwistSample::Mode::Default) return "default";
  return std::to_string(t.count);
}

json configEcho(const RunConfig& config, unsigned sections) {
  json out = {{"budget", config.enumeration.budget},
              {"determinantal_bound", config.bundle.pair.determinantalBound},
              {"milnor_mode", config.bundle.milnor.mode == MilnorMode::Exact ? "exact" : "modular"},
              {"residue_fields", "prime fields F_p only; unramified extensions not supported"}};
  if (sections & kEchoGrid) {
    json grid = json::array();
    for (const auto& f : config.grid) grid.push_back(f.key());
    out["grid"] = grid;
  }
  if (sections & kEchoMoi) {
    out["subscheme"] = config.subscheme;
    out["primes"] = config.primes;
    out["max_level"] = config.maxLevel;
    out["twists"] = twistText(config.twists);
    out["epsilon"] = config.epsilon;
    out["tolerance"] = config.tolerance;
    out["bound_cap"] = config.boundCap;
  }
  if (sections & kEchoLocalization) {
    json polys = json::array();
    for (const auto& p : config.localizationPolynomials) polys.push_back({{"poly", p.text}, {"vars", p.variables}});
    out["localization_polynomials"] = polys;
    out["localization_primes"] = config.localizationPrimes;
    out["localization_levels"] = config.localizationLevels;
    out["localization_tolerance"] = config.localizationTolerance;
    out["subscheme"] = config.subscheme;
    out["twists"] = twistText(config.twists);
  }
  if (sections & kEchoSlope) {
    out["slope_family"] = config.slopeFamily.key();
    out["slope_prime"] = config.slopePrime;
    out["tolerance"] = config.tolerance;
  }
  return out;
}

Report newReport(const std::string& command, const RunConfig& config, unsigned sections = 0) {
  Report report;
  report.command = command;
  report.inputs = configEcho(config, sections);
  return report;
}

std::vector<Check> moiChecks(const PolynomialInput& input, const RunConfig& config, LabelledProfile& out) {
  const Polynomial f = input.parse();
  const SubschemeSpec z = SubschemeSpec::preset(config.subscheme, f);
  const PairLct pair = pairLct(f, config.bundle.pair);
  out.label = input.text;
  out.profile = decayProfile(f, z, config.primes, config.maxLevel, config.twists, config.enumeration);
  const auto& profile = out.profile;
  const json counterexample = {{"poly", input.text}, {"vars", input.variables}, {"subscheme", config.subscheme},
                               {"primes", config.primes}, {"max_level", config.maxLevel}};

  Check bound = makeCheck("moi-bound:" + input.text);
  Check match = makeCheck("moi-sigma:" + input.text);
  bound.data["lct_pair"] = {{"value", pair.value.toString()}, {"pathway", pair.pathway}};
  match.data["lct_pair"] = bound.data["lct_pair"];

  if (pair.value.isInfinite()) {
    bound.note = "lct_pair infinite; bound vacuous";
  } else {
    const double sigma = pair.value.value().toDouble() - config.epsilon;
    json constants = json::object();
    bool bounded = true;
    for (const auto p : config.primes) {
      const double c = decayBoundConstant(profile, p, sigma);
      constants[std::to_string(p)] = c;
      bounded = bounded && c <= config.boundCap;
    }
    bound.data["sigma"] = sigma;
    bound.data["constants"] = constants;
    bound.data["cap"] = config.boundCap;
    if (!bounded) {
      bound = failCheck(bound, counterexample);
    } else if (profile.incomplete) {
      bound.verdict = Verdict::Inconclusive;
      bound.note = "budget exceeded at some level";
    } else {
      bound.note = "bounded";
    }
  }

  match.data["sigma_hat"] = profile.sigmaHat ? json(*profile.sigmaHat) : json(nullptr);
  match.data["tolerance"] = config.tolerance;
  if (!profile.sigmaHat) {
    match.verdict = Verdict::Inconclusive;
    match.note = "no level m >= 2 within budget";
  } else if (pair.value > kOne) {
    match.note = "lct_pair > 1; equality regime not claimed";
  } else {
    const double target = pair.value.value().toDouble();
    if (profile.incomplete) {
      match.verdict = Verdict::Inconclusive;
      match.note = "budget exceeded at some level";
    } else if (std::fabs(*profile.sigmaHat - target) > config.tolerance) {
      match = failCheck(match, counterexample);
    } else {
      match.note = "sigma_hat within tolerance of lct_pair";
    }
  }
  if (!pair.certified) {
    for (Check* c : {&bound, &match}) {
      if (c->verdict == Verdict::Pass) {
        c->verdict = Verdict::Inconclusive;
        c->note = "lct search not certified";
      }
    }
  }
  return {bound, match};
}

std::vector<Check> localizationChecks(const RunConfig& config) {
  std::vector<Check> checks;
  for (const auto& input : config.localizationPolynomials) {
    const Polynomial f = input.parse();
    for (const auto p : config.localizationPrimes) {
      for (const auto level : config.localizationLevels) {
        Check check = makeCheck("localization:" + input.text + "@" + std::to_string(p) + "^" + std::to_string(level));
        const json counterexample = {{"poly", input.text}, {"vars", input.variables}, {"prime", p}, {"level", level}};
        try {
          const auto r = localizationCheck(f, PrimePowerModulus(p, level), SubschemeSpec::preset(config.subscheme, f),
                                           config.twists, 0, config.enumeration);
          check.data = {{"threshold", r.degreeThreshold},
                        {"threshold_met", r.thresholdMet},
                        {"max_discrepancy", r.maxDiscrepancy},
                        {"complements_exact_zero", r.allComplementsZero},
                        {"twists", r.twists.size()}};
          if (!r.thresholdMet) {
            check.verdict = Verdict::Inconclusive;
            check.note = "p not above the degree threshold";
          } else if (!r.allComplementsZero || r.maxDiscrepancy > config.localizationTolerance) {
            check = failCheck(check, counterexample);
          } else {
            check.note = "identities certified";
          }
        } catch (const BudgetExceeded& e) {
          check.verdict = Verdict::Inconclusive;
          check.note = e.what();
        }
        checks.push_back(std::move(check));
      }
    }
  }
  return checks;
}

Check slopeCheck(const FamilyDescriptor& family, std::uint64_t prime, const RunConfig& config) {
  Check check = makeCheck("pointcount-slope:" + family.key() + "@" + std::to_string(prime));
  const Polynomial f = family.polynomial();
  const std::size_t n = f.variableCount();
  const PairLct pair = pairLct(family, config.bundle.pair);
  const IdealPresentation ideal = pairIdeal(f);
  json rows = json::array();
  std::optional<double> lastSlope;
  for (unsigned j = 1;; ++j) {
    const auto size = checkedPow(prime, j * static_cast<unsigned>(n));
    if (!size || *size > config.enumeration.budget) break;
    const std::uint64_t count = pointCount(ideal, PrimePowerModulus(prime, j), SubschemeSpec::fullSpace(n),
                                           config.enumeration);
    const double slope = -std::log(static_cast<double>(count) / static_cast<double>(*size)) /
                         (static_cast<double>(j) * std::log(static_cast<double>(prime)));
    rows.push_back({{"j", j}, {"count", count}, {"slope", slope}});
    lastSlope = slope;
  }
  check.data = {{"lct_pair", pair.value.toString()}, {"rows", rows}, {"tolerance", config.tolerance}};
  if (!lastSlope) {
    check.verdict = Verdict::Inconclusive;
    check.note = "no level within budget";
    return check;
  }
  if (!pair.value.isInfinite() && *lastSlope < pair.value.value().toDouble() - config.tolerance) {
    return failCheck(check, {{"family", family.key()}, {"prime", prime}});
  }
  check.note = "slope at the largest feasible level";
  return check;
}

}  // namespace

std::string versionString() { return std::string("singulct ") + SINGULCT_VERSION; }

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

std::vector<FamilyDescriptor> defaultGrid() {
  std::vector<FamilyDescriptor> grid;
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned d = 2; d <= 6; ++d) grid.push_back(FamilyDescriptor::diagonal(n, d));
  }
  for (unsigned n = 2; n <= 4; ++n) grid.push_back(FamilyDescriptor::determinantal(n));
  return grid;
}

Polynomial PolynomialInput::parse() const { return parsePolynomial(text, variables); }

void RunConfig::validate() const {
  if (!(tolerance > 0) || !(epsilon > 0) || !(boundCap > 0) || !(localizationTolerance > 0)) {
    throw DomainError("tolerances must be positive");
  }
  if (enumeration.budget == 0) throw DomainError("point budget must be positive");
  if (maxLevel == 0) throw DomainError("maximal level must be positive");
  for (const auto* list : {&primes, &localizationPrimes}) {
    for (const auto p : *list) {
      if (!isPrime(p)) throw DomainError(std::to_string(p) + " is not prime");
    }
  }
  if (!isPrime(slopePrime)) throw DomainError(std::to_string(slopePrime) + " is not prime");
}

Verdict Report::verdict() const {
  Verdict v = Verdict::Pass;
  for (const auto& c : checks) v = combine(v, c.verdict);
  return v;
}

Report runFamilyReport(const FamilyDescriptor& family, const RunConfig& config) {
  Report report = newReport("family", config);
  report.inputs["family"] = family.key();
  report.families.push_back(familyRecord(family, config));
  report.checks.push_back(thmACheck(report.families.back()));
  report.checks.push_back(thmBCheck(report.families.back()));
  return report;
}

Report verifyThmB(const std::vector<FamilyDescriptor>& grid, const RunConfig& config) {
  if (grid.empty()) throw DomainError("Theorem B verification needs a nonempty family grid");
  Report report = newReport("verify-thmB", config, kEchoGrid);
  json members = json::array();
  for (const auto& f : grid) members.push_back(f.key());
  report.inputs["grid"] = members;
  for (const auto& f : grid) {
    report.families.push_back(familyRecord(f, config));
    report.checks.push_back(thmBCheck(report.families.back()));
  }
  return report;
}

Report verifyMoiBound(const PolynomialInput& f, const RunConfig& config) {
  config.validate();
  Report report = newReport("verify-moi", config, kEchoMoi);
  report.inputs["poly"] = f.text;
  report.inputs["vars"] = f.variables;
  LabelledProfile profile;
  for (auto& c : moiChecks(f, config, profile)) report.checks.push_back(std::move(c));
  report.profiles.push_back(std::move(profile));
  return report;
}

Report verifyLocalization(const RunConfig& config) {
  config.validate();
  Report report = newReport("verify-localization", config, kEchoLocalization);
  report.checks = localizationChecks(config);
  return report;
}

Report verifyPointCountSlope(const FamilyDescriptor& family, std::uint64_t prime, const RunConfig& config) {
  config.validate();
  Report report = newReport("verify-pointcount", config, kEchoSlope);
  report.inputs["slope_family"] = family.key();
  report.inputs["slope_prime"] = prime;
  report.checks.push_back(slopeCheck(family, prime, config));
  return report;
}

Report invariantsReport(const PolynomialInput& input, const RunConfig& config) {
  Report report = newReport("invariants", config);
  report.inputs["poly"] = input.text;
  report.inputs["vars"] = input.variables;
  const Polynomial f = input.parse();
  InvariantBundle bundle;
  try {
    bundle = invariantBundle(f, config.bundle);
  } catch (const DomainError& e) {
    // No supported lct pathway; the Milnor number may still be available.
    Check check = makeCheck("lct-pathway:" + input.text, Verdict::Inconclusive, e.what());
    if (config.bundle.computeMilnor) {
      try {
        check.data["milnor"] = {{"value", milnorNumber(f, config.bundle.milnor).value},
                                {"provenance", toString(Provenance::Colength)}};
      } catch (const Error& milnorError) {
        check.data["milnor"] = {{"error", milnorError.what()}};
      }
    }
    report.checks.push_back(check);
    return report;
  }
  FamilyRecord record{input.text, recognizeFamily(f), f.variableCount(), std::move(bundle)};
  if (record.bundle.minExp) {
    report.checks.push_back(thmACheck(record));
    report.checks.push_back(thmBCheck(record));
  } else if (!record.bundle.lctPair.certified) {
    Check check = makeCheck("lct-certificate:" + input.text, Verdict::Inconclusive, "lct search not certified");
    report.checks.push_back(check);
  }
  report.families.push_back(std::move(record));
  return report;
}

Report expsumReport(const PolynomialInput& input, const RunConfig& config) {
  config.validate();
  Report report = newReport("expsum", config, kEchoMoi);
  report.inputs["poly"] = input.text;
  report.inputs["vars"] = input.variables;
  const Polynomial f = input.parse();
  LabelledProfile labelled{input.text,
                           decayProfile(f, SubschemeSpec::preset(config.subscheme, f), config.primes, config.maxLevel,
                                        config.twists, config.enumeration)};
  if (labelled.profile.incomplete) {
    Check check = makeCheck("budget:" + input.text, Verdict::Inconclusive, "some levels exceeded the point budget");
    report.checks.push_back(check);
  }
  report.profiles.push_back(std::move(labelled));
  return report;
}

Report runFullSuite(const RunConfig& config) {
  config.validate();
  if (config.grid.empty()) throw DomainError("the full suite needs a nonempty family grid");
  Report report = newReport("report", config, kEchoAll);
  report.inputs["moi_poly"] = {{"poly", config.moiPolynomial.text}, {"vars", config.moiPolynomial.variables}};
  for (const auto& f : config.grid) {
    report.families.push_back(familyRecord(f, config));
    report.checks.push_back(thmACheck(report.families.back()));
    report.checks.push_back(thmBCheck(report.families.back()));
  }
  LabelledProfile profile;
  for (auto& c : moiChecks(config.moiPolynomial, config, profile)) report.checks.push_back(std::move(c));
  report.profiles.push_back(std::move(profile));
  for (auto& c : localizationChecks(config)) report.checks.push_back(std::move(c));
  report.checks.push_back(slopeCheck(config.slopeFamily, config.slopePrime, config));
  return report;
}

json reportToJson(const Report& report) {
  json families = json::array();
  for (const auto& f : report.families) families.push_back(bundleToJson(f));
  json profiles = json::array();
  for (const auto& p : report.profiles) profiles.push_back(profileToJson(p));
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name}, {"verdict", toString(c.verdict)}, {"note", c.note}, {"data", c.data}};
    if (c.counterexample) entry["counterexample"] = *c.counterexample;
    checks.push_back(entry);
  }
  return {{"version", versionString()},
          {"command", report.command},
          {"inputs", report.inputs},
          {"families", families},
          {"decay_profiles", profiles},
          {"checks", checks},
          {"verdict", toString(report.verdict())}};
}

}  // namespace singulct
