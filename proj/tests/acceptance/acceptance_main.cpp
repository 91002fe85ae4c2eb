// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/generators.hpp"
#include "singulct/classify.hpp"
#include "singulct/expsum.hpp"
#include "singulct/families.hpp"
#include "singulct/harness.hpp"
#include "singulct/ideals.hpp"
#include "singulct/lct.hpp"
#include "singulct/milnor.hpp"
#include "singulct/polynomial.hpp"

using namespace singulct;

namespace {

// Pinned tolerances.
constexpr double kAbsTol = 1e-9;
constexpr double kExponentTol = 1e-6;
constexpr double kSigmaTol = 0.15;
constexpr double kSlopeTol = 0.15;
constexpr double kLocalizationTol = 1e-9;
constexpr double kDeterminantalSeconds = 1.0;
constexpr double kDiagonalSeconds = 1.0;
constexpr double kMilnorSeconds = 30.0;
constexpr double kCubicSeconds = 120.0;
constexpr int kRandomIdeals = 200;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Polynomial parse(const std::string& text, std::vector<std::string> vars) {
  return PolynomialInput{text, std::move(vars)}.parse();
}

void determinantal(Outcome& o) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = lctDeterminantalPair(n, 4);
    const double t = seconds(start);
    Partition expected(n, 0);
    expected[0] = expected[1] = 1;
    o.require(r.value == Rational(2), "n=" + std::to_string(n) + " value " + r.value.toString());
    o.require(r.certified, "n=" + std::to_string(n) + " certified");
    o.require(r.optimalPartition == expected, "n=" + std::to_string(n) + " partition (1,1,0,...)");
    o.require(t < kDeterminantalSeconds, "n=" + std::to_string(n) + " time");
    o.detail << "n=" << n << ":" << r.value << " ";
  }
}

void diagonal(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned d = 2; d <= 6; ++d) {
      const Rational a(n + d - 2, 2 * d - 2);
      const Rational b(n, d);
      const Rational expected = a < b ? a : b;
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
      o.require(lctDiagonalPair(n, d) == expected, "closed form " + tag);
      const auto raw = rawMinDiagonal(n, d, d + 2);
      o.require(raw.value == expected && raw.conclusive, "raw search " + tag);
    }
  }
  const double t = seconds(start);
  o.require(t < kDiagonalSeconds, "time");
  o.detail << "25 pairs, " << t << " s";
}

void thmB(Outcome& o) {
  const auto grid = defaultGrid();
  const Report report = verifyThmB(grid);
  o.require(report.verdict() == Verdict::Pass, "report verdict");
  int strict = 0;
  int equality = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& fam = grid[i];
    const auto& check = report.checks.at(i);
    const bool expectStrict = fam.kind() == FamilyKind::Diagonal && 3 <= fam.d() && fam.d() < fam.n();
    o.require(check.verdict == Verdict::Pass, check.name + " verdict");
    o.require(check.note == (expectStrict ? "strict" : "equality"), check.name + " relation " + check.note);
    (check.note == "strict" ? strict : equality)++;
  }
  o.detail << strict << " strict, " << equality << " equality";
}

void rationalSingularities(Outcome& o) {
  int count = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned d = 2; d <= 6; ++d) {
      const auto c = classifyRationalSingularities(FamilyDescriptor::diagonal(n, d));
      const std::string tag = "diag(" + std::to_string(n) + "," + std::to_string(d) + ")";
      o.require(c.rationalSingularities == (d < n), tag + " rs");
      o.require(c.minExpAgrees.value_or(false), tag + " min_exp agreement");
      ++count;
    }
  }
  for (unsigned n = 2; n <= 4; ++n) {
    const auto c = classifyRationalSingularities(FamilyDescriptor::determinantal(n));
    o.require(c.rationalSingularities, "det(" + std::to_string(n) + ") rs");
    o.require(c.minExpAgrees.value_or(false), "det(" + std::to_string(n) + ") min_exp agreement");
    ++count;
  }
  o.detail << count << " families";
}

// Standard monomials of (x_1^{d-1}, ..., x_n^{d-1}) inside the box [0, d)^n.
std::uint64_t staircaseCount(unsigned n, unsigned d) {
  std::vector<Exponent> gens;
  for (unsigned i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = d - 1;
    gens.push_back(e);
  }
  const auto ideal = MonomialIdeal::fromGenerators(n, gens);
  std::uint64_t count = 0;
  Exponent e(n, 0);
  while (true) {
    if (!ideal.contains(e)) ++count;
    std::size_t i = 0;
    while (i < n && ++e[i] == d) e[i++] = 0;
    if (i == n) break;
  }
  return count;
}

void milnor(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned d = 2; d <= 5; ++d) {
      const auto mu = milnorNumber(FamilyDescriptor::diagonal(n, d).polynomial()).value;
      const auto oracle = staircaseCount(n, d);
      const auto pow = static_cast<std::uint64_t>(std::llround(std::pow(d - 1, n)));
      o.require(mu == oracle && mu == pow,
                "diag(" + std::to_string(n) + "," + std::to_string(d) + ") mu=" + std::to_string(mu));
    }
  }
  const auto cusp = milnorNumber(parse("x^3 - y^2", {"x", "y"})).value;
  o.require(cusp == 2, "mu(x^3 - y^2)=" + std::to_string(cusp));
  const double t = seconds(start);
  o.require(t < kMilnorSeconds, "time");
  o.detail << "12 diagonal + cusp, " << t << " s";
}

void randomMonomial(Outcome& o) {
  std::mt19937_64 rng(20240617);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  int agreed = 0;
  for (int k = 0; k < kRandomIdeals; ++k) {
    const auto ideal = testing::randomMonomialIdeal(rng, dim(rng), 6);
    const auto search = lctMonomial(ideal);
    const auto lp = lctByNewtonLp(ideal);
    o.require(search.certified, "ideal " + std::to_string(k) + " certified");
    o.require(search.value == lp, "ideal " + std::to_string(k) + " " + search.value.toString() + " vs " +
                                      lp.toString());
    if (search.value == lp) ++agreed;
  }
  o.detail << agreed << "/" << kRandomIdeals << " agree";
}

void quadraticDecay(Outcome& o) {
  const auto square = parse("x^2", {"x"});
  const auto linear = parse("x", {"x"});
  const auto full = SubschemeSpec::fullSpace(1);
  const TwistSample twists;
  double worstAbs = 0;
  double worstExp = 0;
  for (const std::uint64_t p : {3, 5, 7}) {
    const auto profile = decayProfile(square, full, {p}, 6, twists);
    for (const auto& row : profile.rows) {
      if (row.level % 2 != 0) continue;
      const double expected = std::pow(static_cast<double>(p), -static_cast<double>(row.level) / 2);
      const PrimePowerModulus mod(p, row.level);
      const auto hist = residueHistogram(square, mod, full);
      for (const auto t : twists.twists(mod)) {
        worstAbs = std::max(worstAbs, std::fabs(expSum(hist, t).absValue - expected));
      }
      worstExp = std::max(worstExp, std::fabs(row.exponent - 0.5));
      o.require(!row.skipped, "x^2 row skipped");
    }
    for (unsigned m = 1; m <= 6; ++m) {
      const PrimePowerModulus mod(p, m);
      const auto hist = residueHistogram(linear, mod, full);
      for (const auto t : twists.twists(mod)) {
        o.require(expSum(hist, t).exactZero,
                  "x not exactly zero at " + std::to_string(p) + "^" + std::to_string(m));
      }
    }
  }
  o.require(worstAbs <= kAbsTol, "|E| = p^{-m/2}");
  o.require(worstExp <= kExponentTol, "s = 1/2");
  o.detail << "max |E| error " << worstAbs << ", max s error " << worstExp;
}

void cubicDecay(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  RunConfig config;
  config.moiPolynomial = {"x1^3 + x2^3", {"x1", "x2"}};
  config.primes = {5, 7};
  config.maxLevel = 3;
  const Report report = verifyMoiBound(config.moiPolynomial, config);
  const double t = seconds(start);
  o.require(report.profiles.size() == 1, "one profile");
  if (report.profiles.empty()) return;
  const auto& profile = report.profiles.front().profile;
  o.require(!profile.incomplete, "complete profile");
  o.require(profile.sigmaHat.has_value(), "sigma_hat present");
  const double sigmaHat = profile.sigmaHat.value_or(-1);
  o.require(std::fabs(sigmaHat - 2.0 / 3.0) <= kSigmaTol, "sigma_hat in 2/3 +- tolerance");
  const double sigma = 2.0 / 3.0 - config.epsilon;
  for (const std::uint64_t p : config.primes) {
    const double c = decayBoundConstant(profile, p, sigma);
    o.require(std::isfinite(c) && c > 0, "constant for p=" + std::to_string(p));
    o.detail << "c_" << p << "=" << c << " ";
  }
  for (const auto& check : report.checks) o.require(check.verdict == Verdict::Pass, check.name);
  o.require(t < kCubicSeconds, "time");
  o.detail << "sigma_hat=" << sigmaHat << ", " << t << " s";
}

void localization(Outcome& o) {
  RunConfig config;
  config.localizationPolynomials = {{"x^2", {"x"}}, {"x1^2 + x2^2", {"x1", "x2"}}, {"x1^3 + x2^3", {"x1", "x2"}}};
  config.localizationPrimes = {5, 7};
  config.localizationLevels = {2, 3};
  int cases = 0;
  double worst = 0;
  for (const auto& input : config.localizationPolynomials) {
    const auto f = input.parse();
    for (const auto p : config.localizationPrimes) {
      for (const auto m : config.localizationLevels) {
        const auto r = localizationCheck(f, PrimePowerModulus(p, m), SubschemeSpec::fullSpace(f.variableCount()),
                                         config.twists);
        const std::string tag = input.text + "@" + std::to_string(p) + "^" + std::to_string(m);
        o.require(r.thresholdMet, tag + " threshold");
        o.require(r.allComplementsZero, tag + " complements zero");
        o.require(r.maxDiscrepancy <= kLocalizationTol, tag + " discrepancy");
        worst = std::max(worst, r.maxDiscrepancy);
        ++cases;
      }
    }
  }
  o.require(verifyLocalization(config).verdict() == Verdict::Pass, "harness verdict");
  o.detail << cases << " cases, max discrepancy " << worst;
}

void slope(Outcome& o) {
  const auto family = FamilyDescriptor::diagonal(2, 3);
  const std::uint64_t p = 7;
  const EnumerationOptions options;
  const double lct = lctDiagonalPair(2, 3).toDouble();
  const auto f = family.polynomial();
  const auto ideal = pairIdeal(f);
  std::optional<double> last;
  unsigned lastJ = 0;
  std::uint64_t size = 1;
  for (unsigned j = 1;; ++j) {
    size *= p * p;
    if (size > options.budget) break;
    const auto count = pointCount(ideal, PrimePowerModulus(p, j), SubschemeSpec::fullSpace(2), options);
    last = -std::log(static_cast<double>(count) / static_cast<double>(size)) / (j * std::log(7.0));
    lastJ = j;
  }
  o.require(last.has_value(), "some level within budget");
  o.require(last.value_or(-1) >= lct - kSlopeTol, "slope >= lct_pair - tolerance");
  RunConfig config;
  config.tolerance = kSlopeTol;
  o.require(verifyPointCountSlope(family, p, config).verdict() == Verdict::Pass, "harness verdict");
  o.detail << "j=" << lastJ << " slope " << last.value_or(-1) << " vs lct_pair " << lct;
}

void determinism(Outcome& o) {
  RunConfig config;
  const std::string a = renderReport(runFullSuite(config), ReportFormat::Json);
  const std::string b = renderReport(runFullSuite(config), ReportFormat::Json);
  config.enumeration.threads = 3;
  const std::string c = renderReport(runFullSuite(config), ReportFormat::Json);
  o.require(a == b, "identical runs");
  o.require(a == c, "1 vs 3 threads");
  o.detail << a.size() << " bytes";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"determinantal lct_pair = 2 for n = 2..4", determinantal},
      {"diagonal closed form and raw search", diagonal},
      {"min_exp >= lct_pair on the default grid", thmB},
      {"rational singularities iff lct_pair > 1", rationalSingularities},
      {"Milnor numbers", milnor},
      {"random monomial ideals: search = LP", randomMonomial},
      {"x^2 and x exponential sums", quadraticDecay},
      {"cubic decay rate and bound", cubicDecay},
      {"localization identities", localization},
      {"point-count slope for diag(2,3) at p = 7", slope},
      {"byte-identical full reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%-4s criterion %2zu  %s  [%s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
