#include "singulct/expsum.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "enumerator.hpp"
#include "singulct/error.hpp"
#include "singulct/modular.hpp"

namespace singulct {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct NeumaierSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + compensation; }
};

std::uint64_t reduceTwist(std::int64_t twist, const PrimePowerModulus& modulus) {
  const auto m = static_cast<std::int64_t>(modulus.value());
  const auto a = static_cast<std::uint64_t>(((twist % m) + m) % m);
  if (a % modulus.prime() == 0) {
    throw DomainError("twist " + std::to_string(twist) + " is not a unit modulo " + std::to_string(modulus.prime()));
  }
  return a;
}

// b[a r mod M] = counts[r]: the coefficient vector of sum_r counts[r] zeta^{a r}.
template <class Count>
std::vector<std::int64_t> twistedCoefficients(const std::vector<Count>& counts, std::uint64_t a, std::uint64_t m) {
  std::vector<std::int64_t> b(m, 0);
  std::uint64_t k = 0;
  for (std::uint64_t r = 0; r < m; ++r) {
    b[k] += static_cast<std::int64_t>(counts[r]);
    k = addMod(k, a, m);
  }
  return b;
}

template <class Count>
ExpSumValue evaluate(const std::vector<Count>& counts, const PrimePowerModulus& modulus, std::size_t n,
                     std::int64_t twist) {
  const std::uint64_t m = modulus.value();
  const std::uint64_t a = reduceTwist(twist, modulus);
  NeumaierSum re;
  NeumaierSum im;
  std::uint64_t k = 0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    if (counts[r] != 0) {
      const double angle = step * static_cast<double>(k);
      const double c = static_cast<double>(counts[r]);
      re.add(c * std::cos(angle));
      im.add(c * std::sin(angle));
    }
    k = addMod(k, a, m);
  }
  const double scale = 1.0 / static_cast<double>(detail::latticeSize(m, n));
  ExpSumValue out;
  out.twist = twist;
  out.value = {re.value() * scale, im.value() * scale};
  out.absValue = std::abs(out.value);
  const auto b = twistedCoefficients(counts, a, m);
  out.exactZero = cyclotomicCombinationIsZero(b, modulus.prime(), modulus.exponent());
  return out;
}

void requireSameSpace(const Polynomial& f, const SubschemeSpec& z) {
  if (f.variableCount() != z.variableCount()) {
    throw DomainError("polynomial has " + std::to_string(f.variableCount()) + " variables, subscheme has " +
                      std::to_string(z.variableCount()));
  }
}

}  // namespace

PrimePowerModulus::PrimePowerModulus(std::uint64_t prime, unsigned exponent) : p_(prime), m_(exponent) {
  if (!isPrime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (exponent == 0) throw DomainError("modulus exponent must be positive");
  const auto v = checkedPow(prime, exponent);
  if (!v || *v >= (1ULL << 62)) {
    throw DomainError(std::to_string(prime) + "^" + std::to_string(exponent) + " does not fit the modulus range");
  }
  value_ = *v;
}

SubschemeSpec::SubschemeSpec(std::string name, std::size_t variableCount, std::vector<Polynomial> generators)
    : name_(std::move(name)), n_(variableCount), generators_(std::move(generators)) {
  if (n_ == 0) throw DomainError("subscheme of a zero-dimensional space");
  for (const auto& g : generators_) {
    if (g.variableCount() != n_) throw DomainError("subscheme generators must share the variable count");
    if (!g.hasIntegerCoefficients()) throw DomainError("subscheme generators must have integer coefficients");
  }
}

SubschemeSpec SubschemeSpec::fullSpace(std::size_t variableCount) { return {"full", variableCount, {}}; }

SubschemeSpec SubschemeSpec::hypersurfaceOf(const Polynomial& f) { return {"hyp", f.variableCount(), {f}}; }

SubschemeSpec SubschemeSpec::originOnly(std::size_t variableCount) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < variableCount; ++i) gens.push_back(Polynomial::variable(variableCount, i));
  return {"origin", variableCount, std::move(gens)};
}

SubschemeSpec SubschemeSpec::preset(const std::string& name, const Polynomial& f) {
  if (name == "full") return fullSpace(f.variableCount());
  if (name == "hyp") return hypersurfaceOf(f);
  if (name == "origin") return originOnly(f.variableCount());
  throw DomainError("unknown subscheme preset '" + name + "' (expected full, hyp or origin)");
}

std::uint64_t budgetFromEnvironment(std::uint64_t fallback) {
  const char* text = std::getenv("SINGULCT_BUDGET");
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  const double value = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(value >= 1.0) || value > 1.8e19 || value != std::floor(value)) {
    throw DomainError(std::string("SINGULCT_BUDGET must be a positive integer, got '") + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t ResidueHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto c : counts) sum += c;
  return sum;
}

ResidueHistogram residueHistogram(const Polynomial& f, const PrimePowerModulus& modulus, const SubschemeSpec& z,
                                  const EnumerationOptions& options) {
  requireSameSpace(f, z);
  if (!f.hasIntegerCoefficients()) throw DomainError("exponential sums need integer coefficients");
  const std::uint64_t m = modulus.value();
  detail::PointEnumerator enumerator({f}, modulus, z);
  enumerator.checkBudget(options);
  using Counts = std::vector<std::uint64_t>;
  const auto parts = enumerator.run<Counts>(
      options, [m] { return Counts(m, 0); }, [](Counts& counts, const std::uint64_t* values) { ++counts[values[0]]; });
  ResidueHistogram out{modulus, f.variableCount(), Counts(m, 0)};
  for (const auto& part : parts) {
    for (std::uint64_t r = 0; r < m; ++r) out.counts[r] += part[r];
  }
  return out;
}

bool cyclotomicCombinationIsZero(std::span<const std::int64_t> coefficients, std::uint64_t prime, unsigned exponent) {
  const auto total = checkedPow(prime, exponent);
  if (!total || coefficients.size() != *total) throw DomainError("coefficient vector must have length p^m");
  // Phi_{p^m}(x) = sum_t x^{t p^{m-1}} has degree p^m - p^{m-1}; a polynomial of degree < p^m is
  // divisible by it exactly when its coefficients are constant along each residue class mod p^{m-1}.
  const std::uint64_t stride = *total / prime;
  for (std::uint64_t j = 0; j < stride; ++j) {
    const std::int64_t first = coefficients[j];
    for (std::uint64_t t = 1; t < prime; ++t) {
      if (coefficients[j + t * stride] != first) return false;
    }
  }
  return true;
}

ExpSumValue expSum(const ResidueHistogram& histogram, std::int64_t twist) {
  return evaluate(histogram.counts, histogram.modulus, histogram.variableCount, twist);
}

ExpSumValue expSum(const Polynomial& f, const PrimePowerModulus& modulus, const SubschemeSpec& z, std::int64_t twist,
                   const EnumerationOptions& options) {
  reduceTwist(twist, modulus);
  return expSum(residueHistogram(f, modulus, z, options), twist);
}

std::uint64_t pointCount(const IdealPresentation& generators, const PrimePowerModulus& modulus,
                         const SubschemeSpec& z, const EnumerationOptions& options) {
  if (generators.variableCount() != z.variableCount()) {
    throw DomainError("ideal and subscheme have different variable counts");
  }
  if (!generators.hasIntegerCoefficients()) throw DomainError("point counts need integer coefficients");
  detail::PointEnumerator enumerator(generators.generators(), modulus, z);
  const std::size_t count = generators.generators().size();
  const auto parts = enumerator.run<std::uint64_t>(
      options, [] { return std::uint64_t{0}; },
      [count](std::uint64_t& n, const std::uint64_t* values) {
        for (std::size_t k = 0; k < count; ++k) {
          if (values[k] != 0) return;
        }
        ++n;
      });
  std::uint64_t total = 0;
  for (const auto part : parts) total += part;
  return total;
}

TwistSample TwistSample::parse(const std::string& text) {
  if (text == "default") return {};
  if (text == "all") return {Mode::All, 0};
  std::size_t used = 0;
  unsigned long k = 0;
  try {
    k = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || k == 0 || k > std::numeric_limits<unsigned>::max()) {
    throw DomainError("twist sample must be 'all', 'default' or a positive count, got '" + text + "'");
  }
  return {Mode::First, static_cast<unsigned>(k)};
}

std::vector<std::int64_t> TwistSample::twists(const PrimePowerModulus& modulus) const {
  const std::uint64_t m = modulus.value();
  const std::uint64_t p = modulus.prime();
  std::uint64_t limit = 0;
  switch (mode) {
    case Mode::All:
      limit = std::numeric_limits<std::uint64_t>::max();
      break;
    case Mode::First:
      limit = count;
      break;
    case Mode::Default:
      limit = m <= 256 ? std::numeric_limits<std::uint64_t>::max() : std::min<std::uint64_t>(p - 1, 8);
      break;
  }
  std::vector<std::int64_t> out;
  for (std::uint64_t a = 1; a < m && out.size() < limit; ++a) {
    if (a % p != 0) out.push_back(static_cast<std::int64_t>(a));
  }
  return out;
}

DecayProfile decayProfile(const Polynomial& f, const SubschemeSpec& z, const std::vector<std::uint64_t>& primes,
                          unsigned maxLevel, const TwistSample& twists, const EnumerationOptions& options) {
  if (primes.empty()) throw DomainError("decay profile needs at least one prime");
  if (maxLevel == 0) throw DomainError("maximal level must be positive");
  requireSameSpace(f, z);
  DecayProfile profile;
  for (const auto p : primes) {
    std::optional<double> sigma;
    for (unsigned level = 1; level <= maxLevel; ++level) {
      const PrimePowerModulus modulus(p, level);
      DecayRow row;
      row.prime = p;
      row.level = level;
      ResidueHistogram histogram{modulus, f.variableCount(), {}};
      try {
        histogram = residueHistogram(f, modulus, z, options);
      } catch (const BudgetExceeded&) {
        row.skipped = true;
        profile.incomplete = true;
        profile.rows.push_back(row);
        continue;
      }
      row.allExactZero = true;
      for (const auto a : twists.twists(modulus)) {
        const auto e = expSum(histogram, a);
        ++row.twistCount;
        row.maxAbs = std::max(row.maxAbs, e.absValue);
        row.allExactZero = row.allExactZero && e.exactZero;
      }
      if (row.allExactZero) {
        row.exponent = kInfinity;
      } else {
        row.exponent = std::max(0.0, -std::log(row.maxAbs) / (static_cast<double>(level) * std::log(double(p))));
      }
      if (level >= 2) sigma = sigma ? std::min(*sigma, row.exponent) : row.exponent;
      profile.rows.push_back(row);
    }
    if (sigma) {
      profile.sigmaPerPrime[p] = *sigma;
      profile.sigmaHat = profile.sigmaHat ? std::min(*profile.sigmaHat, *sigma) : *sigma;
    } else {
      profile.incomplete = true;
    }
  }
  return profile;
}

double decayBoundConstant(const DecayProfile& profile, std::uint64_t prime, double sigma) {
  double best = 0.0;
  for (const auto& row : profile.rows) {
    if (row.prime != prime || row.level < 2 || row.skipped || row.allExactZero) continue;
    best = std::max(best, row.maxAbs * std::pow(static_cast<double>(prime), sigma * row.level));
  }
  return best;
}

LocalizationReport localizationCheck(const Polynomial& f, const PrimePowerModulus& modulus, const SubschemeSpec& z,
                                     const TwistSample& twists, std::uint64_t degreeThreshold,
                                     const EnumerationOptions& options) {
  if (modulus.exponent() < 2) throw DomainError("localization identities need level m >= 2");
  requireSameSpace(f, z);
  if (!f.hasIntegerCoefficients()) throw DomainError("exponential sums need integer coefficients");

  LocalizationReport report;
  report.prime = modulus.prime();
  report.level = modulus.exponent();
  report.degreeThreshold = degreeThreshold == 0 ? f.totalDegree() : degreeThreshold;
  report.thresholdMet = report.prime > report.degreeThreshold;

  const IdealPresentation pair = pairIdeal(f);
  std::vector<Polynomial> polys{f};
  polys.insert(polys.end(), pair.generators().begin(), pair.generators().end());
  const std::size_t count = polys.size();
  const std::uint64_t m = modulus.value();
  const std::uint64_t q = m / modulus.prime();

  struct Counts {
    std::vector<std::uint64_t> full, onF, onPair;
  };
  detail::PointEnumerator enumerator(polys, modulus, z);
  enumerator.checkBudget(options);
  const auto parts = enumerator.run<Counts>(
      options, [m] { return Counts{std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m)}; },
      [q, count](Counts& c, const std::uint64_t* values) {
        const std::uint64_t r = values[0];
        ++c.full[r];
        if (r % q == 0) ++c.onF[r];
        for (std::size_t k = 1; k < count; ++k) {
          if (values[k] % q != 0) return;
        }
        ++c.onPair[r];
      });
  Counts total{std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m)};
  for (const auto& part : parts) {
    for (std::uint64_t r = 0; r < m; ++r) {
      total.full[r] += part.full[r];
      total.onF[r] += part.onF[r];
      total.onPair[r] += part.onPair[r];
    }
  }
  std::vector<std::int64_t> dropF(m), dropPair(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    dropF[r] = static_cast<std::int64_t>(total.full[r] - total.onF[r]);
    dropPair[r] = static_cast<std::int64_t>(total.full[r] - total.onPair[r]);
  }

  const std::size_t n = f.variableCount();
  report.allComplementsZero = true;
  for (const auto a : twists.twists(modulus)) {
    LocalizationTwist row;
    row.twist = a;
    row.full = evaluate(total.full, modulus, n, a);
    row.restrictedF = evaluate(total.onF, modulus, n, a);
    row.restrictedPair = evaluate(total.onPair, modulus, n, a);
    const std::uint64_t unit = reduceTwist(a, modulus);
    row.complementFZero =
        cyclotomicCombinationIsZero(twistedCoefficients(dropF, unit, m), modulus.prime(), modulus.exponent());
    row.complementPairZero =
        cyclotomicCombinationIsZero(twistedCoefficients(dropPair, unit, m), modulus.prime(), modulus.exponent());
    report.allComplementsZero = report.allComplementsZero && row.complementFZero && row.complementPairZero;
    report.maxDiscrepancy = std::max({report.maxDiscrepancy, std::abs(row.full.value - row.restrictedF.value),
                                      std::abs(row.full.value - row.restrictedPair.value),
                                      std::abs(row.restrictedF.value - row.restrictedPair.value)});
    report.twists.push_back(row);
  }
  return report;
}

}  // namespace singulct
