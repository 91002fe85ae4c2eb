#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singulct/ideals.hpp"
#include "singulct/polynomial.hpp"

namespace singulct {

/// p^m with p prime, m >= 1 and p^m < 2^62.
class PrimePowerModulus {
 public:
  PrimePowerModulus(std::uint64_t prime, unsigned exponent);
  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return m_; }
  std::uint64_t value() const { return value_; }

 private:
  std::uint64_t p_;
  unsigned m_;
  std::uint64_t value_;
};

/// Closed subscheme Z of affine n-space; a point x is admitted when every generator
/// vanishes at x mod p. No generators means the whole space.
class SubschemeSpec {
 public:
  static SubschemeSpec fullSpace(std::size_t variableCount);
  static SubschemeSpec hypersurfaceOf(const Polynomial& f);
  static SubschemeSpec originOnly(std::size_t variableCount);
  /// "full", "hyp" or "origin".
  static SubschemeSpec preset(const std::string& name, const Polynomial& f);
  SubschemeSpec(std::string name, std::size_t variableCount, std::vector<Polynomial> generators);

  const std::string& name() const { return name_; }
  std::size_t variableCount() const { return n_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool isFullSpace() const { return generators_.empty(); }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Polynomial> generators_;
};

struct EnumerationOptions {
  /// Hard cap on the number of lattice points visited. 10^8 by default.
  std::uint64_t budget = 100000000ULL;
  /// Worker count; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Budget from the SINGULCT_BUDGET environment variable, or `fallback`.
std::uint64_t budgetFromEnvironment(std::uint64_t fallback = 100000000ULL);

/// counts[r] = #{x in (Z/p^m)^n admitted by Z : f(x) = r mod p^m}.
struct ResidueHistogram {
  PrimePowerModulus modulus;
  std::size_t variableCount = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

ResidueHistogram residueHistogram(const Polynomial& f, const PrimePowerModulus& modulus, const SubschemeSpec& z,
                                  const EnumerationOptions& options = {});

struct ExpSumValue {
  std::int64_t twist = 1;
  std::complex<double> value;
  double absValue = 0.0;
  /// Proven by reduction in Z[zeta_{p^m}], independent of floating point.
  bool exactZero = false;
};

/// p^{-mn} sum_r counts[r] exp(2 pi i twist r / p^m). Throws DomainError unless p does not divide twist.
ExpSumValue expSum(const ResidueHistogram& histogram, std::int64_t twist);
ExpSumValue expSum(const Polynomial& f, const PrimePowerModulus& modulus, const SubschemeSpec& z, std::int64_t twist,
                   const EnumerationOptions& options = {});

/// Is sum_k coefficients[k] zeta^k zero for a primitive p^m-th root of unity zeta?
/// `coefficients` has length p^m.
bool cyclotomicCombinationIsZero(std::span<const std::int64_t> coefficients, std::uint64_t prime, unsigned exponent);

/// #{x mod p^j admitted by Z : every generator = 0 mod p^j}.
std::uint64_t pointCount(const IdealPresentation& generators, const PrimePowerModulus& modulus, const SubschemeSpec& z,
                         const EnumerationOptions& options = {});

/// Twists used per level: all units when p^m <= 256, otherwise 1..min(p-1, 8);
/// or all units; or the first k units.
struct TwistSample {
  enum class Mode { Default, All, First } mode = Mode::Default;
  unsigned count = 8;

  static TwistSample parse(const std::string& text);
  std::vector<std::int64_t> twists(const PrimePowerModulus& modulus) const;
};

struct DecayRow {
  std::uint64_t prime = 0;
  unsigned level = 0;
  std::uint64_t twistCount = 0;
  double maxAbs = 0.0;
  /// -log_p(maxAbs) / m, or +infinity when every sampled sum is exactly zero.
  double exponent = 0.0;
  bool allExactZero = false;
  /// Level skipped: p^{mn} exceeds the budget.
  bool skipped = false;
};

struct DecayProfile {
  std::vector<DecayRow> rows;
  /// min over levels m >= 2 of the row exponents, per prime (+infinity allowed).
  std::map<std::uint64_t, double> sigmaPerPrime;
  /// min over primes; +infinity when every sampled sum was exactly zero; empty when
  /// no level m >= 2 could be evaluated.
  std::optional<double> sigmaHat;
  /// At least one level was skipped, or no level m >= 2 was available.
  bool incomplete = false;
};

DecayProfile decayProfile(const Polynomial& f, const SubschemeSpec& z, const std::vector<std::uint64_t>& primes,
                          unsigned maxLevel, const TwistSample& twists = {}, const EnumerationOptions& options = {});

/// max over levels 2..mMax of |E(p^m)| * p^{m sigma} for one prime; 0 if no level qualifies.
double decayBoundConstant(const DecayProfile& profile, std::uint64_t prime, double sigma);

struct LocalizationTwist {
  std::int64_t twist = 1;
  ExpSumValue full;
  ExpSumValue restrictedF;
  ExpSumValue restrictedPair;
  /// Complements (points dropped by each restriction) proven to sum to zero.
  bool complementFZero = false;
  bool complementPairZero = false;
};

struct LocalizationReport {
  std::uint64_t prime = 0;
  unsigned level = 0;
  std::uint64_t degreeThreshold = 0;
  /// p > degreeThreshold; the identities are only claimed for large p.
  bool thresholdMet = false;
  std::vector<LocalizationTwist> twists;
  double maxDiscrepancy = 0.0;
  bool allComplementsZero = false;
};

/// Compares E over Z with its restrictions to ord_p f(x) >= m-1 and to
/// ord_p g(x) >= m-1 for every generator g of (f) + J_f^2. Requires m >= 2.
/// `degreeThreshold` of 0 means the total degree of f.
LocalizationReport localizationCheck(const Polynomial& f, const PrimePowerModulus& modulus, const SubschemeSpec& z,
                                     const TwistSample& twists = {}, std::uint64_t degreeThreshold = 0,
                                     const EnumerationOptions& options = {});

}  // namespace singulct
