#include "enumerator.hpp"

#include <limits>

#include "singulct/error.hpp"

namespace singulct::detail {

namespace {

std::uint64_t evalPrefixTerms(const std::vector<LinePolynomial::Term>& terms,
                              const std::vector<std::vector<std::uint64_t>>& powers, std::uint64_t modulus) {
  std::uint64_t sum = 0;
  for (const auto& term : terms) {
    std::uint64_t v = term.coefficient;
    for (std::size_t i = 0; i < term.exponent.size() && v != 0; ++i) {
      if (term.exponent[i] > 0) v = mulMod(v, powers[i][term.exponent[i]], modulus);
    }
    sum = addMod(sum, v, modulus);
  }
  return sum;
}

std::size_t maxExponent(const std::vector<LinePolynomial>& polys, std::size_t i) {
  std::size_t best = 0;
  for (const auto& poly : polys) {
    for (const auto& line : poly.lines) {
      for (const auto& term : line) best = std::max<std::size_t>(best, term.exponent[i]);
    }
  }
  return best;
}

void fillPowers(const std::vector<std::uint64_t>& point, std::size_t maxExp, std::uint64_t modulus,
                std::vector<std::vector<std::uint64_t>>& powers) {
  powers.resize(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    auto& row = powers[i];
    row.resize(maxExp + 1);
    row[0] = 1 % modulus;
    for (std::size_t e = 1; e <= maxExp; ++e) row[e] = mulMod(row[e - 1], point[i] % modulus, modulus);
  }
}

}  // namespace

LinePolynomial::LinePolynomial(const Polynomial& f, std::uint64_t modulus) {
  const std::size_t n = f.variableCount();
  if (n == 0) throw DomainError("polynomial has no variables");
  const std::size_t last = n - 1;
  lines.resize(1);
  for (const auto& [e, c] : f.terms()) {
    const std::uint64_t coefficient = reduceCoefficient(c, modulus);
    if (coefficient == 0) continue;
    const std::size_t k = e[last];
    if (lines.size() <= k) lines.resize(k + 1);
    lines[k].push_back({coefficient, std::vector<std::uint32_t>(e.begin(), e.begin() + static_cast<long>(last))});
  }
  while (lines.size() > 1 && lines.back().empty()) lines.pop_back();
}

std::uint64_t latticeSize(std::uint64_t modulus, std::size_t n) {
  const auto size = checkedPow(modulus, static_cast<unsigned>(n));
  return size ? *size : std::numeric_limits<std::uint64_t>::max();
}

PointEnumerator::PointEnumerator(const std::vector<Polynomial>& polys, const PrimePowerModulus& modulus,
                                 const SubschemeSpec& z)
    : n_(z.variableCount()), p_(modulus.prime()), modulus_(modulus.value()), fullSpace_(z.isFullSpace()) {
  if (n_ == 0) throw DomainError("enumeration needs at least one variable");
  for (const auto& f : polys) {
    if (f.variableCount() != n_) throw DomainError("polynomial and subscheme have different variable counts");
    polys_.emplace_back(f, modulus_);
    offsets_.push_back(diffSize_);
    diffSize_ += polys_.back().lines.size();
  }
  for (const auto& g : z.generators()) zGenerators_.emplace_back(g, p_);
}

void PointEnumerator::checkBudget(const EnumerationOptions& options) const {
  const std::uint64_t required = latticeSize(modulus_, n_);
  if (required > options.budget) throw BudgetExceeded(required, options.budget);
}

void PointEnumerator::prepareLine(const std::vector<std::uint64_t>& prefix, std::vector<std::uint64_t>& diffs,
                                  std::vector<char>& mask) const {
  thread_local std::vector<std::vector<std::uint64_t>> powers;
  std::vector<std::uint64_t> coefficients;
  const std::size_t prefixLength = prefix.size();

  std::size_t maxExp = 0;
  for (std::size_t i = 0; i < prefixLength; ++i) maxExp = std::max(maxExp, maxExponent(polys_, i));
  fillPowers(prefix, maxExp, modulus_, powers);
  for (std::size_t k = 0; k < polys_.size(); ++k) {
    const auto& poly = polys_[k];
    const std::size_t deg = poly.degree();
    coefficients.assign(deg + 1, 0);
    for (std::size_t j = 0; j <= deg; ++j) coefficients[j] = evalPrefixTerms(poly.lines[j], powers, modulus_);
    // values at t = 0..deg, then the forward-difference table in place
    std::uint64_t* d = diffs.data() + offsets_[k];
    for (std::size_t t = 0; t <= deg; ++t) {
      std::uint64_t v = 0;
      for (std::size_t j = deg + 1; j > 0; --j) v = addMod(mulMod(v, t % modulus_, modulus_), coefficients[j - 1], modulus_);
      d[t] = v;
    }
    for (std::size_t level = 1; level <= deg; ++level) {
      for (std::size_t t = deg; t >= level; --t) d[t] = d[t] >= d[t - 1] ? d[t] - d[t - 1] : d[t] + modulus_ - d[t - 1];
    }
  }

  if (fullSpace_) return;
  std::size_t zMaxExp = 0;
  for (std::size_t i = 0; i < prefixLength; ++i) zMaxExp = std::max(zMaxExp, maxExponent(zGenerators_, i));
  fillPowers(prefix, zMaxExp, p_, powers);
  std::fill(mask.begin(), mask.end(), 1);
  for (const auto& g : zGenerators_) {
    const std::size_t deg = g.degree();
    coefficients.assign(deg + 1, 0);
    for (std::size_t j = 0; j <= deg; ++j) coefficients[j] = evalPrefixTerms(g.lines[j], powers, p_);
    for (std::uint64_t u = 0; u < p_; ++u) {
      if (!mask[u]) continue;
      std::uint64_t v = 0;
      for (std::size_t j = deg + 1; j > 0; --j) v = addMod(mulMod(v, u, p_), coefficients[j - 1], p_);
      if (v != 0) mask[u] = 0;
    }
  }
}

}  // namespace singulct::detail
