#include "singulct/monomial.hpp"

#include <algorithm>
#include <limits>

#include "singulct/error.hpp"

namespace singulct {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MonomialIdeal MonomialIdeal::zero(std::size_t variableCount) {
  if (variableCount == 0) throw DomainError("monomial ideal needs at least one variable");
  return MonomialIdeal(variableCount, {});
}

MonomialIdeal MonomialIdeal::fromGenerators(std::size_t variableCount, std::vector<Exponent> generators) {
  if (variableCount == 0) throw DomainError("monomial ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.size() != variableCount) throw DomainError("generator length does not match variable count");
  }
  std::sort(generators.begin(), generators.end(), GrlexLess{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // After grlex sorting a divisor always precedes its multiples.
  std::vector<Exponent> minimal;
  for (auto& g : generators) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Exponent& m) { return divides(m, g); });
    if (!redundant) minimal.push_back(std::move(g));
  }
  return MonomialIdeal(variableCount, std::move(minimal));
}

bool MonomialIdeal::isUnit() const { return generators_.size() == 1 && totalDegree(generators_.front()) == 0; }

bool MonomialIdeal::contains(const Exponent& monomial) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Exponent& g) { return divides(g, monomial); });
}

std::uint64_t MonomialIdeal::maxGeneratorDegree() const {
  std::uint64_t d = 0;
  for (const auto& g : generators_) d = std::max(d, totalDegree(g));
  return d;
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& o) const {
  if (o.n_ != n_) throw DomainError("variable count mismatch");
  std::vector<Exponent> products;
  products.reserve(generators_.size() * o.generators_.size());
  for (const auto& a : generators_) {
    for (const auto& b : o.generators_) {
      Exponent e(n_);
      for (std::size_t i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      products.push_back(std::move(e));
    }
  }
  return fromGenerators(n_, std::move(products));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  if (o.n_ != n_) throw DomainError("variable count mismatch");
  std::vector<Exponent> all = generators_;
  all.insert(all.end(), o.generators_.begin(), o.generators_.end());
  return fromGenerators(n_, std::move(all));
}

MonomialIdeal MonomialIdeal::power(unsigned k) const {
  MonomialIdeal result = fromGenerators(n_, {Exponent(n_, 0)});
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string MonomialIdeal::toString(const std::vector<std::string>& variableNames) const {
  if (isZero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k > 0) out += ", ";
    out += Polynomial::monomial(generators_[k]).toString(variableNames);
  }
  return out + ")";
}

WeightVector::WeightVector(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty() || std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 0; })) {
    throw DomainError("weight vector must have a positive entry");
  }
}

std::uint64_t WeightVector::logDiscrepancy() const {
  std::uint64_t s = 0;
  for (const auto w : weights_) s += w;
  return s;
}

std::uint64_t WeightVector::weightedDegree(const Exponent& e) const {
  if (e.size() != weights_.size()) throw DomainError("weight/exponent dimension mismatch");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += weights_[i] * e[i];
  return s;
}

Order ordW(const WeightVector& w, const MonomialIdeal& ideal) {
  if (ideal.variableCount() != w.size()) throw DomainError("weight/ideal dimension mismatch");
  if (ideal.isZero()) return Order::infinity();
  Order best{false, std::numeric_limits<std::uint64_t>::max()};
  for (const auto& g : ideal.generators()) best.value = std::min(best.value, w.weightedDegree(g));
  return best;
}

Order ordW(const WeightVector& w, const Polynomial& f) {
  if (f.variableCount() != w.size()) throw DomainError("weight/polynomial dimension mismatch");
  if (f.isZero()) return Order::infinity();
  Order best{false, std::numeric_limits<std::uint64_t>::max()};
  for (const auto& [e, c] : f.terms()) best.value = std::min(best.value, w.weightedDegree(e));
  return best;
}

}  // namespace singulct
