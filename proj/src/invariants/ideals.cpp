#include "singulct/ideals.hpp"

#include <algorithm>

#include "singulct/error.hpp"

namespace singulct {

IdealPresentation::IdealPresentation(std::vector<Polynomial> generators) {
  if (generators.empty()) throw DomainError("ideal presentation needs at least one generator");
  const std::size_t n = generators.front().variableCount();
  for (auto& g : generators) {
    if (g.variableCount() != n) throw DomainError("ideal generators have different variable counts");
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end()) generators_.push_back(std::move(g));
  }
  if (std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.isZero(); })) {
    throw DomainError("ideal presentation with only zero generators");
  }
}

bool IdealPresentation::hasIntegerCoefficients() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.hasIntegerCoefficients(); });
}

std::uint64_t IdealPresentation::maxTotalDegree() const {
  std::uint64_t d = 0;
  for (const auto& g : generators_) d = std::max(d, g.totalDegree());
  return d;
}

IdealPresentation jacobianIdeal(const Polynomial& f) {
  if (f.isZero()) throw DomainError("Jacobian ideal of the zero polynomial");
  std::vector<Polynomial> gens{f};
  for (std::size_t i = 0; i < f.variableCount(); ++i) gens.push_back(partialDerivative(f, i));
  return IdealPresentation(std::move(gens));
}

IdealPresentation pairIdeal(const Polynomial& f) {
  if (f.isZero()) throw DomainError("pair ideal of the zero polynomial");
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.variableCount(); ++i) partials.push_back(partialDerivative(f, i));
  std::vector<Polynomial> gens{f};
  for (std::size_t i = 0; i < partials.size(); ++i) {
    for (std::size_t j = i; j < partials.size(); ++j) {
      Polynomial g = partials[i] * partials[j];
      if (!g.isZero()) gens.push_back(std::move(g));
    }
  }
  return IdealPresentation(std::move(gens));
}

std::optional<MonomialIdeal> asMonomialIdeal(const IdealPresentation& ideal) {
  const std::size_t n = ideal.variableCount();
  std::vector<Exponent> monomials;
  for (const auto& g : ideal.generators()) {
    if (g.isMonomial()) monomials.push_back(g.terms().begin()->first);
  }
  const MonomialIdeal candidate = MonomialIdeal::fromGenerators(n, monomials);
  for (const auto& g : ideal.generators()) {
    for (const auto& [e, c] : g.terms()) {
      if (!candidate.contains(e)) return std::nullopt;
    }
  }
  return candidate;
}

}  // namespace singulct
