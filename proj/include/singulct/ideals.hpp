#pragma once

#include <optional>
#include <vector>

#include "singulct/monomial.hpp"
#include "singulct/polynomial.hpp"

namespace singulct {

/// An ideal given by a list of generators in a common polynomial ring.
/// Duplicates are removed on construction (first occurrence kept).
class IdealPresentation {
 public:
  explicit IdealPresentation(std::vector<Polynomial> generators);

  std::size_t variableCount() const { return generators_.front().variableCount(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool hasIntegerCoefficients() const;
  std::uint64_t maxTotalDegree() const;

 private:
  std::vector<Polynomial> generators_;
};

/// [f, df/dx_1, ..., df/dx_n]; f is part of the Jacobian ideal by convention.
IdealPresentation jacobianIdeal(const Polynomial& f);

/// Generators of (f) + J_f^2 as f together with all products of pairs of partials.
/// Products involving f are omitted: they already lie in (f).
IdealPresentation pairIdeal(const Polynomial& f);

/// If every term of every generator lies in the monomial ideal spanned by the
/// generators that are themselves monomials, the presented ideal is that monomial
/// ideal and it is returned; otherwise nullopt (the test is sufficient, not necessary).
std::optional<MonomialIdeal> asMonomialIdeal(const IdealPresentation& ideal);

}  // namespace singulct
