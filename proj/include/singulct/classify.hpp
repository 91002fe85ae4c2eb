#pragma once

#include <optional>
#include <string>
#include <variant>

#include "singulct/families.hpp"
#include "singulct/milnor.hpp"
#include "singulct/polynomial.hpp"
#include "singulct/rational.hpp"

namespace singulct {

/// How a value was obtained.
enum class Provenance { ClosedForm, Search, Colength, Unknown };

std::string toString(Provenance p);

/// lct of (f) + J_f^2 together with the route that produced it.
struct PairLct {
  ExtendedRational value = ExtendedRational::infinity();
  Provenance provenance = Provenance::Unknown;
  /// "diagonal-closed-form", "determinantal-orbit-search", "monomial-newton-search".
  std::string pathway;
  /// False when a bounded search could not certify its result.
  bool certified = true;
  std::optional<FamilyDescriptor> family;
};

struct PairLctOptions {
  std::uint64_t determinantalBound = 4;
};

PairLct pairLct(const FamilyDescriptor& family, const PairLctOptions& options = {});
/// Polynomials whose pair ideal is monomial, or that are recognized family members.
/// Throws DomainError for other shapes.
PairLct pairLct(const Polynomial& f, const PairLctOptions& options = {});

/// One hypersurface's invariants at the origin.
struct InvariantBundle {
  PairLct lctPair;
  ExtendedRational lctF = ExtendedRational(Rational(1));
  Provenance lctFProvenance = Provenance::Unknown;
  /// Unknown when not available from a supported b-function formula.
  std::optional<ExtendedRational> minExp;
  Provenance minExpProvenance = Provenance::Unknown;
  std::optional<std::uint64_t> milnor;
  Provenance milnorProvenance = Provenance::Unknown;
  bool rationalSingularities = false;
};

struct BundleOptions {
  PairLctOptions pair;
  MilnorOptions milnor;
  bool computeMilnor = true;
};

InvariantBundle invariantBundle(const FamilyDescriptor& family, const BundleOptions& options = {});
InvariantBundle invariantBundle(const Polynomial& f, const BundleOptions& options = {});

struct RsCertificate {
  bool rationalSingularities = false;
  ExtendedRational lctPair = ExtendedRational::infinity();
  std::string pathway;
  bool certified = true;
  std::optional<ExtendedRational> minExp;
  /// (minExp > 1) == rationalSingularities, when minExp is known.
  std::optional<bool> minExpAgrees;
};

/// Rational singularities iff lct((f) + J_f^2) > 1.
RsCertificate classifyRationalSingularities(const std::variant<FamilyDescriptor, Polynomial>& input,
                                            const PairLctOptions& options = {});

}  // namespace singulct
