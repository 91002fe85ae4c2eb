#include "singulct/classify.hpp"

#include "singulct/error.hpp"
#include "singulct/ideals.hpp"
#include "singulct/lct.hpp"

namespace singulct {

std::string toString(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm:
      return "closed-form";
    case Provenance::Search:
      return "search";
    case Provenance::Colength:
      return "colength";
    case Provenance::Unknown:
      break;
  }
  return "unknown";
}

PairLct pairLct(const FamilyDescriptor& family, const PairLctOptions& options) {
  PairLct out;
  out.family = family;
  if (family.kind() == FamilyKind::Diagonal) {
    out.value = lctDiagonalPair(family.n(), family.d());
    out.provenance = Provenance::ClosedForm;
    out.pathway = "diagonal-closed-form";
    return out;
  }
  const auto search = lctDeterminantalPair(family.n(), options.determinantalBound);
  out.value = search.value;
  out.provenance = Provenance::Search;
  out.pathway = "determinantal-orbit-search";
  out.certified = search.certified;
  return out;
}

PairLct pairLct(const Polynomial& f, const PairLctOptions& options) {
  if (f.isZero()) throw DomainError("pair ideal of the zero polynomial");
  if (auto family = recognizeFamily(f)) return pairLct(*family, options);
  if (auto monomial = asMonomialIdeal(pairIdeal(f))) {
    const auto search = lctMonomial(*monomial);
    PairLct out;
    out.value = search.value;
    out.provenance = Provenance::Search;
    out.pathway = "monomial-newton-search";
    out.certified = search.certified;
    return out;
  }
  throw DomainError("unsupported input: the pair ideal is not monomial and the polynomial is not a "
                    "diagonal or determinantal family member");
}

InvariantBundle invariantBundle(const FamilyDescriptor& family, const BundleOptions& options) {
  InvariantBundle bundle;
  bundle.lctPair = pairLct(family, options.pair);
  bundle.minExp = minExpFamily(family);
  bundle.minExpProvenance = Provenance::ClosedForm;
  bundle.lctF = lctFromMinExp(*bundle.minExp);
  bundle.lctFProvenance = Provenance::ClosedForm;
  bundle.rationalSingularities = bundle.lctPair.value > ExtendedRational(Rational(1));
  if (options.computeMilnor && family.kind() == FamilyKind::Diagonal) {
    try {
      bundle.milnor = milnorNumber(family.polynomial(), options.milnor).value;
      bundle.milnorProvenance = Provenance::Colength;
    } catch (const Inconclusive&) {
      bundle.milnor.reset();
    }
  }
  return bundle;
}

InvariantBundle invariantBundle(const Polynomial& f, const BundleOptions& options) {
  InvariantBundle bundle;
  if (auto family = recognizeFamily(f)) {
    BundleOptions familyOptions = options;
    familyOptions.computeMilnor = false;
    bundle = invariantBundle(*family, familyOptions);
  } else {
    bundle.lctPair = pairLct(f, options.pair);
    bundle.rationalSingularities = bundle.lctPair.value > ExtendedRational(Rational(1));
    if (!f.constantTerm().isZero()) {
      bundle.lctF = ExtendedRational::infinity();
    } else {
      bundle.lctF = min(bundle.lctPair.value, ExtendedRational(Rational(1)));
    }
    bundle.lctFProvenance = bundle.lctPair.provenance;
  }
  if (options.computeMilnor) {
    try {
      bundle.milnor = milnorNumber(f, options.milnor).value;
      bundle.milnorProvenance = Provenance::Colength;
    } catch (const DomainError&) {
    } catch (const Inconclusive&) {
    }
  }
  return bundle;
}

RsCertificate classifyRationalSingularities(const std::variant<FamilyDescriptor, Polynomial>& input,
                                            const PairLctOptions& options) {
  RsCertificate cert;
  PairLct pair;
  if (const auto* family = std::get_if<FamilyDescriptor>(&input)) {
    pair = pairLct(*family, options);
  } else {
    pair = pairLct(std::get<Polynomial>(input), options);
  }
  cert.lctPair = pair.value;
  cert.pathway = pair.pathway;
  cert.certified = pair.certified;
  cert.rationalSingularities = pair.value > ExtendedRational(Rational(1));
  if (pair.family) {
    cert.minExp = minExpFamily(*pair.family);
    cert.minExpAgrees = (*cert.minExp > ExtendedRational(Rational(1))) == cert.rationalSingularities;
  }
  return cert;
}

}  // namespace singulct
