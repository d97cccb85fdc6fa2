#ifndef MEREO_EQUIVALENCE_HPP
#define MEREO_EQUIVALENCE_HPP

#include "mereo/structures.hpp"

namespace mereo {

/// a << b iff a is bounded and a is well inside b w.r.t. the contact.
/// Total on any raw (B, rho, BB) triple.
MvdStructure kappa(const LocalContactStructure& L);

/// Bounded set {a : a << 1}; contact recovered from the derived well-inside
/// a <<_m b iff for all c << 1, (c /\ a) << (c* \/ b). Total on any raw pair.
LocalContactStructure tau(const MvdStructure& M);

struct FormsAgreement {
  bool agree = true;
  Witness witness;  // first disagreeing (a, b)
};

/// Cross-checks the universal form of the recovered contact against its
/// existential form: a rho_m b iff there is c << 1 with (c /\ a) not-<<
/// (c /\ b)*.
FormsAgreement rho_m_forms_agree(const MvdStructure& M);

struct EquivalenceReport {
  bool applicable = true;  // structure valid, so the round trip is guaranteed
  bool forward_ok = true;  // tau(kappa(L)) == L   (LCA input)
  bool backward_ok = true; // kappa(tau(M)) == M   (MVD input)
  bool forms_agree = true;
  Witness witness;
};

EquivalenceReport roundtrip_report(const LocalContactStructure& L);
EquivalenceReport roundtrip_report(const MvdStructure& M);

}  // namespace mereo

#endif
