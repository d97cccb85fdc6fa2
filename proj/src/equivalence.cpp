#include "mereo/equivalence.hpp"

namespace mereo {

MvdStructure kappa(const LocalContactStructure& L) {
  const BinaryRelation wi = wellinside_from_contact(L.contact);
  BinaryRelation out(L.algebra, BinaryRelation::Flavor::WellInside);
  const std::uint32_t N = out.element_count();
  for (std::uint32_t a = 0; a < N; ++a) {
    if (!L.bounded[a]) continue;
    for (std::uint32_t b = 0; b < N; ++b)
      if (wi.contains(a, b)) out.set(a, b);
  }
  return MvdStructure(L.algebra, std::move(out));
}

namespace {

// The universal form: a <<_m b iff forall c << 1, (c /\ a) << (c* \/ b).
BinaryRelation derived_wellinside_of_tau(const MvdStructure& M) {
  const BinaryRelation& W = M.wellinside;
  const std::uint32_t N = W.element_count(), topb = N - 1;
  BinaryRelation out(M.algebra, BinaryRelation::Flavor::WellInside);
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b) {
      bool all = true;
      for (std::uint32_t c = 0; c < N && all; ++c)
        if (W.contains(c, topb) &&
            !W.contains(c & a, (~c & topb) | b))
          all = false;
      if (all) out.set(a, b);
    }
  return out;
}

}  // namespace

LocalContactStructure tau(const MvdStructure& M) {
  const BinaryRelation& W = M.wellinside;
  const std::uint32_t N = W.element_count(), topb = N - 1;
  std::vector<bool> bounded(N, false);
  for (std::uint32_t a = 0; a < N; ++a)
    if (W.contains(a, topb)) bounded[a] = true;
  BinaryRelation rho = contact_from_wellinside(derived_wellinside_of_tau(M));
  return LocalContactStructure(M.algebra, std::move(rho), std::move(bounded));
}

FormsAgreement rho_m_forms_agree(const MvdStructure& M) {
  const BinaryRelation& W = M.wellinside;
  const std::uint32_t N = W.element_count(), topb = N - 1;
  const BinaryRelation rho = contact_from_wellinside(derived_wellinside_of_tau(M));
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b) {
      bool exists = false;
      for (std::uint32_t c = 0; c < N && !exists; ++c)
        if (W.contains(c, topb) &&
            !W.contains(c & a, ~(c & b) & topb))
          exists = true;
      if (exists != rho.contains(a, b))
        return {false, make_witness({{"a", {M.algebra, a}},
                                     {"b", {M.algebra, b}}})};
    }
  return {true, {}};
}

EquivalenceReport roundtrip_report(const LocalContactStructure& L) {
  EquivalenceReport rep;
  rep.applicable = lca_valid(L);
  MvdStructure M = kappa(L);
  LocalContactStructure back = tau(M);
  rep.forward_ok = (back == L);
  if (!rep.forward_ok) {
    const std::uint32_t N = L.algebra->element_count();
    for (std::uint32_t a = 0; a < N && rep.witness.empty(); ++a) {
      if (L.bounded[a] != back.bounded[a])
        rep.witness = make_witness({{"a", {L.algebra, a}}});
      else
        for (std::uint32_t b = 0; b < N; ++b)
          if (L.contact.contains(a, b) != back.contact.contains(a, b)) {
            rep.witness = make_witness(
                {{"a", {L.algebra, a}}, {"b", {L.algebra, b}}});
            break;
          }
    }
  }
  rep.forms_agree = rho_m_forms_agree(M).agree;
  return rep;
}

EquivalenceReport roundtrip_report(const MvdStructure& M) {
  EquivalenceReport rep;
  rep.applicable = mvd_valid(M);
  FormsAgreement fa = rho_m_forms_agree(M);
  rep.forms_agree = fa.agree;
  if (!fa.agree) rep.witness = fa.witness;
  LocalContactStructure L = tau(M);
  MvdStructure back = kappa(L);
  rep.backward_ok = (back == M);
  if (!rep.backward_ok && rep.witness.empty()) {
    const std::uint32_t N = M.algebra->element_count();
    for (std::uint32_t a = 0; a < N && rep.witness.empty(); ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (M.wellinside.contains(a, b) != back.wellinside.contains(a, b)) {
          rep.witness =
              make_witness({{"a", {M.algebra, a}}, {"b", {M.algebra, b}}});
          break;
        }
  }
  return rep;
}

}  // namespace mereo
