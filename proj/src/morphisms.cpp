#include "mereo/morphisms.hpp"

#include <algorithm>

namespace mereo {

MeetFunctionTable::MeetFunctionTable(AlgebraPtr dom, AlgebraPtr cod,
                                     std::vector<std::uint32_t> t)
    : domain(std::move(dom)), codomain(std::move(cod)), table(std::move(t)) {
  if (table.size() != domain->element_count())
    fail(ErrorCode::AlgebraMismatch, "table must cover every domain element");
  for (std::uint32_t v : table)
    if (v > codomain->top_bits())
      fail(ErrorCode::AlgebraMismatch, "table value outside codomain");
}

MeetFunctionTable identity_table(const AlgebraPtr& alg) {
  std::vector<std::uint32_t> t(alg->element_count());
  for (std::uint32_t a = 0; a < t.size(); ++a) t[a] = a;
  return MeetFunctionTable(alg, alg, std::move(t));
}

MeetFunctionTable table_of_hom(const CompleteHomomorphism& phi) {
  std::vector<std::uint32_t> t(phi.domain()->element_count());
  for (std::uint32_t a = 0; a < t.size(); ++a) t[a] = phi.apply_bits(a);
  return MeetFunctionTable(phi.domain(), phi.codomain(), std::move(t));
}

namespace {

void require_hom_fits(const CompleteHomomorphism& phi, const AlgebraPtr& src,
                      const AlgebraPtr& dst) {
  if (!phi.domain()->same_as(*src) || !phi.codomain()->same_as(*dst))
    fail(ErrorCode::AlgebraMismatch,
         "homomorphism endpoints do not match the structures");
}

void require_table_fits(const MeetFunctionTable& psi, const AlgebraPtr& src,
                        const AlgebraPtr& dst) {
  if (!psi.domain->same_as(*src) || !psi.codomain->same_as(*dst))
    fail(ErrorCode::AlgebraMismatch,
         "function table endpoints do not match the structures");
}

}  // namespace

const std::vector<std::string>& lside_axiom_ids() {
  static const std::vector<std::string> ids = {
      "L1", "L1p", "L2", "L3", "LO", "LOalt", "LS", "LSp", "IS"};
  return ids;
}

const std::vector<std::string>& sside_axiom_ids() {
  static const std::vector<std::string> ids = {
      "S1", "S2", "ES1", "S3", "SO", "CS", "LSpp", "ISp"};
  return ids;
}

AxiomVerdict check_morphism_axiom(const CompleteHomomorphism& phi,
                                  const LocalContactStructure& src,
                                  const LocalContactStructure& dst,
                                  const std::string& id) {
  require_hom_fits(phi, src.algebra, dst.algebra);
  const AlgebraPtr& A = src.algebra;
  const AlgebraPtr& B = dst.algebra;
  const std::uint32_t NA = A->element_count(), NB = B->element_count();
  const std::uint32_t topA = NA - 1, topB = NB - 1;
  const BinaryRelation& rho = src.contact;
  const BinaryRelation& eta = dst.contact;
  const BinaryRelation wiS = wellinside_from_contact(rho);
  const BinaryRelation wiD = wellinside_from_contact(eta);
  AxiomVerdict v{id, true, {}};

  if (id == "L1") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NA; ++b)
        if (eta.contains(phi.apply_bits(a), phi.apply_bits(b)) &&
            !rho.contains(a, b)) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {A, b}}});
          return v;
        }
  } else if (id == "L1p") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NA; ++b)
        if (wiS.contains(a, b) &&
            !wiD.contains(phi.apply_bits(a), phi.apply_bits(b))) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {A, b}}});
          return v;
        }
  } else if (id == "L2") {
    for (std::uint32_t b = 0; b < NB; ++b)
      if (dst.bounded[b] && !src.bounded[phi.adjoint_bits(b)]) {
        v.holds = false;
        v.witness = make_witness({{"b", {B, b}}});
        return v;
      }
  } else if (id == "L3") {
    for (std::uint32_t a = 0; a < NA; ++a)
      if (src.bounded[a] && !dst.bounded[phi.apply_bits(a)]) {
        v.holds = false;
        v.witness = make_witness({{"a", {A, a}}});
        return v;
      }
  } else if (id == "LO") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NB; ++b)
        if (dst.bounded[b] && rho.contains(phi.adjoint_bits(b), a) &&
            !eta.contains(b, phi.apply_bits(a))) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {B, b}}});
          return v;
        }
  } else if (id == "LOalt") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NB; ++b)
        if (dst.bounded[b] && wiD.contains(b, phi.apply_bits(a)) &&
            !wiS.contains(phi.adjoint_bits(b), a)) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {B, b}}});
          return v;
        }
  } else if (id == "LS") {
    for (std::uint32_t a = 0; a < NB; ++a)
      for (std::uint32_t b = 0; b < NB; ++b)
        if (dst.bounded[a] && dst.bounded[b] &&
            rho.contains(phi.adjoint_bits(a), phi.adjoint_bits(b)) &&
            !eta.contains(a, b)) {
          v.holds = false;
          v.witness = make_witness({{"a", {B, a}}, {"b", {B, b}}});
          return v;
        }
  } else if (id == "LSp") {
    for (std::uint32_t a = 0; a < NB; ++a)
      for (std::uint32_t b = 0; b < NB; ++b)
        if (dst.bounded[a] && dst.bounded[b] && wiD.contains(a, b) &&
            !wiS.contains(phi.adjoint_bits(a),
                          ~phi.adjoint_bits(~b & topB) & topA)) {
          v.holds = false;
          v.witness = make_witness({{"a", {B, a}}, {"b", {B, b}}});
          return v;
        }
  } else if (id == "IS") {
    // Finite ultrafilters are principal at atoms.
    for (int p = 0; p < A->atom_count(); ++p) {
      bool u_bounded = false;
      for (std::uint32_t a = 0; a < NA && !u_bounded; ++a)
        if ((a & (1u << p)) && src.bounded[a]) u_bounded = true;
      if (!u_bounded) continue;
      bool found = false;
      for (int q = 0; q < B->atom_count() && !found; ++q) {
        bool v_bounded = false;
        for (std::uint32_t b = 0; b < NB && !v_bounded; ++b)
          if ((b & (1u << q)) && dst.bounded[b]) v_bounded = true;
        if (!v_bounded) continue;
        bool all = true;
        for (std::uint32_t b = 0; b < NB && all; ++b) {
          if (!(b & (1u << q))) continue;
          for (std::uint32_t a = 0; a < NA; ++a)
            if ((a & (1u << p)) && !rho.contains(phi.adjoint_bits(b), a)) {
              all = false;
              break;
            }
        }
        if (all) found = true;
      }
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"u", atom_element(A, p)}});
        return v;
      }
    }
  } else {
    fail(ErrorCode::KindMismatch,
         "'" + id + "' is not a local-contact-side morphism axiom");
  }
  return v;
}

AxiomVerdict check_morphism_axiom(const CompleteHomomorphism& phi,
                                  const MvdStructure& src,
                                  const MvdStructure& dst,
                                  const std::string& id) {
  require_hom_fits(phi, src.algebra, dst.algebra);
  const AlgebraPtr& A = src.algebra;
  const AlgebraPtr& B = dst.algebra;
  const std::uint32_t NA = A->element_count(), NB = B->element_count();
  const std::uint32_t topA = NA - 1, topB = NB - 1;
  const BinaryRelation& W = src.wellinside;
  const BinaryRelation& Wp = dst.wellinside;
  AxiomVerdict v{id, true, {}};

  if (id == "S1") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NA; ++b) {
        bool hyp = true;
        for (std::uint32_t c = 0; c < NA && hyp; ++c)
          if (W.contains(c, topA) && !W.contains(c & a, (~c & topA) | b))
            hyp = false;
        if (!hyp) continue;
        const std::uint32_t fa = phi.apply_bits(a), fb = phi.apply_bits(b);
        for (std::uint32_t d = 0; d < NB; ++d)
          if (Wp.contains(d, topB) &&
              !Wp.contains(d & fa, (~d & topB) | fb)) {
            v.holds = false;
            v.witness = make_witness(
                {{"a", {A, a}}, {"b", {A, b}}, {"d", {B, d}}});
            return v;
          }
      }
  } else if (id == "S2") {
    for (std::uint32_t b = 0; b < NB; ++b)
      if (Wp.contains(b, topB) && !W.contains(phi.adjoint_bits(b), topA)) {
        v.holds = false;
        v.witness = make_witness({{"b", {B, b}}});
        return v;
      }
  } else if (id == "ES1") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NA; ++b)
        if (W.contains(a, b) &&
            !Wp.contains(phi.apply_bits(a), phi.apply_bits(b))) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {A, b}}});
          return v;
        }
  } else if (id == "S3") {
    for (std::uint32_t a = 0; a < NA; ++a)
      if (W.contains(a, topA) && !Wp.contains(phi.apply_bits(a), topB)) {
        v.holds = false;
        v.witness = make_witness({{"a", {A, a}}});
        return v;
      }
  } else if (id == "SO") {
    for (std::uint32_t a = 0; a < NA; ++a)
      for (std::uint32_t b = 0; b < NB; ++b)
        if (Wp.contains(b, phi.apply_bits(a)) &&
            !W.contains(phi.adjoint_bits(b), a)) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {B, b}}});
          return v;
        }
  } else if (id == "CS" || id == "LSpp") {
    // Same conclusion; LSpp restricts the hypothesis to a, b << 1.
    const bool restrict_bounded = (id == "LSpp");
    for (std::uint32_t a = 0; a < NB; ++a)
      for (std::uint32_t b = 0; b < NB; ++b) {
        if (restrict_bounded &&
            !(Wp.contains(a, topB) && Wp.contains(b, topB)))
          continue;
        if (Wp.contains(a, b) &&
            !W.contains(phi.adjoint_bits(a),
                        ~phi.adjoint_bits(~b & topB) & topA)) {
          v.holds = false;
          v.witness = make_witness({{"a", {B, a}}, {"b", {B, b}}});
          return v;
        }
      }
  } else if (id == "ISp") {
    for (int p = 0; p < A->atom_count(); ++p) {
      bool u_ok = false;
      for (std::uint32_t c = 0; c < NA && !u_ok; ++c)
        if ((c & (1u << p)) && W.contains(c, topA)) u_ok = true;
      if (!u_ok) continue;
      bool found = false;
      for (int q = 0; q < B->atom_count() && !found; ++q) {
        bool v_ok = false;
        for (std::uint32_t c = 0; c < NB && !v_ok; ++c)
          if ((c & (1u << q)) && Wp.contains(c, topB)) v_ok = true;
        if (!v_ok) continue;
        bool all = true;
        for (std::uint32_t a = 0; a < NA && all; ++a) {
          if (!(a & (1u << p))) continue;
          for (std::uint32_t b = 0; b < NB && all; ++b) {
            if (!(b & (1u << q))) continue;
            bool exists = false;
            const std::uint32_t lb = phi.adjoint_bits(b);
            for (std::uint32_t c = 0; c < NA && !exists; ++c)
              if (W.contains(c, topA) &&
                  !W.contains(lb & c, ~(a & c) & topA))
                exists = true;
            if (!exists) all = false;
          }
        }
        if (all) found = true;
      }
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"u", atom_element(A, p)}});
        return v;
      }
    }
  } else {
    fail(ErrorCode::KindMismatch,
         "'" + id + "' is not an MVD-side morphism axiom");
  }
  return v;
}

namespace {

bool wanted(const std::vector<std::string>& which, const std::string& id) {
  return which.empty() ||
         std::find(which.begin(), which.end(), id) != which.end();
}

}  // namespace

AxiomReport check_function_axioms(const MeetFunctionTable& psi,
                                  const LocalContactStructure& src,
                                  const LocalContactStructure& dst,
                                  const std::vector<std::string>& which) {
  require_table_fits(psi, src.algebra, dst.algebra);
  const AlgebraPtr& A = src.algebra;
  const AlgebraPtr& B = dst.algebra;
  const std::uint32_t NA = A->element_count(), NB = B->element_count();
  const std::uint32_t topA = NA - 1;
  const BinaryRelation wiS = wellinside_from_contact(src.contact);
  const BinaryRelation wiD = wellinside_from_contact(dst.contact);
  AxiomReport rep;

  if (wanted(which, "DLC1")) {
    AxiomVerdict v{"DLC1", psi(0) == 0, {}};
    if (!v.holds) v.witness = make_witness({{"a", {A, 0}}});
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "DLC2")) {
    AxiomVerdict v{"DLC2", true, {}};
    for (std::uint32_t a = 0; a < NA && v.holds; ++a)
      for (std::uint32_t b = 0; b < NA; ++b)
        if (psi(a & b) != (psi(a) & psi(b))) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {A, b}}});
          break;
        }
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "DLC3")) {
    AxiomVerdict v{"DLC3", true, {}};
    for (std::uint32_t a = 0; a < NA && v.holds; ++a) {
      if (!src.bounded[a]) continue;
      for (std::uint32_t b = 0; b < NA; ++b)
        if (wiS.contains(a, b) &&
            !wiD.contains(~psi(~a & topA) & (NB - 1), psi(b))) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {A, b}}});
          break;
        }
    }
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "DLC4")) {
    AxiomVerdict v{"DLC4", true, {}};
    for (std::uint32_t b = 0; b < NB; ++b) {
      if (!dst.bounded[b]) continue;
      bool found = false;
      for (std::uint32_t a = 0; a < NA && !found; ++a)
        if (src.bounded[a] && (b & ~psi(a)) == 0) found = true;
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"b", {B, b}}});
        break;
      }
    }
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "DLC5")) {
    AxiomVerdict v{"DLC5", true, {}};
    for (std::uint32_t a = 0; a < NA; ++a) {
      std::uint32_t join = 0;
      for (std::uint32_t b = 0; b < NA; ++b)
        if (src.bounded[b] && wiS.contains(b, a)) join |= psi(b);
      if (join != psi(a)) {
        v.holds = false;
        v.witness = make_witness({{"a", {A, a}}});
        break;
      }
    }
    rep.entries.push_back(std::move(v));
  }
  return rep;
}

AxiomReport check_function_axioms(const MeetFunctionTable& psi,
                                  const MvdStructure& src,
                                  const MvdStructure& dst,
                                  const std::vector<std::string>& which) {
  require_table_fits(psi, src.algebra, dst.algebra);
  const AlgebraPtr& A = src.algebra;
  const AlgebraPtr& B = dst.algebra;
  const std::uint32_t NA = A->element_count(), NB = B->element_count();
  const std::uint32_t topA = NA - 1, topB = NB - 1;
  const BinaryRelation& W = src.wellinside;
  const BinaryRelation& Wp = dst.wellinside;
  AxiomReport rep;

  if (wanted(which, "MVDLC1")) {
    AxiomVerdict v{"MVDLC1", psi(0) == 0, {}};
    if (!v.holds) v.witness = make_witness({{"a", {A, 0}}});
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "MVDLC2")) {
    AxiomVerdict v{"MVDLC2", true, {}};
    for (std::uint32_t a = 0; a < NA && v.holds; ++a)
      for (std::uint32_t b = 0; b < NA; ++b)
        if (psi(a & b) != (psi(a) & psi(b))) {
          v.holds = false;
          v.witness = make_witness({{"a", {A, a}}, {"b", {A, b}}});
          break;
        }
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "MVDLC3")) {
    AxiomVerdict v{"MVDLC3", true, {}};
    for (std::uint32_t a = 0; a < NA && v.holds; ++a)
      for (std::uint32_t b = 0; b < NA && v.holds; ++b) {
        if (!W.contains(a, b)) continue;
        const std::uint32_t lhs = ~psi(~a & topA) & topB;
        for (std::uint32_t c = 0; c < NB; ++c)
          if (Wp.contains(c, topB) &&
              !Wp.contains(lhs & c, psi(b) | (~c & topB))) {
            v.holds = false;
            v.witness = make_witness(
                {{"a", {A, a}}, {"b", {A, b}}, {"c", {B, c}}});
            break;
          }
      }
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "MVDLC4")) {
    AxiomVerdict v{"MVDLC4", true, {}};
    for (std::uint32_t b = 0; b < NB; ++b) {
      if (!Wp.contains(b, topB)) continue;
      bool found = false;
      for (std::uint32_t a = 0; a < NA && !found; ++a)
        if (W.contains(a, topA) && (b & ~psi(a)) == 0) found = true;
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"b", {B, b}}});
        break;
      }
    }
    rep.entries.push_back(std::move(v));
  }
  if (wanted(which, "MVDLC5")) {
    AxiomVerdict v{"MVDLC5", true, {}};
    for (std::uint32_t a = 0; a < NA; ++a) {
      std::uint32_t join = 0;
      for (std::uint32_t b = 0; b < NA; ++b)
        if (W.contains(b, a)) join |= psi(b);
      if (join != psi(a)) {
        v.holds = false;
        v.witness = make_witness({{"a", {A, a}}});
        break;
      }
    }
    rep.entries.push_back(std::move(v));
  }
  return rep;
}

MeetFunctionTable compose_dhlc(const MeetFunctionTable& psi2,
                               const MeetFunctionTable& psi1,
                               const LocalContactStructure& first_domain) {
  if (!psi1.codomain->same_as(*psi2.domain))
    fail(ErrorCode::AlgebraMismatch, "tables are not chainable");
  if (!psi1.domain->same_as(*first_domain.algebra))
    fail(ErrorCode::AlgebraMismatch,
         "first domain structure does not match psi1's domain");
  const BinaryRelation wi = wellinside_from_contact(first_domain.contact);
  const std::uint32_t NA = psi1.domain->element_count();
  std::vector<std::uint32_t> out(NA, 0);
  for (std::uint32_t a = 0; a < NA; ++a)
    for (std::uint32_t b = 0; b < NA; ++b)
      if (first_domain.bounded[b] && wi.contains(b, a))
        out[a] |= psi2(psi1(b));
  return MeetFunctionTable(psi1.domain, psi2.codomain, std::move(out));
}

MeetFunctionTable compose_mvdhlc(const MeetFunctionTable& psi2,
                                 const MeetFunctionTable& psi1,
                                 const MvdStructure& first_domain) {
  if (!psi1.codomain->same_as(*psi2.domain))
    fail(ErrorCode::AlgebraMismatch, "tables are not chainable");
  if (!psi1.domain->same_as(*first_domain.algebra))
    fail(ErrorCode::AlgebraMismatch,
         "first domain structure does not match psi1's domain");
  const std::uint32_t NA = psi1.domain->element_count();
  std::vector<std::uint32_t> out(NA, 0);
  for (std::uint32_t a = 0; a < NA; ++a)
    for (std::uint32_t b = 0; b < NA; ++b)
      if (first_domain.wellinside.contains(b, a)) out[a] |= psi2(psi1(b));
  return MeetFunctionTable(psi1.domain, psi2.codomain, std::move(out));
}

const std::vector<std::pair<std::string, std::string>>& category_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"SKAL", "IKA"},   {"SAL", "IA"},      {"OAL", "IOA"},
      {"OPAL", "IPA"},   {"SSKAL", "ISSKAL"},{"ISKAL", "IISKAL"},
      {"ISAL", "IIA"},   {"SSAL", "SIA"},    {"IOPAL", "IIPA"},
      {"SOPAL", "SIPA"}, {"IOAL", "IIOAL"},  {"SOAL", "ISOAL"},
      {"SALC", "IAC"},   {"OPALC", "IPAC"}};
  return pairs;
}

Classification classify(const CompleteHomomorphism& phi,
                        const LocalContactStructure& src,
                        const LocalContactStructure& dst) {
  Classification out;
  out.injective = phi.is_injective();
  out.surjective = phi.is_surjective();
  out.src_connected =
      check_connected(ContactStructure(src.algebra, src.contact)).all_hold();
  out.dst_connected =
      check_connected(ContactStructure(dst.algebra, dst.contact)).all_hold();
  for (const auto& id : lside_axiom_ids())
    out.axioms.entries.push_back(check_morphism_axiom(phi, src, dst, id));
  auto ax = [&](const char* id) { return out.axioms.holds(id); };
  const bool skal = ax("L1") && ax("L2");
  const bool sal = skal && ax("L3");
  const bool conn = out.src_connected && out.dst_connected;
  out.flags = {
      {"SKAL", skal},
      {"SAL", sal},
      {"OAL", skal && ax("LO")},
      {"OPAL", sal && ax("LO")},
      {"SSKAL", skal && ax("LS")},
      {"ISKAL", skal && ax("IS")},
      {"ISAL", out.injective && ax("L1") && ax("L2") && ax("L3")},
      {"SSAL", sal && ax("LS")},
      {"IOPAL", out.injective && sal && ax("LO")},
      {"SOPAL", out.surjective && sal && ax("LO")},
      {"IOAL", ax("L1") && ax("L2") && ax("IS") && ax("LO")},
      {"SOAL", out.surjective && ax("L1") && ax("L2") && ax("LO")},
      {"SALC", sal && conn},
      {"OPALC", sal && ax("LO") && conn},
  };
  return out;
}

Classification classify(const CompleteHomomorphism& phi,
                        const MvdStructure& src, const MvdStructure& dst) {
  Classification out;
  out.injective = phi.is_injective();
  out.surjective = phi.is_surjective();
  out.src_connected = check_connected(src).all_hold();
  out.dst_connected = check_connected(dst).all_hold();
  for (const auto& id : sside_axiom_ids())
    out.axioms.entries.push_back(check_morphism_axiom(phi, src, dst, id));
  auto ax = [&](const char* id) { return out.axioms.holds(id); };
  const bool ika = ax("S1") && ax("S2");
  const bool ia = ax("ES1") && ax("S2") && ax("S3");
  const bool conn = out.src_connected && out.dst_connected;
  out.flags = {
      {"IKA", ika},
      {"IA", ia},
      {"IOA", ika && ax("SO")},
      {"IPA", ia && ax("SO")},
      {"ISSKAL", ika && ax("LSpp")},
      {"IISKAL", ika && ax("ISp")},
      {"IIA", out.injective && ia},
      {"SIA", ia && ax("CS")},
      {"IIPA", out.injective && ia && ax("SO")},
      {"SIPA", out.surjective && ia && ax("SO")},
      {"IIOAL", ax("S1") && ax("S2") && ax("ISp") && ax("SO")},
      {"ISOAL", out.surjective && ax("S1") && ax("S2") && ax("SO")},
      {"IAC", ia && conn},
      {"IPAC", ia && ax("SO") && conn},
  };
  return out;
}

Classification classify(const MeetFunctionTable& psi,
                        const LocalContactStructure& src,
                        const LocalContactStructure& dst) {
  Classification out;
  out.src_connected =
      check_connected(ContactStructure(src.algebra, src.contact)).all_hold();
  out.dst_connected =
      check_connected(ContactStructure(dst.algebra, dst.contact)).all_hold();
  out.axioms = check_function_axioms(psi, src, dst);
  out.flags = {{"DHLC", out.axioms.all_hold()}};
  return out;
}

Classification classify(const MeetFunctionTable& psi, const MvdStructure& src,
                        const MvdStructure& dst) {
  Classification out;
  out.src_connected = check_connected(src).all_hold();
  out.dst_connected = check_connected(dst).all_hold();
  out.axioms = check_function_axioms(psi, src, dst);
  out.flags = {{"MVDHLC", out.axioms.all_hold()}};
  return out;
}

}  // namespace mereo
