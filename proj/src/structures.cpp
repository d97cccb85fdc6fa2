#include "mereo/structures.hpp"

#include <algorithm>
#include <numeric>

namespace mereo {

LocalContactStructure::LocalContactStructure(AlgebraPtr alg, BinaryRelation rho,
                                             std::vector<bool> bb)
    : algebra(std::move(alg)), contact(std::move(rho)), bounded(std::move(bb)) {
  if (contact.flavor() != BinaryRelation::Flavor::Contact)
    fail(ErrorCode::WrongFlavor, "local contact structure needs a contact relation");
  if (!contact.algebra()->same_as(*algebra))
    fail(ErrorCode::AlgebraMismatch, "relation on a different algebra");
  if (bounded.size() != algebra->element_count())
    fail(ErrorCode::AlgebraMismatch, "bounded set must cover every element");
}

AxiomReport check_lca_axioms(const LocalContactStructure& L) {
  AxiomReport rep =
      check_contact_axioms(L.contact, {"C1", "C2", "C3", "C4"});
  const AlgebraPtr& alg = L.algebra;
  const std::uint32_t N = alg->element_count();
  const BinaryRelation wi = wellinside_from_contact(L.contact);

  {
    AxiomVerdict v{"BB1", true, {}};
    if (!L.bounded[0]) {
      v.holds = false;
      v.witness = make_witness({{"a", {alg, 0}}});
    }
    rep.entries.push_back(std::move(v));
  }
  {
    AxiomVerdict v{"BB2", true, {}};
    for (std::uint32_t b = 0; b < N && v.holds; ++b) {
      if (!L.bounded[b]) continue;
      for (std::uint32_t a = 0; a < N; ++a)
        if ((a & ~b) == 0 && !L.bounded[a]) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          break;
        }
    }
    rep.entries.push_back(std::move(v));
  }
  {
    AxiomVerdict v{"BB3", true, {}};
    for (std::uint32_t a = 0; a < N && v.holds; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (L.bounded[a] && L.bounded[b] && !L.bounded[a | b]) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          break;
        }
    rep.entries.push_back(std::move(v));
  }
  {
    AxiomVerdict v{"BC1", true, {}};
    for (std::uint32_t a = 0; a < N && v.holds; ++a) {
      if (!L.bounded[a]) continue;
      for (std::uint32_t c = 0; c < N; ++c) {
        if (!wi.contains(a, c)) continue;
        bool found = false;
        for (std::uint32_t b = 0; b < N && !found; ++b)
          if (L.bounded[b] && wi.contains(a, b) && wi.contains(b, c))
            found = true;
        if (!found) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"c", {alg, c}}});
          break;
        }
      }
    }
    rep.entries.push_back(std::move(v));
  }
  {
    AxiomVerdict v{"BC2", true, {}};
    for (std::uint32_t a = 0; a < N && v.holds; ++a)
      for (std::uint32_t b = 0; b < N; ++b) {
        if (!L.contact.contains(a, b)) continue;
        bool found = false;
        for (std::uint32_t c = 0; c < N && !found; ++c)
          if (L.bounded[c] && L.contact.contains(a, c & b)) found = true;
        if (!found) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          break;
        }
      }
    rep.entries.push_back(std::move(v));
  }
  {
    AxiomVerdict v{"BC3", true, {}};
    for (std::uint32_t a = 1; a < N; ++a) {
      bool found = false;
      for (std::uint32_t b = 1; b < N && !found; ++b)
        if (L.bounded[b] && wi.contains(b, a)) found = true;
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"a", {alg, a}}});
        break;
      }
    }
    rep.entries.push_back(std::move(v));
  }
  return rep;
}

AxiomReport check_mvd_axioms(const MvdStructure& M) {
  return check_wellinside_axioms(
      M.wellinside,
      {"ll1", "ll2", "ll3", "ll4", "ll5", "ll6", "ll4s", "MVD"});
}

bool lca_valid(const LocalContactStructure& L) {
  return check_lca_axioms(L).all_hold();
}
bool mvd_valid(const MvdStructure& M) { return check_mvd_axioms(M).all_hold(); }

AxiomReport check_connected(const ContactStructure& S) {
  return check_contact_axioms(S.contact, {"CON"});
}

AxiomReport check_connected(const MvdStructure& S) {
  const AlgebraPtr& alg = S.algebra;
  const std::uint32_t N = alg->element_count(), topb = N - 1;
  const BinaryRelation& W = S.wellinside;
  AxiomVerdict v{"CONA", true, {}};
  for (std::uint32_t a = 0; a < N; ++a) {
    if (a == 0 || a == topb) continue;
    bool found = false;
    for (std::uint32_t c = 0; c < N && !found; ++c)
      if (W.contains(c, topb) &&
          !W.contains(c & a, a | (~c & topb)))
        found = true;
    if (!found) {
      v.holds = false;
      v.witness = make_witness({{"a", {alg, a}}});
      break;
    }
  }
  AxiomReport rep;
  rep.entries.push_back(std::move(v));
  return rep;
}

std::vector<Ultrafilter> bounded_ultrafilters(const LocalContactStructure& L) {
  std::vector<Ultrafilter> out;
  const std::uint32_t N = L.algebra->element_count();
  for (int p = 0; p < L.algebra->atom_count(); ++p) {
    bool meets = false;
    for (std::uint32_t a = 0; a < N && !meets; ++a)
      if ((a & (1u << p)) && L.bounded[a]) meets = true;
    if (meets) out.push_back({atom_element(L.algebra, p), true});
  }
  return out;
}

namespace {

constexpr int kIsoMaxAtoms = 6;

std::uint32_t permute_bits(std::uint32_t a, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if (a & (1u << i)) out |= 1u << perm[i];
  return out;
}

template <typename Extra>
std::optional<std::vector<int>> find_permutation(const BinaryRelation& r1,
                                                 const BinaryRelation& r2,
                                                 Extra extra_ok) {
  const int n = r1.algebra()->atom_count();
  if (n != r2.algebra()->atom_count()) return std::nullopt;
  if (n > kIsoMaxAtoms)
    fail(ErrorCode::CapacityExceeded,
         "isomorphism search capped at " + std::to_string(kIsoMaxAtoms) +
             " atoms");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint32_t N = r1.element_count();
  do {
    bool ok = true;
    for (std::uint32_t a = 0; a < N && ok; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (r1.contains(a, b) !=
            r2.contains(permute_bits(a, perm), permute_bits(b, perm))) {
          ok = false;
          break;
        }
    if (ok && extra_ok(perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> structures_isomorphic(
    const ContactStructure& X, const ContactStructure& Y) {
  return find_permutation(X.contact, Y.contact,
                          [](const std::vector<int>&) { return true; });
}

std::optional<std::vector<int>> structures_isomorphic(
    const LocalContactStructure& X, const LocalContactStructure& Y) {
  const std::uint32_t N = X.algebra->element_count();
  return find_permutation(
      X.contact, Y.contact, [&](const std::vector<int>& perm) {
        for (std::uint32_t a = 0; a < N; ++a)
          if (X.bounded[a] != Y.bounded[permute_bits(a, perm)]) return false;
        return true;
      });
}

}  // namespace mereo
