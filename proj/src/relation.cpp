#include "mereo/relation.hpp"

#include <algorithm>
#include <bit>

namespace mereo {

Witness make_witness(
    std::initializer_list<std::pair<std::string, Element>> parts) {
  Witness w;
  for (const auto& [name, e] : parts) w.emplace_back(name, element_expr(e));
  return w;
}

BinaryRelation::BinaryRelation(AlgebraPtr algebra, Flavor flavor)
    : algebra_(std::move(algebra)), flavor_(flavor) {
  if (algebra_->atom_count() > kMaxAtoms)
    fail(ErrorCode::CapacityExceeded,
         "extensional relations require at most " +
             std::to_string(kMaxAtoms) + " atoms");
  n_ = algebra_->element_count();
  words_.assign((std::uint64_t(n_) * n_ + 63) / 64, 0);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BinaryRelation::pairs()
    const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

BinaryRelation contact_from_atom_graph_indices(
    const AlgebraPtr& algebra, const std::vector<std::pair<int, int>>& edges) {
  const int n = algebra->atom_count();
  // Closed neighborhood mask per atom (loops implicit).
  std::vector<std::uint32_t> nbr(n, 0);
  for (int i = 0; i < n; ++i) nbr[i] = 1u << i;
  for (auto [p, q] : edges) {
    if (p < 0 || p >= n || q < 0 || q >= n)
      fail(ErrorCode::NotAnAtom, "edge endpoint is not an atom");
    nbr[p] |= 1u << q;
    nbr[q] |= 1u << p;
  }
  BinaryRelation rel(algebra, BinaryRelation::Flavor::Contact);
  const std::uint32_t N = rel.element_count();
  for (std::uint32_t a = 0; a < N; ++a) {
    std::uint32_t reach = 0;
    for (int i = 0; i < n; ++i)
      if (a & (1u << i)) reach |= nbr[i];
    for (std::uint32_t b = 0; b < N; ++b)
      if (reach & b) rel.set(a, b);
  }
  return rel;
}

BinaryRelation contact_from_atom_graph(
    const AlgebraPtr& algebra,
    const std::vector<std::pair<Element, Element>>& edges) {
  std::vector<std::pair<int, int>> idx;
  idx.reserve(edges.size());
  for (const auto& [p, q] : edges) {
    if (!p.algebra->same_as(*algebra) || !q.algebra->same_as(*algebra))
      fail(ErrorCode::AlgebraMismatch, "edge endpoint in a different algebra");
    if (std::popcount(p.bits) != 1 || std::popcount(q.bits) != 1)
      fail(ErrorCode::NotAnAtom, "edge endpoint is not an atom");
    idx.emplace_back(std::countr_zero(p.bits), std::countr_zero(q.bits));
  }
  return contact_from_atom_graph_indices(algebra, idx);
}

BinaryRelation wellinside_from_contact(const BinaryRelation& contact) {
  if (contact.flavor() != BinaryRelation::Flavor::Contact)
    fail(ErrorCode::WrongFlavor, "expected a contact relation");
  BinaryRelation w(contact.algebra(), BinaryRelation::Flavor::WellInside);
  const std::uint32_t N = w.element_count(), topb = N - 1;
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (!contact.contains(a, ~b & topb)) w.set(a, b);
  return w;
}

BinaryRelation contact_from_wellinside(const BinaryRelation& wellinside) {
  if (wellinside.flavor() != BinaryRelation::Flavor::WellInside)
    fail(ErrorCode::WrongFlavor, "expected a well-inside relation");
  BinaryRelation c(wellinside.algebra(), BinaryRelation::Flavor::Contact);
  const std::uint32_t N = c.element_count(), topb = N - 1;
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (!wellinside.contains(a, ~b & topb)) c.set(a, b);
  return c;
}

namespace {

bool wanted(const std::vector<std::string>& which, const std::string& id) {
  return which.empty() ||
         std::find(which.begin(), which.end(), id) != which.end();
}

using CheckFn = AxiomVerdict (*)(const BinaryRelation&);

AxiomVerdict verdict_ok(const std::string& id) { return {id, true, {}}; }

}  // namespace

AxiomReport check_contact_axioms(const BinaryRelation& C,
                                 const std::vector<std::string>& which) {
  if (C.flavor() != BinaryRelation::Flavor::Contact)
    fail(ErrorCode::WrongFlavor, "expected a contact relation");
  const AlgebraPtr& alg = C.algebra();
  const std::uint32_t N = C.element_count(), topb = N - 1;
  AxiomReport rep;

  auto add = [&](const std::string& id, auto body) {
    if (!wanted(which, id)) return;
    AxiomVerdict v = verdict_ok(id);
    body(v);
    rep.entries.push_back(std::move(v));
  };

  add("C1", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 1; a < N; ++a)
      if (!C.contains(a, a)) {
        v.holds = false;
        v.witness = make_witness({{"a", {alg, a}}});
        return;
      }
  });
  add("C2", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (C.contains(a, b) && (a == 0 || b == 0)) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          return;
        }
  });
  add("C3", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (C.contains(a, b) && !C.contains(b, a)) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          return;
        }
  });
  add("C4", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        for (std::uint32_t c = 0; c < N; ++c)
          if (C.contains(a, b | c) != (C.contains(a, b) || C.contains(a, c))) {
            v.holds = false;
            v.witness = make_witness(
                {{"a", {alg, a}}, {"b", {alg, b}}, {"c", {alg, c}}});
            return;
          }
  });
  add("C5", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b) {
        if (C.contains(a, b)) continue;
        bool found = false;
        for (std::uint32_t c = 0; c < N && !found; ++c)
          if (!C.contains(a, c) && !C.contains(b, ~c & topb)) found = true;
        if (!found) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          return;
        }
      }
  });
  add("C6", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a) {
      if (a == topb) continue;
      bool found = false;
      for (std::uint32_t b = 1; b < N && !found; ++b)
        if (!C.contains(b, a)) found = true;
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"a", {alg, a}}});
        return;
      }
    }
  });
  add("CON", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a) {
      if (a == 0 || a == topb) continue;
      if (!C.contains(a, ~a & topb)) {
        v.holds = false;
        v.witness = make_witness({{"a", {alg, a}}});
        return;
      }
    }
  });
  return rep;
}

AxiomReport check_wellinside_axioms(const BinaryRelation& W,
                                    const std::vector<std::string>& which) {
  if (W.flavor() != BinaryRelation::Flavor::WellInside)
    fail(ErrorCode::WrongFlavor, "expected a well-inside relation");
  const AlgebraPtr& alg = W.algebra();
  const std::uint32_t N = W.element_count(), topb = N - 1;
  AxiomReport rep;
  auto leqb = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; };

  auto add = [&](const std::string& id, auto body) {
    if (!wanted(which, id)) return;
    AxiomVerdict v = verdict_ok(id);
    body(v);
    rep.entries.push_back(std::move(v));
  };

  add("ll1", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (W.contains(a, b) && !leqb(a, b)) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          return;
        }
  });
  add("ll2", [&](AxiomVerdict& v) {
    if (!W.contains(0, 0)) {
      v.holds = false;
      v.witness = make_witness({{"a", {alg, 0}}});
    }
  });
  add("ll3", [&](AxiomVerdict& v) {
    for (std::uint32_t b = 0; b < N; ++b)
      for (std::uint32_t c = 0; c < N; ++c) {
        if (!W.contains(b, c)) continue;
        for (std::uint32_t a = 0; a < N; ++a) {
          if (!leqb(a, b)) continue;
          for (std::uint32_t t = 0; t < N; ++t)
            if (leqb(c, t) && !W.contains(a, t)) {
              v.holds = false;
              v.witness = make_witness({{"a", {alg, a}},
                                        {"b", {alg, b}},
                                        {"c", {alg, c}},
                                        {"t", {alg, t}}});
              return;
            }
        }
      }
  });
  add("ll4", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        for (std::uint32_t c = 0; c < N; ++c)
          if (W.contains(a, c) && W.contains(b, c) && !W.contains(a | b, c)) {
            v.holds = false;
            v.witness = make_witness(
                {{"a", {alg, a}}, {"b", {alg, b}}, {"c", {alg, c}}});
            return;
          }
  });
  add("ll5", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t c = 0; c < N; ++c) {
        if (!W.contains(a, c)) continue;
        bool found = false;
        for (std::uint32_t b = 0; b < N && !found; ++b)
          if (W.contains(a, b) && W.contains(b, c)) found = true;
        if (!found) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"c", {alg, c}}});
          return;
        }
      }
  });
  add("ll6", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 1; a < N; ++a) {
      bool found = false;
      for (std::uint32_t b = 1; b < N && !found; ++b)
        if (W.contains(b, a)) found = true;
      if (!found) {
        v.holds = false;
        v.witness = make_witness({{"a", {alg, a}}});
        return;
      }
    }
  });
  add("ll7", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if (W.contains(a, b) && !W.contains(~b & topb, ~a & topb)) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          return;
        }
  });
  add("ll2p", [&](AxiomVerdict& v) {
    if (!W.contains(topb, topb)) {
      v.holds = false;
      v.witness = make_witness({{"a", {alg, topb}}});
    }
  });
  add("ll4s", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        for (std::uint32_t c = 0; c < N; ++c)
          if (W.contains(a, b) && W.contains(a, c) && !W.contains(a, b & c)) {
            v.holds = false;
            v.witness = make_witness(
                {{"a", {alg, a}}, {"b", {alg, b}}, {"c", {alg, c}}});
            return;
          }
  });
  add("MVD", [&](AxiomVerdict& v) {
    for (std::uint32_t a = 0; a < N; ++a) {
      if (!W.contains(a, topb)) continue;
      for (std::uint32_t b = 0; b < N; ++b)
        if (W.contains(~b & topb, ~a & topb) && !W.contains(a, b)) {
          v.holds = false;
          v.witness = make_witness({{"a", {alg, a}}, {"b", {alg, b}}});
          return;
        }
    }
  });
  return rep;
}

AtomDeterminedResult is_atom_determined(const BinaryRelation& contact) {
  if (contact.flavor() != BinaryRelation::Flavor::Contact)
    fail(ErrorCode::WrongFlavor, "expected a contact relation");
  const AlgebraPtr& alg = contact.algebra();
  const int n = alg->atom_count();
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (contact.contains(1u << p, 1u << q)) edges.emplace_back(p, q);
  BinaryRelation rebuilt = contact_from_atom_graph_indices(alg, edges);
  // Rebuilding forces loops; a missing loop in the input must surface too.
  for (int p = 0; p < n; ++p)
    if (!contact.contains(1u << p, 1u << p))
      return {false, make_witness({{"a", atom_element(alg, p)},
                                   {"b", atom_element(alg, p)}})};
  const std::uint32_t N = contact.element_count();
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (contact.contains(a, b) != rebuilt.contains(a, b))
        return {false, make_witness({{"a", {alg, a}}, {"b", {alg, b}}})};
  return {true, {}};
}

}  // namespace mereo
