#ifndef MEREO_RELATION_HPP
#define MEREO_RELATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mereo/algebra.hpp"

namespace mereo {

/// Named elements attached to a failed axiom; re-evaluating the axiom body at
/// the witness reproduces the failure.
using Witness = std::vector<std::pair<std::string, std::string>>;

Witness make_witness(std::initializer_list<std::pair<std::string, Element>> parts);

struct AxiomVerdict {
  std::string axiom;
  bool holds = true;
  Witness witness;
};

struct AxiomReport {
  std::vector<AxiomVerdict> entries;

  bool all_hold() const {
    for (const auto& e : entries)
      if (!e.holds) return false;
    return true;
  }
  const AxiomVerdict* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.axiom == id) return &e;
    return nullptr;
  }
  bool holds(const std::string& id) const {
    const AxiomVerdict* v = find(id);
    return v && v->holds;
  }
};

/// An extensional binary relation on the elements of a finite Boolean algebra,
/// stored as a bit matrix. Nothing is presumed about it; axioms are checked,
/// never assumed. Pair enumeration caps the algebra at 8 atoms.
class BinaryRelation {
 public:
  enum class Flavor { Contact, WellInside };
  static constexpr int kMaxAtoms = 8;

  BinaryRelation(AlgebraPtr algebra, Flavor flavor);

  const AlgebraPtr& algebra() const { return algebra_; }
  Flavor flavor() const { return flavor_; }
  std::uint32_t element_count() const { return n_; }

  bool contains(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t i = a * n_ + b;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::uint32_t a, std::uint32_t b, bool value = true) {
    std::uint32_t i = a * n_ + b;
    if (value)
      words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  bool same_pairs(const BinaryRelation& other) const {
    return words_ == other.words_;
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

 private:
  AlgebraPtr algebra_;
  Flavor flavor_;
  std::uint32_t n_;
  std::vector<std::uint64_t> words_;
};

/// Contact relation induced by a graph on atoms; loops at every atom are
/// implicit. a C b iff some atom of a equals or is adjacent to some atom of b.
/// Satisfies C1-C4 by construction.
BinaryRelation contact_from_atom_graph(
    const AlgebraPtr& algebra,
    const std::vector<std::pair<Element, Element>>& edges);
BinaryRelation contact_from_atom_graph_indices(
    const AlgebraPtr& algebra,
    const std::vector<std::pair<int, int>>& edges);

/// a << b iff not (a C b*).
BinaryRelation wellinside_from_contact(const BinaryRelation& contact);
/// a C b iff not (a << b*).
BinaryRelation contact_from_wellinside(const BinaryRelation& wellinside);

/// Contact axiom ids: C1..C6, CON. Empty `which` means all of them.
AxiomReport check_contact_axioms(const BinaryRelation& contact,
                                 const std::vector<std::string>& which = {});

/// Well-inside axiom ids: ll1..ll7, ll2p, ll4s, MVD.
AxiomReport check_wellinside_axioms(const BinaryRelation& wellinside,
                                    const std::vector<std::string>& which = {});

struct AtomDeterminedResult {
  bool atom_determined = true;
  Witness witness;
};

/// True iff the contact equals the atom-graph contact rebuilt from its own
/// atom pairs (exactly the C1-C4 relations).
AtomDeterminedResult is_atom_determined(const BinaryRelation& contact);

}  // namespace mereo

#endif
