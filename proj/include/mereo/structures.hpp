#ifndef MEREO_STRUCTURES_HPP
#define MEREO_STRUCTURES_HPP

#include <optional>
#include <vector>

#include "mereo/relation.hpp"

namespace mereo {

/// (B, C): a Boolean algebra with a contact-flavored relation. Validity is a
/// report, not a constructor precondition.
struct ContactStructure {
  AlgebraPtr algebra;
  BinaryRelation contact;

  ContactStructure(AlgebraPtr alg, BinaryRelation c)
      : algebra(std::move(alg)), contact(std::move(c)) {
    if (contact.flavor() != BinaryRelation::Flavor::Contact)
      fail(ErrorCode::WrongFlavor, "contact structure needs a contact relation");
    if (!contact.algebra()->same_as(*algebra))
      fail(ErrorCode::AlgebraMismatch, "relation on a different algebra");
  }
};

/// (B, rho, BB): contact plus an extensional set of bounded elements.
struct LocalContactStructure {
  AlgebraPtr algebra;
  BinaryRelation contact;
  std::vector<bool> bounded;  // indexed by element bits

  LocalContactStructure(AlgebraPtr alg, BinaryRelation rho,
                        std::vector<bool> bb);

  bool is_bounded(std::uint32_t bits) const { return bounded[bits]; }

  bool operator==(const LocalContactStructure& other) const {
    return algebra->same_as(*other.algebra) &&
           contact.same_pairs(other.contact) && bounded == other.bounded;
  }
};

/// (B, <=, <<): a Boolean algebra with a single well-inside-flavored relation.
struct MvdStructure {
  AlgebraPtr algebra;
  BinaryRelation wellinside;

  MvdStructure(AlgebraPtr alg, BinaryRelation w)
      : algebra(std::move(alg)), wellinside(std::move(w)) {
    if (wellinside.flavor() != BinaryRelation::Flavor::WellInside)
      fail(ErrorCode::WrongFlavor, "mvd structure needs a well-inside relation");
    if (!wellinside.algebra()->same_as(*algebra))
      fail(ErrorCode::AlgebraMismatch, "relation on a different algebra");
  }

  bool operator==(const MvdStructure& other) const {
    return algebra->same_as(*other.algebra) &&
           wellinside.same_pairs(other.wellinside);
  }
};

struct Ultrafilter {
  Element principal_atom;
  bool bounded = false;
};

/// C1-C4, BB1-BB3, BC1-BC3.
AxiomReport check_lca_axioms(const LocalContactStructure& L);

/// ll1-ll6, ll4s, MVD.
AxiomReport check_mvd_axioms(const MvdStructure& M);

bool lca_valid(const LocalContactStructure& L);
bool mvd_valid(const MvdStructure& M);

/// CON for contact structures, CONA for MVD structures.
AxiomReport check_connected(const ContactStructure& S);
AxiomReport check_connected(const MvdStructure& S);

std::vector<Ultrafilter> bounded_ultrafilters(const LocalContactStructure& L);

/// Brute-force search for a Boolean-isomorphism atom permutation transporting
/// the contact (and the bounded set, for LCAs) exactly. perm[i] = image atom.
std::optional<std::vector<int>> structures_isomorphic(
    const ContactStructure& X, const ContactStructure& Y);
std::optional<std::vector<int>> structures_isomorphic(
    const LocalContactStructure& X, const LocalContactStructure& Y);

}  // namespace mereo

#endif
