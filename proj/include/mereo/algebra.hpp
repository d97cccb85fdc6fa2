#ifndef MEREO_ALGEBRA_HPP
#define MEREO_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mereo/error.hpp"

namespace mereo {

class FiniteBooleanAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteBooleanAlgebra>;

/// A finite Boolean algebra given by an ordered list of atom labels.
/// Elements are bit vectors over the atoms; the empty label list yields the
/// degenerate one-element algebra with 0 = 1.
class FiniteBooleanAlgebra {
 public:
  static constexpr int kHardAtomCeiling = 24;

  static AlgebraPtr make(std::vector<std::string> atom_labels);

  int atom_count() const { return static_cast<int>(labels_.size()); }
  std::uint32_t element_count() const { return 1u << labels_.size(); }
  std::uint32_t top_bits() const { return element_count() - 1; }
  const std::vector<std::string>& atom_labels() const { return labels_; }
  /// Index of a label, or -1.
  int atom_index(const std::string& label) const;

  bool same_as(const FiniteBooleanAlgebra& other) const {
    return labels_ == other.labels_;
  }

 private:
  explicit FiniteBooleanAlgebra(std::vector<std::string> labels)
      : labels_(std::move(labels)) {}
  std::vector<std::string> labels_;
};

/// Effective atom cap: MEREO_MAX_ATOMS if set (clamped to the hard ceiling).
int max_atoms();

struct Element {
  AlgebraPtr algebra;
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  bool is_one() const { return bits == algebra->top_bits(); }
};

inline void require_same_algebra(const Element& a, const Element& b) {
  if (!a.algebra->same_as(*b.algebra))
    fail(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
}

inline Element meet(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return {a.algebra, a.bits & b.bits};
}
inline Element join(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return {a.algebra, a.bits | b.bits};
}
inline Element complement(const Element& a) {
  return {a.algebra, ~a.bits & a.algebra->top_bits()};
}
inline bool leq(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return (a.bits & ~b.bits) == 0;
}

Element bottom(const AlgebraPtr& alg);
Element top(const AlgebraPtr& alg);
Element atom_element(const AlgebraPtr& alg, int atom_index);

/// Parses the element grammar: "0" | "1" | atom ("|" atom)*.
Element eval_element(const AlgebraPtr& alg, const std::string& expr);

/// Canonical normal form: "0", "1", or the join of atom labels in atom order.
std::string element_expr(const Element& e);

/// A complete Boolean homomorphism phi : A -> B in canonical atom-map form:
/// g sends each atom of B to an atom of A, and
/// phi(a) = join of the atoms q of B with g(q) <= a.
class CompleteHomomorphism {
 public:
  /// atom_map[q] = index of g(q) in A, one entry per atom of B.
  CompleteHomomorphism(AlgebraPtr domain, AlgebraPtr codomain,
                       std::vector<int> atom_map);

  const AlgebraPtr& domain() const { return domain_; }
  const AlgebraPtr& codomain() const { return codomain_; }
  const std::vector<int>& atom_map() const { return atom_map_; }

  Element apply(const Element& a) const;
  std::uint32_t apply_bits(std::uint32_t a) const;

  /// Lower adjoint phiLambda(b), computed by the image formula
  /// join{g(q) : q atom of B, q <= b} and cross-checked against the
  /// definitional meet{a : b <= phi(a)}.
  Element adjoint_apply(const Element& b) const;
  std::uint32_t adjoint_bits(std::uint32_t b) const;

  bool is_injective() const;  // iff the atom map is surjective
  bool is_surjective() const; // iff the atom map is injective

  bool operator==(const CompleteHomomorphism& other) const {
    return domain_->same_as(*other.domain_) &&
           codomain_->same_as(*other.codomain_) &&
           atom_map_ == other.atom_map_;
  }

 private:
  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  std::vector<int> atom_map_;
};

CompleteHomomorphism hom_from_atom_map(
    const AlgebraPtr& domain, const AlgebraPtr& codomain,
    const std::vector<Element>& atom_images_of_codomain_atoms);

/// Validates an extensional table (one codomain element per domain element,
/// indexed by bits) and recovers the canonical atom-map form.
CompleteHomomorphism hom_from_table(const AlgebraPtr& domain,
                                    const AlgebraPtr& codomain,
                                    const std::vector<std::uint32_t>& table);

CompleteHomomorphism identity_hom(const AlgebraPtr& alg);

struct GaloisClause {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;  // offending (a, b)
};

struct GaloisReport {
  GaloisClause lambda;    // b <= phi(a) iff phiLambda(b) <= a
  GaloisClause lambda1;   // phi(phiLambda(b)) >= b
  GaloisClause lambda2;   // phiLambda(phi(a)) <= a
  GaloisClause l2rave;    // phiLambda(phi(a) /\ b) = a /\ phiLambda(b)
  bool all_hold() const {
    return lambda.holds && lambda1.holds && lambda2.holds && l2rave.holds;
  }
};

GaloisReport check_galois(const CompleteHomomorphism& phi);

}  // namespace mereo

#endif
