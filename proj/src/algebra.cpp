#include "mereo/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <set>

namespace mereo {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotAnAtom: return "NotAnAtom";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::WrongFlavor: return "WrongFlavor";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

int max_atoms() {
  int cap = FiniteBooleanAlgebra::kHardAtomCeiling;
  if (const char* env = std::getenv("MEREO_MAX_ATOMS")) {
    int v = std::atoi(env);
    if (v >= 0 && v < cap) cap = v;
  }
  return cap;
}

static bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

AlgebraPtr FiniteBooleanAlgebra::make(std::vector<std::string> atom_labels) {
  if (static_cast<int>(atom_labels.size()) > max_atoms())
    fail(ErrorCode::TooManyAtoms,
         "atom count " + std::to_string(atom_labels.size()) + " exceeds cap " +
             std::to_string(max_atoms()));
  std::set<std::string> seen;
  for (const auto& l : atom_labels) {
    if (!valid_label(l)) fail(ErrorCode::InvalidLabel, "'" + l + "'");
    if (!seen.insert(l).second) fail(ErrorCode::DuplicateLabel, "'" + l + "'");
  }
  return AlgebraPtr(new FiniteBooleanAlgebra(std::move(atom_labels)));
}

int FiniteBooleanAlgebra::atom_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Element bottom(const AlgebraPtr& alg) { return {alg, 0}; }
Element top(const AlgebraPtr& alg) { return {alg, alg->top_bits()}; }

Element atom_element(const AlgebraPtr& alg, int atom_index) {
  return {alg, 1u << atom_index};
}

Element eval_element(const AlgebraPtr& alg, const std::string& expr) {
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  std::string body = trim(expr);
  if (body == "0") return bottom(alg);
  if (body == "1") return top(alg);
  if (body.empty()) fail(ErrorCode::SyntaxError, "empty element expression");
  std::uint32_t bits = 0;
  size_t pos = 0;
  while (true) {
    size_t bar = body.find('|', pos);
    std::string tok = trim(body.substr(pos, bar - pos));
    if (tok.empty())
      fail(ErrorCode::SyntaxError, "empty atom name in '" + expr + "'");
    int idx = alg->atom_index(tok);
    if (idx < 0) fail(ErrorCode::UnknownAtom, "'" + tok + "'");
    bits |= 1u << idx;
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return {alg, bits};
}

std::string element_expr(const Element& e) {
  if (e.bits == 0) return "0";
  if (e.is_one()) return "1";
  std::string out;
  for (int i = 0; i < e.algebra->atom_count(); ++i) {
    if (e.bits & (1u << i)) {
      if (!out.empty()) out += "|";
      out += e.algebra->atom_labels()[i];
    }
  }
  return out;
}

CompleteHomomorphism::CompleteHomomorphism(AlgebraPtr domain,
                                           AlgebraPtr codomain,
                                           std::vector<int> atom_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      atom_map_(std::move(atom_map)) {
  if (static_cast<int>(atom_map_.size()) != codomain_->atom_count())
    fail(ErrorCode::NotAnAtom, "atom map must cover every codomain atom");
  for (int g : atom_map_)
    if (g < 0 || g >= domain_->atom_count())
      fail(ErrorCode::NotAnAtom, "atom map value out of range");
}

std::uint32_t CompleteHomomorphism::apply_bits(std::uint32_t a) const {
  std::uint32_t out = 0;
  for (size_t q = 0; q < atom_map_.size(); ++q)
    if (a & (1u << atom_map_[q])) out |= 1u << q;
  return out;
}

Element CompleteHomomorphism::apply(const Element& a) const {
  if (!a.algebra->same_as(*domain_))
    fail(ErrorCode::AlgebraMismatch, "element not in the domain algebra");
  return {codomain_, apply_bits(a.bits)};
}

std::uint32_t CompleteHomomorphism::adjoint_bits(std::uint32_t b) const {
  // Image formula.
  std::uint32_t image = 0;
  for (size_t q = 0; q < atom_map_.size(); ++q)
    if (b & (1u << q)) image |= 1u << atom_map_[q];
  // Definitional formula: meet of all a with b <= phi(a).
  std::uint32_t definitional = domain_->top_bits();
  for (std::uint32_t a = 0; a < domain_->element_count(); ++a)
    if ((b & ~apply_bits(a)) == 0) definitional &= a;
  if (image != definitional)
    fail(ErrorCode::InternalMismatch, "adjoint formulas disagree");
  return image;
}

Element CompleteHomomorphism::adjoint_apply(const Element& b) const {
  if (!b.algebra->same_as(*codomain_))
    fail(ErrorCode::AlgebraMismatch, "element not in the codomain algebra");
  return {domain_, adjoint_bits(b.bits)};
}

bool CompleteHomomorphism::is_injective() const {
  std::uint32_t hit = 0;
  for (int g : atom_map_) hit |= 1u << g;
  return hit == domain_->top_bits();  // atom map surjective
}

bool CompleteHomomorphism::is_surjective() const {
  std::set<int> seen;
  for (int g : atom_map_)
    if (!seen.insert(g).second) return false;
  return true;  // atom map injective
}

CompleteHomomorphism hom_from_atom_map(
    const AlgebraPtr& domain, const AlgebraPtr& codomain,
    const std::vector<Element>& atom_images) {
  std::vector<int> map;
  map.reserve(atom_images.size());
  for (const auto& e : atom_images) {
    if (!e.algebra->same_as(*domain))
      fail(ErrorCode::AlgebraMismatch, "atom image not in the domain algebra");
    if (std::popcount(e.bits) != 1)
      fail(ErrorCode::NotAnAtom, "'" + element_expr(e) + "' is not an atom");
    map.push_back(std::countr_zero(e.bits));
  }
  return CompleteHomomorphism(domain, codomain, std::move(map));
}

CompleteHomomorphism hom_from_table(const AlgebraPtr& domain,
                                    const AlgebraPtr& codomain,
                                    const std::vector<std::uint32_t>& table) {
  const std::uint32_t m = domain->element_count();
  const std::uint32_t topb = codomain->top_bits();
  if (table.size() != m)
    fail(ErrorCode::NotAHomomorphism, "table must cover all 2^m elements");
  if (table[0] != 0)
    fail(ErrorCode::NotAHomomorphism, "phi(0) != 0");
  if (table[m - 1] != topb)
    fail(ErrorCode::NotAHomomorphism, "phi(1) != 1");
  for (std::uint32_t a = 0; a < m; ++a) {
    if ((table[(~a) & (m - 1)] ^ table[a]) != topb)
      fail(ErrorCode::NotAHomomorphism,
           "complement not preserved at (" +
               element_expr({domain, a}) + ")");
    for (std::uint32_t b = 0; b < m; ++b) {
      if (table[a | b] != (table[a] | table[b]) ||
          table[a & b] != (table[a] & table[b]))
        fail(ErrorCode::NotAHomomorphism,
             "join/meet not preserved at (" + element_expr({domain, a}) +
                 ", " + element_expr({domain, b}) + ")");
    }
  }
  // Recover the atom map: g(q) is the unique atom a of the domain with
  // q <= phi(a).
  std::vector<int> map(codomain->atom_count(), -1);
  for (int q = 0; q < codomain->atom_count(); ++q) {
    for (int a = 0; a < domain->atom_count(); ++a) {
      if (table[1u << a] & (1u << q)) {
        map[q] = a;
        break;
      }
    }
    if (map[q] < 0)
      fail(ErrorCode::NotComplete,
           "codomain atom '" + codomain->atom_labels()[q] +
               "' below no atom image");
  }
  CompleteHomomorphism phi(domain, codomain, std::move(map));
  for (std::uint32_t a = 0; a < m; ++a)
    if (phi.apply_bits(a) != table[a])
      fail(ErrorCode::NotAHomomorphism, "table inconsistent with atom map");
  return phi;
}

CompleteHomomorphism identity_hom(const AlgebraPtr& alg) {
  std::vector<int> map(alg->atom_count());
  for (size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  return CompleteHomomorphism(alg, alg, std::move(map));
}

GaloisReport check_galois(const CompleteHomomorphism& phi) {
  GaloisReport rep;
  const auto& A = phi.domain();
  const auto& B = phi.codomain();
  for (std::uint32_t a = 0; a < A->element_count(); ++a) {
    std::uint32_t fa = phi.apply_bits(a);
    for (std::uint32_t b = 0; b < B->element_count(); ++b) {
      std::uint32_t lb = phi.adjoint_bits(b);
      bool left = (b & ~fa) == 0;   // b <= phi(a)
      bool right = (lb & ~a) == 0;  // phiLambda(b) <= a
      if (rep.lambda.holds && left != right) {
        rep.lambda.holds = false;
        rep.lambda.witness = {{Element{A, a}, Element{B, b}}};
      }
      std::uint32_t lhs = phi.adjoint_bits(fa & b);
      if (rep.l2rave.holds && lhs != (a & lb)) {
        rep.l2rave.holds = false;
        rep.l2rave.witness = {{Element{A, a}, Element{B, b}}};
      }
    }
  }
  for (std::uint32_t b = 0; b < B->element_count(); ++b) {
    std::uint32_t v = phi.apply_bits(phi.adjoint_bits(b));
    if ((b & ~v) != 0) {
      rep.lambda1.holds = false;
      rep.lambda1.witness = {{Element{A, phi.adjoint_bits(b)}, Element{B, b}}};
      break;
    }
  }
  for (std::uint32_t a = 0; a < A->element_count(); ++a) {
    std::uint32_t v = phi.adjoint_bits(phi.apply_bits(a));
    if ((v & ~a) != 0) {
      rep.lambda2.holds = false;
      rep.lambda2.witness = {{Element{A, a}, Element{B, phi.apply_bits(a)}}};
      break;
    }
  }
  return rep;
}

}  // namespace mereo
