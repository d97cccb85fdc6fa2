#ifndef MEREO_LAB_HPP
#define MEREO_LAB_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mereo/io.hpp"

namespace mereo {

/// Candidate-universe description for enumeration and implication search.
///
/// Kinds and universes:
///   contact_graph       all atom graphs on n atoms (n <= 5)
///   contact_relation    all relations for n <= 2; seeded samples beyond
///   wellinside_relation likewise, with well-inside flavor
///   ideal               principal down-sets as bounded sets over overlap
///   lca                 atom-graph contacts x principal down-sets (n <= 3)
///   mvd                 all relations for n <= 2; kappa images of the lca
///                       universe for n = 3
///   preorder_space      all preorders on n points (n <= 4)
///   hom                 all atom maps between n- and codomain_n-atom algebras
///   meet_table          meet tables generated by arbitrary coatom images
struct EnumerationSpec {
  std::string kind;
  int n = 2;
  int codomain_n = -1;  // hom / meet_table; -1 means n
  std::vector<std::string> filter;  // axiom ids; "valid" = full validity suite
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // sampled kinds; 0 means the default 10000
};

struct EnumerationResult {
  std::vector<std::string> documents;  // canonical serializations, sorted
  std::uint64_t candidates = 0;        // before filtering / dedup
  std::uint64_t matched = 0;           // == documents.size()
};

EnumerationResult enumerate_structures(const EnumerationSpec& spec);

/// Axioms a document can be tested against, per kind (contact: C1..C6, CON;
/// mvd: ll1..ll7, ll2p, ll4s, MVD, CONA; lca: the full LCA suite + CON).
AxiomReport eval_axioms(const Document& doc, const std::vector<std::string>& ids);

struct SearchOutcome {
  std::string status;  // counterexample | exhausted | budget_reached
  std::string witness_document;
  AxiomReport witness_report;  // hypothesis verdicts then conclusion verdicts
  std::uint64_t candidates_tried = 0;
};

/// First candidate in the spec's universe satisfying every hypothesis axiom
/// while violating some conclusion axiom.
SearchOutcome search_implication(const std::vector<std::string>& hypothesis,
                                 const std::vector<std::string>& conclusion,
                                 const EnumerationSpec& spec);

struct SuiteRow {
  std::string name;
  bool pass = true;
  Witness witness;  // named fragments locating the first failure
};

struct CorrespondenceReport {
  std::vector<SuiteRow> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  const SuiteRow* find(const std::string& name) const {
    for (const auto& r : rows)
      if (r.name == name) return &r;
    return nullptr;
  }
};

/// Mutation-testing hook: the corrupted transform drops the boundedness
/// conjunct when deriving the well-inside relation.
enum class KappaMode { Standard, DropBoundedConjunct };

/// Every morphism/equivalence biconditional, evaluated over all valid
/// structures with up to n atoms and all homs / seeded meet tables between
/// them, plus definition-conformance rows over raw pre-structures (these are
/// what make the suite sensitive to the mutation hook).
CorrespondenceReport correspondence_suite(int n,
                                          KappaMode mode = KappaMode::Standard);

std::vector<std::string> default_atom_labels(int n);
std::vector<std::string> default_point_labels(int n);

}  // namespace mereo

#endif
