#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mereo/lab.hpp"

using namespace mereo;

namespace {

EnumerationSpec spec_of(const std::string& kind, int n,
                        std::vector<std::string> filter = {}) {
  EnumerationSpec s;
  s.kind = kind;
  s.n = n;
  s.filter = std::move(filter);
  return s;
}

}  // namespace

TEST_CASE("contact graph enumeration is exhaustive, sorted, deterministic") {
  EnumerationResult r = enumerate_structures(spec_of("contact_graph", 3));
  CHECK(r.candidates == 8);  // one per subset of the 3 atom edges
  CHECK(r.matched == 8);
  CHECK(std::is_sorted(r.documents.begin(), r.documents.end()));
  EnumerationResult again = enumerate_structures(spec_of("contact_graph", 3));
  CHECK(r.documents == again.documents);
}

TEST_CASE("only the overlap graph survives the full contact suite at 3 atoms") {
  EnumerationResult r = enumerate_structures(
      spec_of("contact_graph", 3, {"C1", "C2", "C3", "C4", "C5", "C6"}));
  CHECK(r.candidates == 8);
  REQUIRE(r.matched == 1);
  Document d = parse_document(r.documents[0]);
  REQUIRE(d.kind == Document::Kind::Contact);
  CHECK(d.contact->contact.same_pairs(
      contact_from_atom_graph(d.contact->algebra, {})));
}

TEST_CASE("the unique valid MVD structure at 2 atoms is the lattice order") {
  EnumerationResult r = enumerate_structures(spec_of("mvd", 2, {"valid"}));
  CHECK(r.candidates == 65536);  // every relation on the 4-element algebra
  REQUIRE(r.matched == 1);
  Document d = parse_document(r.documents[0]);
  REQUIRE(d.kind == Document::Kind::Mvd);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      CHECK(d.mvd->wellinside.contains(a, b) == ((a & ~b) == 0));
}

TEST_CASE("capacity limits and unknown kinds") {
  CHECK_THROWS_AS(enumerate_structures(spec_of("contact_graph", 6)), Error);
  CHECK_THROWS_AS(enumerate_structures(spec_of("contact_relation", 4)), Error);
  CHECK_THROWS_AS(enumerate_structures(spec_of("banana", 2)), Error);
  try {
    enumerate_structures(spec_of("contact_graph", 6));
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapacityExceeded);
  }
}

TEST_CASE("eval_axioms rejects ids from the wrong catalog") {
  EnumerationResult r = enumerate_structures(spec_of("contact_graph", 2));
  Document d = parse_document(r.documents[0]);
  CHECK_THROWS_AS(eval_axioms(d, {"ll1"}), Error);
  CHECK_THROWS_AS(eval_axioms(d, {"BB1"}), Error);
  CHECK(eval_axioms(d, {"C1", "CON"}).entries.size() == 2);
}

TEST_CASE("searching for C1-C4 without C6 finds the single-edge graph") {
  SearchOutcome o = search_implication({"C1", "C2", "C3", "C4"}, {"C6"},
                                       spec_of("contact_graph", 3));
  CHECK(o.status == "counterexample");
  CHECK(o.candidates_tried == 2);  // overlap first, then the edge {p,q}

  Document w = parse_document(o.witness_document);
  REQUIRE(w.kind == Document::Kind::Contact);
  AlgebraPtr alg = w.contact->algebra;
  CHECK(w.contact->contact.contains(eval_element(alg, "p").bits,
                                    eval_element(alg, "q").bits));
  CHECK(!w.contact->contact.contains(eval_element(alg, "p").bits,
                                     eval_element(alg, "r").bits));

  // Hypothesis verdicts all hold, then the failing conclusion with witness.
  REQUIRE(o.witness_report.entries.size() == 5);
  for (size_t i = 0; i < 4; ++i) CHECK(o.witness_report.entries[i].holds);
  const AxiomVerdict& c6 = o.witness_report.entries[4];
  CHECK(c6.axiom == "C6");
  CHECK(!c6.holds);
  REQUIRE(!c6.witness.empty());
  CHECK(c6.witness[0].second == "p|r");  // first failing element in bit order
}

TEST_CASE("implications inside the hypothesis are exhausted, not refuted") {
  SearchOutcome o = search_implication({"C1", "C2", "C3", "C4"}, {"C3"},
                                       spec_of("contact_graph", 3));
  CHECK(o.status == "exhausted");
  CHECK(o.candidates_tried == 8);
}

TEST_CASE("the MVD axioms imply ll7 over every 2-atom relation") {
  SearchOutcome o = search_implication(
      {"ll1", "ll2", "ll3", "ll4", "ll5", "ll6", "ll4s", "MVD"}, {"ll7"},
      spec_of("mvd", 2));
  CHECK(o.status == "exhausted");
  CHECK(o.candidates_tried == 65536);
}

TEST_CASE("sampled universes report budget_reached") {
  EnumerationSpec s = spec_of("contact_relation", 3);
  s.seed = 7;
  s.budget = 50;
  // The conclusion is part of the hypothesis, so no counterexample can exist;
  // the sampled universe can only run out of budget.
  SearchOutcome o = search_implication(
      {"C1", "C2", "C3", "C4", "C5", "C6", "CON"}, {"C1"}, s);
  CHECK(o.status == "budget_reached");
  CHECK(o.candidates_tried == 50);
}

TEST_CASE("sampled enumeration is reproducible from seed and budget") {
  EnumerationSpec s = spec_of("meet_table", 2);
  s.seed = 9;
  s.budget = 20;
  EnumerationResult a = enumerate_structures(s);
  EnumerationResult b = enumerate_structures(s);
  CHECK(a.candidates == 20);
  CHECK(a.documents == b.documents);
}

TEST_CASE("hom and preorder universes have the expected sizes") {
  EnumerationResult h = enumerate_structures(spec_of("hom", 2));
  CHECK(h.candidates == 4);  // 2^2 atom maps
  EnumerationResult hk = [&] {
    EnumerationSpec s = spec_of("hom", 3);
    s.codomain_n = 2;
    return enumerate_structures(s);
  }();
  CHECK(hk.candidates == 9);  // 3^2 atom maps

  EnumerationResult p = enumerate_structures(spec_of("preorder_space", 2));
  CHECK(p.candidates == 4);  // all off-diagonal pair subsets
  CHECK(p.matched == 4);     // and all close into distinct preorders

  EnumerationResult lca = enumerate_structures(spec_of("lca", 2, {"valid"}));
  REQUIRE(lca.matched == 1);  // (overlap, everything bounded)
  Document d = parse_document(lca.documents[0]);
  for (std::uint32_t a = 0; a < 4; ++a) CHECK(d.lca->bounded[a]);
}

TEST_CASE("correspondence suite passes on up to 2 atoms") {
  CorrespondenceReport rep = correspondence_suite(2);
  CHECK(rep.rows.size() == 27);
  for (const SuiteRow& row : rep.rows) CHECK_MESSAGE(row.pass, row.name);
  CHECK(rep.find("unique_valid_structures"));
  CHECK(rep.find("kappa_definition"));
  CHECK(rep.find("SKAL~IKA"));
  CHECK(rep.find("SALC~IAC"));
  CHECK(rep.find("DLC_iff_MVDLC"));
  CHECK(correspondence_suite(1).all_pass());
}

TEST_CASE("the corrupted kappa transform is caught by the suite") {
  CorrespondenceReport rep =
      correspondence_suite(2, KappaMode::DropBoundedConjunct);
  CHECK(!rep.all_pass());
  const SuiteRow* kdef = rep.find("kappa_definition");
  REQUIRE(kdef);
  CHECK(!kdef->pass);
  CHECK(!kdef->witness.empty());
}

TEST_CASE("default label sequences") {
  CHECK(default_atom_labels(3) ==
        std::vector<std::string>({"p", "q", "r"}));
  CHECK(default_point_labels(2) == std::vector<std::string>({"x", "y"}));
}
