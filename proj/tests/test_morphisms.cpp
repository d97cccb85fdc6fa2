#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mereo/equivalence.hpp"
#include "mereo/morphisms.hpp"

using namespace mereo;

namespace {

AlgebraPtr two() { return FiniteBooleanAlgebra::make({"a1", "a2"}); }
AlgebraPtr three() { return FiniteBooleanAlgebra::make({"b1", "b2", "b3"}); }
AlgebraPtr pq() { return FiniteBooleanAlgebra::make({"p", "q"}); }

LocalContactStructure overlap_all(const AlgebraPtr& alg) {
  return LocalContactStructure(alg, contact_from_atom_graph(alg, {}),
                               std::vector<bool>(alg->element_count(), true));
}

MvdStructure leq_mvd(const AlgebraPtr& alg) {
  BinaryRelation rel(alg, BinaryRelation::Flavor::WellInside);
  for (std::uint32_t a = 0; a < alg->element_count(); ++a)
    for (std::uint32_t b = 0; b < alg->element_count(); ++b)
      if ((a & ~b) == 0) rel.set(a, b);
  return MvdStructure(alg, rel);
}

}  // namespace

TEST_CASE("identity homomorphism satisfies every local-contact-side axiom") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  CompleteHomomorphism id = identity_hom(a);
  for (const auto& axiom : lside_axiom_ids()) {
    AxiomVerdict v = check_morphism_axiom(id, L, L, axiom);
    CHECK_MESSAGE(v.holds, axiom);
  }
}

TEST_CASE("identity homomorphism satisfies every MVD-side axiom") {
  AlgebraPtr a = pq();
  MvdStructure M = leq_mvd(a);
  CompleteHomomorphism id = identity_hom(a);
  for (const auto& axiom : sside_axiom_ids()) {
    AxiomVerdict v = check_morphism_axiom(id, M, M, axiom);
    CHECK_MESSAGE(v.holds, axiom);
  }
}

TEST_CASE("the collapsing homomorphism fails LS but satisfies LO") {
  // phi : A -> B with atom map b1, b2 |-> a1 and b3 |-> a2.
  CompleteHomomorphism phi(two(), three(), {0, 0, 1});
  LocalContactStructure src = overlap_all(phi.domain());
  LocalContactStructure dst = overlap_all(phi.codomain());

  AxiomVerdict ls = check_morphism_axiom(phi, src, dst, "LS");
  CHECK(!ls.holds);
  REQUIRE(ls.witness.size() == 2);
  CHECK(ls.witness[0].second == "b1");
  CHECK(ls.witness[1].second == "b2");

  CHECK(check_morphism_axiom(phi, src, dst, "LO").holds);
  CHECK(check_morphism_axiom(phi, src, dst, "L1").holds);
  CHECK(check_morphism_axiom(phi, src, dst, "L2").holds);
  CHECK(check_morphism_axiom(phi, src, dst, "L3").holds);
}

TEST_CASE("axiom ids are tied to the structure flavor") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  MvdStructure M = leq_mvd(a);
  CompleteHomomorphism id = identity_hom(a);
  CHECK_THROWS_AS(check_morphism_axiom(id, L, L, "S1"), Error);
  CHECK_THROWS_AS(check_morphism_axiom(id, M, M, "L1"), Error);
  CHECK_THROWS_AS(check_morphism_axiom(id, M, M, "bogus"), Error);
  LocalContactStructure other = overlap_all(three());
  CHECK_THROWS_AS(check_morphism_axiom(id, L, other, "L1"), Error);
}

TEST_CASE("identity table satisfies DLC1-DLC5 and MVDLC1-MVDLC5") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  MeetFunctionTable id = identity_table(a);
  CHECK(check_function_axioms(id, L, L).all_hold());
  MvdStructure M = leq_mvd(a);
  CHECK(check_function_axioms(id, M, M).all_hold());
}

TEST_CASE("constant-0 table: DLC1, DLC2, DLC5 hold; DLC3 and DLC4 fail") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  MeetFunctionTable zero(a, a, std::vector<std::uint32_t>(4, 0));
  AxiomReport rep = check_function_axioms(zero, L, L);
  CHECK(rep.holds("DLC1"));
  CHECK(rep.holds("DLC2"));
  CHECK(rep.holds("DLC5"));

  // DLC3's hypothesis admits a = 0 (bounded and well inside everything), but
  // the conclusion then demands 1 well inside 0, which no contact allows.
  const AxiomVerdict* dlc3 = rep.find("DLC3");
  REQUIRE(dlc3);
  CHECK(!dlc3->holds);
  REQUIRE(!dlc3->witness.empty());
  CHECK(dlc3->witness[0].second == "0");

  const AxiomVerdict* dlc4 = rep.find("DLC4");
  REQUIRE(dlc4);
  CHECK(!dlc4->holds);
  REQUIRE(dlc4->witness.size() == 1);
  CHECK(dlc4->witness[0].second == "p");  // no a with p <= psi(a) = 0

  MvdStructure M = leq_mvd(a);
  AxiomReport mrep = check_function_axioms(zero, M, M);
  CHECK(mrep.holds("MVDLC1"));
  CHECK(mrep.holds("MVDLC2"));
  CHECK(mrep.holds("MVDLC5"));
  CHECK(!mrep.holds("MVDLC3"));
  CHECK(!mrep.holds("MVDLC4"));
}

TEST_CASE("a table that breaks meet preservation fails DLC2 with witness (p,q)") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  MeetFunctionTable bad(a, a, {0, 1, 1, 3});  // psi(p&q)=0 but psi(p)&psi(q)=p
  AxiomReport rep = check_function_axioms(bad, L, L, {"DLC2"});
  const AxiomVerdict* dlc2 = rep.find("DLC2");
  REQUIRE(dlc2);
  CHECK(!dlc2->holds);
  REQUIRE(dlc2->witness.size() == 2);
  CHECK(dlc2->witness[0].second == "p");
  CHECK(dlc2->witness[1].second == "q");
}

TEST_CASE("table construction validates sizes and ranges") {
  AlgebraPtr a = pq();
  CHECK_THROWS_AS(MeetFunctionTable(a, a, {0, 1}), Error);
  CHECK_THROWS_AS(MeetFunctionTable(a, a, {0, 1, 2, 9}), Error);
}

TEST_CASE("composition: identity is neutral and constant-0 absorbs") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  MvdStructure M = kappa(L);
  MeetFunctionTable id = identity_table(a);
  MeetFunctionTable zero(a, a, std::vector<std::uint32_t>(4, 0));

  // For (overlap, all bounded), {b bounded, b well inside a} = {b <= a}, so
  // the composite of identities is the identity again.
  CHECK(compose_dhlc(id, id, L) == id);
  CHECK(compose_mvdhlc(id, id, M) == id);
  CHECK(compose_dhlc(zero, id, L) == zero);
  CHECK(compose_dhlc(id, zero, L) == zero);
  CHECK(compose_mvdhlc(zero, id, M) == zero);

  // The two composition styles agree when the side conditions coincide.
  CHECK(compose_dhlc(id, zero, L) == compose_mvdhlc(id, zero, M));

  AlgebraPtr b = three();
  MeetFunctionTable idb = identity_table(b);
  CHECK_THROWS_AS(compose_dhlc(idb, id, L), Error);
  CHECK_THROWS_AS(compose_dhlc(id, idb, L), Error);
}

TEST_CASE("composition of table homomorphisms stays a DHLC morphism") {
  CompleteHomomorphism phi(two(), three(), {0, 0, 1});
  LocalContactStructure src = overlap_all(phi.domain());
  LocalContactStructure dst = overlap_all(phi.codomain());
  MeetFunctionTable t = table_of_hom(phi);
  REQUIRE(check_function_axioms(t, src, dst).all_hold());
  MeetFunctionTable back(phi.codomain(), phi.domain(),
                         [&] {
                           std::vector<std::uint32_t> v;
                           for (std::uint32_t b = 0;
                                b < phi.codomain()->element_count(); ++b)
                             v.push_back(phi.adjoint_bits(b));
                           return v;
                         }());
  MeetFunctionTable comp = compose_dhlc(back, t, src);
  CHECK(check_function_axioms(comp, src, src).all_hold());
}

TEST_CASE("classification of the identity morphism") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  CompleteHomomorphism id = identity_hom(a);
  Classification c = classify(id, L, L);
  CHECK(c.injective);
  CHECK(c.surjective);
  CHECK(!c.src_connected);  // overlap on two atoms is disconnected
  for (const char* cat : {"SKAL", "SAL", "OAL", "OPAL", "SSKAL", "ISKAL",
                          "ISAL", "SSAL", "IOPAL", "SOPAL", "IOAL", "SOAL"})
    CHECK_MESSAGE(c.member(cat), cat);
  CHECK(!c.member("SALC"));
  CHECK(!c.member("OPALC"));

  MvdStructure M = kappa(L);
  Classification s = classify(id, M, M);
  for (const char* cat : {"IKA", "IA", "IOA", "IPA", "ISSKAL", "IISKAL",
                          "IIA", "SIA", "IIPA", "SIPA", "IIOAL", "ISOAL"})
    CHECK_MESSAGE(s.member(cat), cat);
  CHECK(!s.member("IAC"));
  CHECK(!s.member("IPAC"));
}

TEST_CASE("category membership agrees across the kappa transport") {
  CompleteHomomorphism phi(two(), three(), {0, 0, 1});
  LocalContactStructure src = overlap_all(phi.domain());
  LocalContactStructure dst = overlap_all(phi.codomain());
  Classification lc = classify(phi, src, dst);
  Classification sc = classify(phi, kappa(src), kappa(dst));
  REQUIRE(category_pairs().size() == 14);
  for (const auto& [lname, sname] : category_pairs())
    CHECK_MESSAGE(lc.member(lname) == sc.member(sname), lname, "~", sname);
  CHECK(lc.member("SAL"));
  CHECK(!lc.member("SSAL"));  // LS fails for this map
}

TEST_CASE("table classification reports DHLC/MVDHLC membership") {
  AlgebraPtr a = pq();
  LocalContactStructure L = overlap_all(a);
  MeetFunctionTable id = identity_table(a);
  MeetFunctionTable zero(a, a, std::vector<std::uint32_t>(4, 0));
  CHECK(classify(id, L, L).member("DHLC"));
  CHECK(!classify(zero, L, L).member("DHLC"));
  MvdStructure M = kappa(L);
  CHECK(classify(id, M, M).member("MVDHLC"));
  CHECK(!classify(zero, M, M).member("MVDHLC"));
}
