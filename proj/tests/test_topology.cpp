#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mereo/topology.hpp"

using namespace mereo;

namespace {

/// Three points x, y, z with min_open(y) = {x,y,z}: two open points and one
/// generic point whose every neighborhood is the whole space.
FiniteSpace wedge() {
  return make_space_preorder({"x", "y", "z"}, {{"y", "x"}, {"y", "z"}});
}

FiniteSpace discrete2() { return make_space_preorder({"x", "y"}, {}); }

FiniteSpace sierpinski() {
  // a is open, b is closed: min_open(b) = {a, b}.
  return make_space_preorder({"a", "b"}, {{"b", "a"}});
}

std::uint32_t mask_of(const FiniteSpace& s,
                      const std::vector<std::string>& pts) {
  std::uint32_t m = 0;
  for (const auto& p : pts) m |= 1u << s.point_index(p);
  return m;
}

}  // namespace

TEST_CASE("preorder construction takes the reflexive transitive closure") {
  FiniteSpace s = wedge();
  CHECK(s.min_open[s.point_index("x")] == mask_of(s, {"x"}));
  CHECK(s.min_open[s.point_index("y")] == mask_of(s, {"x", "y", "z"}));
  CHECK(s.min_open[s.point_index("z")] == mask_of(s, {"z"}));

  FiniteSpace chain =
      make_space_preorder({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(chain.min_open[0] == 0b111);  // transitivity pulls z into min_open(x)

  CHECK_THROWS_AS(make_space_preorder({"x"}, {{"x", "w"}}), Error);
}

TEST_CASE("open-set construction validates and matches the preorder form") {
  FiniteSpace d = make_space_opens({"x", "y"}, {0b00, 0b01, 0b10, 0b11});
  CHECK(d == discrete2());
  CHECK(is_discrete(d));

  FiniteSpace s = make_space_opens({"a", "b"}, {0b00, 0b01, 0b11});
  CHECK(s == sierpinski());
  CHECK(!is_discrete(s));

  // {x} and {y} open but their union missing.
  CHECK_THROWS_AS(make_space_opens({"x", "y"}, {0b00, 0b01, 0b10}), Error);
  // Missing the empty set.
  CHECK_THROWS_AS(make_space_opens({"x", "y"}, {0b01, 0b11}), Error);
  // Missing the whole space.
  CHECK_THROWS_AS(make_space_opens({"x", "y"}, {0b00, 0b01}), Error);
}

TEST_CASE("closure and interior on the wedge space") {
  FiniteSpace s = wedge();
  CHECK(closure(s, mask_of(s, {"x"})) == mask_of(s, {"x", "y"}));
  CHECK(interior(s, mask_of(s, {"y"})) == 0);
  CHECK(closure(s, 0) == 0);
  CHECK(interior(s, s.full_mask()) == s.full_mask());
  CHECK(is_open(s, mask_of(s, {"x"})));
  CHECK(!is_open(s, mask_of(s, {"y"})));
  CHECK(open_sets(discrete2()).size() == 4);
}

TEST_CASE("connectedness of spaces") {
  CHECK(space_connected(wedge()));
  CHECK(!space_connected(discrete2()));
  CHECK(space_connected(make_space_preorder({"x"}, {})));
  CHECK(space_connected(sierpinski()));
}

TEST_CASE("regular closed algebra of the wedge space") {
  FiniteSpace s = wedge();
  RegularClosedAlgebra rca = regular_closed_algebra(s);
  std::vector<std::uint32_t> expected = {0, mask_of(s, {"x", "y"}),
                                         mask_of(s, {"y", "z"}),
                                         s.full_mask()};
  std::sort(expected.begin(), expected.end());
  CHECK(rca.rc_sets == expected);
  REQUIRE(rca.atom_sets.size() == 2);
  CHECK(rca.algebra->atom_count() == 2);
  // Embedding round trip.
  for (std::uint32_t e = 0; e < rca.algebra->element_count(); ++e)
    CHECK(rca.element_of(rca.set_of(e)) == e);
}

TEST_CASE("regular closed algebra of small standard spaces") {
  RegularClosedAlgebra d = regular_closed_algebra(discrete2());
  CHECK(d.rc_sets.size() == 4);  // every subset is clopen
  CHECK(d.algebra->atom_count() == 2);

  RegularClosedAlgebra one =
      regular_closed_algebra(make_space_preorder({"x"}, {}));
  CHECK(one.algebra->atom_count() == 1);

  std::vector<std::string> big;
  for (int i = 0; i < 13; ++i) big.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(regular_closed_algebra(make_space_preorder(big, {})), Error);
}

TEST_CASE("standard contact on the wedge space") {
  FiniteSpace s = wedge();
  RegularClosedAlgebra rca = regular_closed_algebra(s);
  ContactStructure c = standard_contact(rca);

  const std::uint32_t f1 = rca.element_of(mask_of(s, {"x", "y"}));
  const std::uint32_t f2 = rca.element_of(mask_of(s, {"y", "z"}));
  CHECK(c.contact.contains(f1, f2));  // they share y
  CHECK(check_contact_axioms(c.contact, {"C1", "C2", "C3", "C4"}).all_hold());

  BinaryRelation wi = wellinside_from_contact(c.contact);
  const std::uint32_t topb = rca.algebra->top_bits();
  CHECK(wi.contains(f1, topb));   // F1 << X
  CHECK(!wi.contains(f1, f1));    // int(F1) = {x} does not contain F1
  // The derived << is exactly set containment in the interior.
  for (std::uint32_t a = 0; a < rca.algebra->element_count(); ++a)
    for (std::uint32_t b = 0; b < rca.algebra->element_count(); ++b)
      CHECK(wi.contains(a, b) ==
            ((rca.set_of(a) & ~interior(s, rca.set_of(b))) == 0));

  ContactStructure dc = standard_contact(regular_closed_algebra(discrete2()));
  CHECK(dc.contact.same_pairs(contact_from_atom_graph(dc.algebra, {})));
}

TEST_CASE("standard LCA and MVD structures") {
  StandardLca w = standard_lca(wedge());
  CHECK(w.non_lch);  // connected 3-point space is not Hausdorff
  for (std::uint32_t a = 0; a < w.rca.algebra->element_count(); ++a)
    CHECK(w.lca.bounded[a]);  // finite compactness: everything bounded
  CHECK(check_connected(ContactStructure(w.lca.algebra, w.lca.contact))
            .all_hold());

  MvdStructure wm = standard_mvd(wedge());
  const std::uint32_t f1 = w.rca.element_of(0b011);  // {x, y}
  CHECK(wm.wellinside.contains(f1, w.rca.algebra->top_bits()));
  CHECK(!wm.wellinside.contains(f1, f1));

  StandardLca d = standard_lca(discrete2());
  CHECK(!d.non_lch);
  MvdStructure dm = standard_mvd(discrete2());
  // Discrete space: << is inclusion.
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      CHECK(dm.wellinside.contains(a, b) == ((a & ~b) == 0));
  CHECK(mvd_valid(dm));
}

TEST_CASE("map property flags") {
  FiniteSpace d = discrete2(), s = sierpinski();

  SpaceMap ident{d, d, {0, 1}};
  MapProperties pi = map_properties(ident);
  CHECK(pi.continuous);
  CHECK(pi.open);
  CHECK(pi.closed);
  CHECK(pi.perfect);
  CHECK(pi.quasi_open);
  CHECK(pi.skeletal);

  // Everything onto the closed point b of the Sierpinski space.
  SpaceMap to_closed{d, s, {1, 1}};
  MapProperties pc = map_properties(to_closed);
  CHECK(pc.continuous);
  CHECK(!pc.quasi_open);  // int({b}) is empty
  CHECK(!pc.skeletal);    // cl({b}) = {b} and int({b}) is empty

  // Everything onto the open point a: image interiors are {a}, nonempty.
  SpaceMap to_open{d, s, {0, 0}};
  MapProperties po = map_properties(to_open);
  CHECK(po.continuous);
  CHECK(po.quasi_open);
  CHECK(po.skeletal);
  CHECK(!po.closed);  // f(X) = {a} is not closed

  // A discontinuous map: identity points from indiscrete to discrete.
  FiniteSpace indiscrete =
      make_space_preorder({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  SpaceMap disc{indiscrete, d, {0, 1}};
  MapProperties pd = map_properties(disc);
  CHECK(!pd.continuous);
  CHECK(!pd.open);    // open/closed/perfect require continuity here
  CHECK(!pd.perfect);
  CHECK(pd.skeletal); // skeletal needs no continuity and images have interior
}

TEST_CASE("quasi-open implies skeletal across small map samples") {
  FiniteSpace spaces[] = {discrete2(), sierpinski(), wedge()};
  for (const FiniteSpace& src : spaces)
    for (const FiniteSpace& dst : spaces) {
      const int n = src.point_count(), k = dst.point_count();
      std::vector<int> pm(n, 0);
      while (true) {
        MapProperties p = map_properties(SpaceMap{src, dst, pm});
        if (p.quasi_open) CHECK(p.skeletal);
        int i = 0;
        for (; i < n; ++i) {
          if (++pm[i] < k) break;
          pm[i] = 0;
        }
        if (i == n) break;
      }
    }
}
