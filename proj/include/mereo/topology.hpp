#ifndef MEREO_TOPOLOGY_HPP
#define MEREO_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "mereo/equivalence.hpp"
#include "mereo/structures.hpp"

namespace mereo {

/// A finite topological space encoded by its specialization preorder:
/// min_open(x) is the intersection of all open sets containing x.
/// Point sets are bit masks over the point list.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<std::uint32_t> min_open;  // one mask per point

  int point_count() const { return static_cast<int>(points.size()); }
  std::uint32_t full_mask() const { return (1u << points.size()) - 1; }
  int point_index(const std::string& label) const;

  bool operator==(const FiniteSpace& other) const {
    return points == other.points && min_open == other.min_open;
  }
};

/// From preorder pairs [x, y] meaning y is in min_open(x); the reflexive
/// transitive closure is taken.
FiniteSpace make_space_preorder(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::string>>& pairs);

/// From an explicit open-set family; must contain the empty set and the whole
/// space and be closed under union and intersection.
FiniteSpace make_space_opens(const std::vector<std::string>& points,
                             const std::vector<std::uint32_t>& opens);

std::uint32_t closure(const FiniteSpace& space, std::uint32_t s);
std::uint32_t interior(const FiniteSpace& space, std::uint32_t s);
bool is_open(const FiniteSpace& space, std::uint32_t s);
std::vector<std::uint32_t> open_sets(const FiniteSpace& space);
bool space_connected(const FiniteSpace& space);
bool is_discrete(const FiniteSpace& space);

/// RC(X) with the set-level operations 0 = empty, 1 = X, F* = cl(X - F),
/// F v G = F u G, F ^ G = cl(int(F n G)), realized as an abstract finite
/// Boolean algebra whose atoms are the minimal nonzero regular closed sets.
struct RegularClosedAlgebra {
  FiniteSpace space;
  std::vector<std::uint32_t> rc_sets;   // all regular closed sets, sorted
  std::vector<std::uint32_t> atom_sets; // minimal nonzero ones, in atom order
  AlgebraPtr algebra;                   // atom labels F1..Fk

  std::uint32_t set_of(std::uint32_t element_bits) const;  // union of atoms
  std::uint32_t element_of(std::uint32_t point_set) const; // inverse lookup
};

constexpr int kMaxRcPoints = 12;

RegularClosedAlgebra regular_closed_algebra(const FiniteSpace& space);

/// F rho G iff F and G meet, transported to the abstract algebra.
ContactStructure standard_contact(const RegularClosedAlgebra& rca);

struct StandardLca {
  RegularClosedAlgebra rca;
  LocalContactStructure lca;
  bool non_lch = false;  // space is not discrete, so not locally compact
                         // Hausdorff; built informationally
};

/// (RC(X), rho_X, CR(X)); every regular closed set of a finite space is
/// compact, so the bounded set is everything.
StandardLca standard_lca(const FiniteSpace& space);

/// kappa of the standard LCA; for discrete spaces independently computed via
/// F << G iff F compact and F inside int(G), with agreement asserted.
MvdStructure standard_mvd(const FiniteSpace& space);

struct SpaceMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<int> point_map;  // target point index per source point
};

struct MapProperties {
  bool continuous = false;
  bool open = false;
  bool closed = false;
  bool perfect = false;     // closed with compact fibers; finitely, closed
  bool quasi_open = false;  // continuous, int(f(U)) nonempty for open U != 0
  bool skeletal = false;    // int(cl(f(U))) nonempty for open U != 0
};

MapProperties map_properties(const SpaceMap& f);

}  // namespace mereo

#endif
