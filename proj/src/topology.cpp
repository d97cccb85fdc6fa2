#include "mereo/topology.hpp"

#include <algorithm>
#include <set>

namespace mereo {

int FiniteSpace::point_index(const std::string& label) const {
  auto it = std::find(points.begin(), points.end(), label);
  return it == points.end() ? -1 : static_cast<int>(it - points.begin());
}

namespace {

void validate_points(const std::vector<std::string>& points) {
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (p.empty()) fail(ErrorCode::UnknownPoint, "empty point label");
    if (!seen.insert(p).second)
      fail(ErrorCode::UnknownPoint, "duplicate point '" + p + "'");
  }
  if (points.size() > 20)
    fail(ErrorCode::CapacityExceeded, "too many points");
}

}  // namespace

FiniteSpace make_space_preorder(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  validate_points(points);
  FiniteSpace sp;
  sp.points = points;
  sp.min_open.assign(points.size(), 0);
  for (size_t i = 0; i < points.size(); ++i) sp.min_open[i] = 1u << i;
  for (const auto& [x, y] : pairs) {
    int xi = sp.point_index(x), yi = sp.point_index(y);
    if (xi < 0) fail(ErrorCode::UnknownPoint, "'" + x + "'");
    if (yi < 0) fail(ErrorCode::UnknownPoint, "'" + y + "'");
    sp.min_open[xi] |= 1u << yi;
  }
  // Transitive closure.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t x = 0; x < points.size(); ++x) {
      std::uint32_t acc = sp.min_open[x];
      for (size_t y = 0; y < points.size(); ++y)
        if (sp.min_open[x] & (1u << y)) acc |= sp.min_open[y];
      if (acc != sp.min_open[x]) {
        sp.min_open[x] = acc;
        changed = true;
      }
    }
  }
  return sp;
}

FiniteSpace make_space_opens(const std::vector<std::string>& points,
                             const std::vector<std::uint32_t>& opens) {
  validate_points(points);
  const std::uint32_t full = (1u << points.size()) - 1;
  std::set<std::uint32_t> fam(opens.begin(), opens.end());
  if (!fam.count(0))
    fail(ErrorCode::NotATopology, "the empty set is not open");
  if (!fam.count(full))
    fail(ErrorCode::NotATopology, "the whole space is not open");
  for (std::uint32_t u : fam)
    for (std::uint32_t v : fam) {
      if (!fam.count(u | v))
        fail(ErrorCode::NotATopology, "family not closed under union");
      if (!fam.count(u & v))
        fail(ErrorCode::NotATopology, "family not closed under intersection");
    }
  FiniteSpace sp;
  sp.points = points;
  sp.min_open.assign(points.size(), 0);
  for (size_t x = 0; x < points.size(); ++x) {
    std::uint32_t m = full;
    for (std::uint32_t u : fam)
      if (u & (1u << x)) m &= u;
    sp.min_open[x] = m;
  }
  return sp;
}

std::uint32_t closure(const FiniteSpace& space, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int x = 0; x < space.point_count(); ++x)
    if (space.min_open[x] & s) out |= 1u << x;
  return out;
}

std::uint32_t interior(const FiniteSpace& space, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int x = 0; x < space.point_count(); ++x)
    if ((space.min_open[x] & ~s) == 0 && (s & (1u << x))) out |= 1u << x;
  return out;
}

bool is_open(const FiniteSpace& space, std::uint32_t s) {
  for (int x = 0; x < space.point_count(); ++x)
    if ((s & (1u << x)) && (space.min_open[x] & ~s)) return false;
  return true;
}

std::vector<std::uint32_t> open_sets(const FiniteSpace& space) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = space.full_mask();
  for (std::uint32_t s = 0;; ++s) {
    if (is_open(space, s)) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

bool space_connected(const FiniteSpace& space) {
  const int n = space.point_count();
  if (n == 0) return true;
  // Connectivity of the symmetrized specialization preorder.
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((space.min_open[x] & (1u << y)) && comp[x] != comp[y]) {
          int lo = std::min(comp[x], comp[y]);
          comp[x] = comp[y] = lo;
          changed = true;
        }
  }
  for (int i = 1; i < n; ++i)
    if (comp[i] != comp[0]) return false;
  return true;
}

bool is_discrete(const FiniteSpace& space) {
  for (int x = 0; x < space.point_count(); ++x)
    if (space.min_open[x] != (1u << x)) return false;
  return true;
}

std::uint32_t RegularClosedAlgebra::set_of(std::uint32_t element_bits) const {
  std::uint32_t out = 0;
  for (size_t i = 0; i < atom_sets.size(); ++i)
    if (element_bits & (1u << i)) out |= atom_sets[i];
  return out;
}

std::uint32_t RegularClosedAlgebra::element_of(std::uint32_t point_set) const {
  std::uint32_t bits = 0;
  for (size_t i = 0; i < atom_sets.size(); ++i)
    if ((atom_sets[i] & ~point_set) == 0 && atom_sets[i] != 0)
      bits |= 1u << i;
  if (set_of(bits) != point_set)
    fail(ErrorCode::InternalMismatch,
         "point set is not a join of regular closed atoms");
  return bits;
}

RegularClosedAlgebra regular_closed_algebra(const FiniteSpace& space) {
  if (space.point_count() > kMaxRcPoints)
    fail(ErrorCode::CapacityExceeded,
         "regular closed algebra capped at " + std::to_string(kMaxRcPoints) +
             " points");
  RegularClosedAlgebra rca;
  rca.space = space;
  std::set<std::uint32_t> rc;
  for (std::uint32_t u : open_sets(space)) rc.insert(closure(space, u));
  rca.rc_sets.assign(rc.begin(), rc.end());
  for (std::uint32_t f : rca.rc_sets) {
    if (f == 0) continue;
    bool minimal = true;
    for (std::uint32_t g : rca.rc_sets)
      if (g != 0 && g != f && (g & ~f) == 0) {
        minimal = false;
        break;
      }
    if (minimal) rca.atom_sets.push_back(f);
  }
  std::vector<std::string> labels;
  for (size_t i = 0; i < rca.atom_sets.size(); ++i)
    labels.push_back("F" + std::to_string(i + 1));
  rca.algebra = FiniteBooleanAlgebra::make(labels);
  if ((std::uint32_t(1) << rca.atom_sets.size()) != rca.rc_sets.size())
    fail(ErrorCode::InternalMismatch, "RC family is not a power of two");
  // Cross-check the abstract Boolean structure against the set formulas.
  const std::uint32_t N = rca.algebra->element_count();
  const std::uint32_t full = space.full_mask();
  for (std::uint32_t a = 0; a < N; ++a) {
    std::uint32_t fa = rca.set_of(a);
    if (!rc.count(fa) || rca.element_of(fa) != a)
      fail(ErrorCode::InternalMismatch, "embedding is not bijective");
    if (rca.element_of(closure(space, full & ~fa)) !=
        (~a & rca.algebra->top_bits()))
      fail(ErrorCode::InternalMismatch, "complement formula mismatch");
    for (std::uint32_t b = 0; b < N; ++b) {
      std::uint32_t fb = rca.set_of(b);
      if (rca.element_of(fa | fb) != (a | b))
        fail(ErrorCode::InternalMismatch, "join formula mismatch");
      if (rca.element_of(closure(space, interior(space, fa & fb))) != (a & b))
        fail(ErrorCode::InternalMismatch, "meet formula mismatch");
    }
  }
  return rca;
}

ContactStructure standard_contact(const RegularClosedAlgebra& rca) {
  BinaryRelation rel(rca.algebra, BinaryRelation::Flavor::Contact);
  const std::uint32_t N = rca.algebra->element_count();
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (rca.set_of(a) & rca.set_of(b)) rel.set(a, b);
  return ContactStructure(rca.algebra, std::move(rel));
}

StandardLca standard_lca(const FiniteSpace& space) {
  RegularClosedAlgebra rca = regular_closed_algebra(space);
  ContactStructure cs = standard_contact(rca);
  // Every regular closed subset of a finite space is compact.
  std::vector<bool> bounded(rca.algebra->element_count(), true);
  LocalContactStructure lca(rca.algebra, std::move(cs.contact),
                            std::move(bounded));
  return StandardLca{std::move(rca), std::move(lca), !is_discrete(space)};
}

MvdStructure standard_mvd(const FiniteSpace& space) {
  StandardLca sl = standard_lca(space);
  MvdStructure via_kappa = kappa(sl.lca);
  if (is_discrete(space)) {
    BinaryRelation direct(sl.rca.algebra, BinaryRelation::Flavor::WellInside);
    const std::uint32_t N = sl.rca.algebra->element_count();
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b)
        if ((sl.rca.set_of(a) & ~interior(space, sl.rca.set_of(b))) == 0)
          direct.set(a, b);
    if (!direct.same_pairs(via_kappa.wellinside))
      fail(ErrorCode::InternalMismatch,
           "standard MVD relation disagrees with the kappa image");
  }
  return via_kappa;
}

namespace {

std::uint32_t image_mask(const SpaceMap& f, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int x = 0; x < f.source.point_count(); ++x)
    if (s & (1u << x)) out |= 1u << f.point_map[x];
  return out;
}

std::uint32_t preimage_mask(const SpaceMap& f, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int x = 0; x < f.source.point_count(); ++x)
    if (s & (1u << f.point_map[x])) out |= 1u << x;
  return out;
}

}  // namespace

MapProperties map_properties(const SpaceMap& f) {
  for (int x = 0; x < f.source.point_count(); ++x)
    if (f.point_map[x] < 0 || f.point_map[x] >= f.target.point_count())
      fail(ErrorCode::UnknownPoint, "map image out of range");
  MapProperties p;
  const auto src_opens = open_sets(f.source);
  const auto dst_opens = open_sets(f.target);
  p.continuous = true;
  for (std::uint32_t v : dst_opens)
    if (!is_open(f.source, preimage_mask(f, v))) {
      p.continuous = false;
      break;
    }
  bool images_open = true, images_closed = true;
  const std::uint32_t src_full = f.source.full_mask();
  for (std::uint32_t u : src_opens) {
    if (!is_open(f.target, image_mask(f, u))) images_open = false;
    std::uint32_t closed_set = src_full & ~u;
    std::uint32_t img = image_mask(f, closed_set);
    if (closure(f.target, img) != img) images_closed = false;
  }
  // Open and closed maps are assumed continuous.
  p.open = p.continuous && images_open;
  p.closed = p.continuous && images_closed;
  p.perfect = p.closed;  // finite point inverses are compact
  p.quasi_open = p.continuous;
  p.skeletal = true;
  for (std::uint32_t u : src_opens) {
    if (u == 0) continue;
    std::uint32_t img = image_mask(f, u);
    if (interior(f.target, img) == 0) p.quasi_open = false;
    if (interior(f.target, closure(f.target, img)) == 0) p.skeletal = false;
  }
  return p;
}

}  // namespace mereo
