#include "mereo/lab.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mereo {

namespace {

constexpr std::uint64_t kDefaultBudget = 10000;

std::vector<std::pair<int, int>> atom_edge_slots(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

BinaryRelation relation_from_mask(const AlgebraPtr& alg,
                                  BinaryRelation::Flavor flavor,
                                  std::uint64_t mask) {
  BinaryRelation rel(alg, flavor);
  const std::uint32_t N = alg->element_count();
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if ((mask >> (a * N + b)) & 1) rel.set(a, b);
  return rel;
}

std::vector<bool> down_set(const AlgebraPtr& alg, std::uint32_t generator) {
  std::vector<bool> out(alg->element_count(), false);
  for (std::uint32_t a = 0; a < alg->element_count(); ++a)
    if ((a & ~generator) == 0) out[a] = true;
  return out;
}

struct VisitStats {
  std::uint64_t candidates = 0;
  bool sampled = false;
  bool stopped = false;
};

using Visitor = std::function<bool(const Document&)>;

bool emit(VisitStats& st, const Visitor& visit, const Document& d) {
  ++st.candidates;
  if (!visit(d)) {
    st.stopped = true;
    return false;
  }
  return true;
}

void visit_lca_universe(int n, VisitStats& st, const Visitor& visit) {
  AlgebraPtr alg = FiniteBooleanAlgebra::make(default_atom_labels(n));
  const auto slots = atom_edge_slots(n);
  for (std::uint32_t gmask = 0; gmask < (1u << slots.size()); ++gmask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t e = 0; e < slots.size(); ++e)
      if ((gmask >> e) & 1) edges.push_back(slots[e]);
    BinaryRelation rho = contact_from_atom_graph_indices(alg, edges);
    for (std::uint32_t u = 0; u < alg->element_count(); ++u) {
      if (!emit(st, visit,
                Document::of(LocalContactStructure(alg, rho,
                                                   down_set(alg, u)))))
        return;
    }
  }
}

MeetFunctionTable table_from_coatom_images(const AlgebraPtr& dom,
                                           const AlgebraPtr& cod,
                                           const std::vector<std::uint32_t>& imgs) {
  std::vector<std::uint32_t> table(dom->element_count(), 0);
  for (std::uint32_t a = 0; a < dom->element_count(); ++a) {
    std::uint32_t acc = cod->top_bits();
    for (int i = 0; i < dom->atom_count(); ++i)
      if (!((a >> i) & 1)) acc &= imgs[i];  // a below the i-th coatom
    table[a] = acc;
  }
  return MeetFunctionTable(dom, cod, std::move(table));
}

VisitStats for_each_candidate(const EnumerationSpec& spec,
                              const Visitor& visit) {
  VisitStats st;
  const int n = spec.n;
  const std::uint64_t budget = spec.budget ? spec.budget : kDefaultBudget;
  if (spec.kind == "contact_graph") {
    if (n > 5) fail(ErrorCode::CapacityExceeded, "contact_graph caps at 5 atoms");
    AlgebraPtr alg = FiniteBooleanAlgebra::make(default_atom_labels(n));
    const auto slots = atom_edge_slots(n);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (size_t e = 0; e < slots.size(); ++e)
        if ((mask >> e) & 1) edges.push_back(slots[e]);
      if (!emit(st, visit,
                Document::of(ContactStructure(
                    alg, contact_from_atom_graph_indices(alg, edges)))))
        return st;
    }
    return st;
  }
  if (spec.kind == "contact_relation" || spec.kind == "wellinside_relation" ||
      (spec.kind == "mvd" && n <= 2)) {
    const auto flavor = spec.kind == "contact_relation"
                            ? BinaryRelation::Flavor::Contact
                            : BinaryRelation::Flavor::WellInside;
    AlgebraPtr alg = FiniteBooleanAlgebra::make(default_atom_labels(n));
    const std::uint32_t N = alg->element_count();
    auto wrap = [&](const BinaryRelation& rel) {
      return flavor == BinaryRelation::Flavor::Contact
                 ? Document::of(ContactStructure(alg, rel))
                 : Document::of(MvdStructure(alg, rel));
    };
    if (n <= 2) {
      const std::uint64_t count = std::uint64_t(1) << (N * N);
      for (std::uint64_t mask = 0; mask < count; ++mask)
        if (!emit(st, visit, wrap(relation_from_mask(alg, flavor, mask))))
          return st;
      return st;
    }
    if (n > 3)
      fail(ErrorCode::CapacityExceeded, "relation sampling caps at 3 atoms");
    st.sampled = true;
    std::mt19937_64 rng(spec.seed);
    for (std::uint64_t i = 0; i < budget; ++i)
      if (!emit(st, visit, wrap(relation_from_mask(alg, flavor, rng()))))
        return st;
    return st;
  }
  if (spec.kind == "ideal") {
    if (n > 4) fail(ErrorCode::CapacityExceeded, "ideal kind caps at 4 atoms");
    AlgebraPtr alg = FiniteBooleanAlgebra::make(default_atom_labels(n));
    BinaryRelation overlap = contact_from_atom_graph_indices(alg, {});
    for (std::uint32_t u = 0; u < alg->element_count(); ++u)
      if (!emit(st, visit,
                Document::of(LocalContactStructure(alg, overlap,
                                                   down_set(alg, u)))))
        return st;
    return st;
  }
  if (spec.kind == "lca") {
    if (n > 4) fail(ErrorCode::CapacityExceeded, "lca kind caps at 4 atoms");
    visit_lca_universe(n, st, visit);
    return st;
  }
  if (spec.kind == "mvd") {  // n == 3 here; n <= 2 handled above
    if (n > 3) fail(ErrorCode::CapacityExceeded, "mvd kind caps at 3 atoms");
    VisitStats inner;
    visit_lca_universe(n, inner, [&](const Document& d) {
      return emit(st, visit, Document::of(kappa(*d.lca)));
    });
    st.stopped = inner.stopped;
    return st;
  }
  if (spec.kind == "preorder_space") {
    if (n > 4) fail(ErrorCode::CapacityExceeded, "preorder_space caps at 4 points");
    const auto points = default_point_labels(n);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (size_t e = 0; e < slots.size(); ++e)
        if ((mask >> e) & 1)
          pairs.emplace_back(points[slots[e].first], points[slots[e].second]);
      if (!emit(st, visit, Document::of(make_space_preorder(points, pairs))))
        return st;
    }
    return st;
  }
  const int k = spec.codomain_n >= 0 ? spec.codomain_n : n;
  if (spec.kind == "hom") {
    if (n > 3 || k > 3)
      fail(ErrorCode::CapacityExceeded, "hom kind caps at 3 atoms");
    AlgebraPtr dom = FiniteBooleanAlgebra::make(default_atom_labels(n));
    AlgebraPtr cod = FiniteBooleanAlgebra::make(default_atom_labels(k));
    if (n == 0 && k > 0) return st;  // no atom maps into an empty atom set
    std::vector<int> am(k, 0);
    while (true) {
      if (!emit(st, visit, Document::of(CompleteHomomorphism(dom, cod, am))))
        return st;
      int i = 0;
      for (; i < k; ++i) {
        if (++am[i] < n) break;
        am[i] = 0;
      }
      if (i == k) return st;
    }
  }
  if (spec.kind == "meet_table") {
    if (n > 3 || k > 3)
      fail(ErrorCode::CapacityExceeded, "meet_table kind caps at 3 atoms");
    AlgebraPtr dom = FiniteBooleanAlgebra::make(default_atom_labels(n));
    AlgebraPtr cod = FiniteBooleanAlgebra::make(default_atom_labels(k));
    const std::uint32_t Nk = cod->element_count();
    if (spec.budget) {
      st.sampled = true;
      std::mt19937_64 rng(spec.seed);
      for (std::uint64_t t = 0; t < budget; ++t) {
        std::vector<std::uint32_t> imgs(n);
        for (int i = 0; i < n; ++i) imgs[i] = rng() % Nk;
        if (!emit(st, visit,
                  Document::of(table_from_coatom_images(dom, cod, imgs))))
          return st;
      }
      return st;
    }
    std::vector<std::uint32_t> imgs(n, 0);
    while (true) {
      if (!emit(st, visit,
                Document::of(table_from_coatom_images(dom, cod, imgs))))
        return st;
      int i = 0;
      for (; i < n; ++i) {
        if (++imgs[i] < Nk) break;
        imgs[i] = 0;
      }
      if (i == n) return st;
    }
  }
  fail(ErrorCode::ParseError, "unknown enumeration kind '" + spec.kind + "'");
}

const std::vector<std::string>& contact_ids() {
  static const std::vector<std::string> ids = {"C1", "C2", "C3",
                                               "C4", "C5", "C6", "CON"};
  return ids;
}

const std::vector<std::string>& wellinside_ids() {
  static const std::vector<std::string> ids = {
      "ll1", "ll2", "ll3", "ll4", "ll5", "ll6", "ll7", "ll2p", "ll4s", "MVD"};
  return ids;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> expand_filter(const std::vector<std::string>& ids,
                                       Document::Kind kind) {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (id != "valid") {
      out.push_back(id);
      continue;
    }
    switch (kind) {
      case Document::Kind::Contact:
        out.insert(out.end(), {"C1", "C2", "C3", "C4"});
        break;
      case Document::Kind::Lca:
        out.insert(out.end(), {"C1", "C2", "C3", "C4", "BB1", "BB2", "BB3",
                               "BC1", "BC2", "BC3"});
        break;
      case Document::Kind::Mvd:
        out.insert(out.end(), {"ll1", "ll2", "ll3", "ll4", "ll5", "ll6",
                               "ll4s", "MVD"});
        break;
      default:
        fail(ErrorCode::KindMismatch, "'valid' has no meaning for this kind");
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> default_atom_labels(int n) {
  static const char* names[] = {"p", "q", "r", "s", "t"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(i < 5 ? names[i] : "a" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> default_point_labels(int n) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(i < 4 ? names[i] : "x" + std::to_string(i + 1));
  return out;
}

AxiomReport eval_axioms(const Document& doc,
                        const std::vector<std::string>& ids) {
  AxiomReport out;
  for (const auto& id : ids) {
    AxiomVerdict v;
    switch (doc.kind) {
      case Document::Kind::Contact: {
        if (!contains(contact_ids(), id))
          fail(ErrorCode::KindMismatch,
               "axiom '" + id + "' does not apply to a contact document");
        v = check_contact_axioms(doc.contact->contact, {id}).entries.at(0);
        break;
      }
      case Document::Kind::Mvd: {
        if (id == "CONA") {
          v = check_connected(*doc.mvd).entries.at(0);
        } else {
          if (!contains(wellinside_ids(), id))
            fail(ErrorCode::KindMismatch,
                 "axiom '" + id + "' does not apply to an mvd document");
          v = check_wellinside_axioms(doc.mvd->wellinside, {id}).entries.at(0);
        }
        break;
      }
      case Document::Kind::Lca: {
        if (id == "C5" || id == "C6" || id == "CON") {
          v = check_contact_axioms(doc.lca->contact, {id}).entries.at(0);
        } else {
          AxiomReport rep = check_lca_axioms(*doc.lca);
          const AxiomVerdict* found = rep.find(id);
          if (!found)
            fail(ErrorCode::KindMismatch,
                 "axiom '" + id + "' does not apply to an lca document");
          v = *found;
        }
        break;
      }
      default:
        fail(ErrorCode::KindMismatch,
             "axiom checks apply to contact, lca, and mvd documents");
    }
    out.entries.push_back(std::move(v));
  }
  return out;
}

EnumerationResult enumerate_structures(const EnumerationSpec& spec) {
  EnumerationResult out;
  std::set<std::string> docs;
  VisitStats st = for_each_candidate(spec, [&](const Document& d) {
    std::vector<std::string> ids = expand_filter(spec.filter, d.kind);
    if (ids.empty() || eval_axioms(d, ids).all_hold())
      docs.insert(serialize_document(d));
    return true;
  });
  out.candidates = st.candidates;
  out.documents.assign(docs.begin(), docs.end());
  out.matched = out.documents.size();
  return out;
}

SearchOutcome search_implication(const std::vector<std::string>& hypothesis,
                                 const std::vector<std::string>& conclusion,
                                 const EnumerationSpec& spec) {
  SearchOutcome out;
  VisitStats st = for_each_candidate(spec, [&](const Document& d) {
    AxiomReport hyp = eval_axioms(d, expand_filter(hypothesis, d.kind));
    if (!hyp.all_hold()) return true;
    AxiomReport concl = eval_axioms(d, expand_filter(conclusion, d.kind));
    if (concl.all_hold()) return true;
    out.witness_document = serialize_document(d);
    out.witness_report = std::move(hyp);
    for (auto& e : concl.entries)
      out.witness_report.entries.push_back(std::move(e));
    return false;
  });
  out.candidates_tried = st.candidates;
  out.status = st.stopped ? "counterexample"
                          : (st.sampled ? "budget_reached" : "exhausted");
  return out;
}

// ---------------------------------------------------------------------------
// Correspondence suite
// ---------------------------------------------------------------------------

namespace {

MvdStructure kappa_mode(const LocalContactStructure& L, KappaMode mode) {
  if (mode == KappaMode::Standard) return kappa(L);
  // Mutation hook: forget that only bounded elements may sit well inside.
  return MvdStructure(L.algebra, wellinside_from_contact(L.contact));
}

struct RowBuilder {
  SuiteRow row;
  explicit RowBuilder(std::string name) { row.name = std::move(name); }
  void record_failure(Witness w) {
    if (!row.pass) return;  // keep the first witness
    row.pass = false;
    row.witness = std::move(w);
  }
};

std::string hom_desc(const CompleteHomomorphism& phi) {
  std::string out;
  for (int q = 0; q < phi.codomain()->atom_count(); ++q) {
    if (!out.empty()) out += ",";
    out += phi.codomain()->atom_labels()[q] + ":" +
           phi.domain()->atom_labels()[phi.atom_map()[q]];
  }
  return out.empty() ? "(empty)" : out;
}

std::string table_desc(const MeetFunctionTable& psi) {
  std::string out;
  for (std::uint32_t a = 0; a < psi.domain->element_count(); ++a) {
    if (!out.empty()) out += ";";
    out += element_expr({psi.domain, a}) + ">" +
           element_expr({psi.codomain, psi.table[a]});
  }
  return out;
}

std::vector<LocalContactStructure> valid_lcas(int n) {
  std::vector<LocalContactStructure> out;
  VisitStats st;
  visit_lca_universe(n, st, [&](const Document& d) {
    if (check_lca_axioms(*d.lca).all_hold()) out.push_back(*d.lca);
    return true;
  });
  return out;
}

std::vector<MvdStructure> valid_mvds(int n) {
  // kappa images of the lca universe cover every valid MVD structure (a valid
  // one recovers as kappa(tau(M)), and tau(M) lands in the universe); the
  // oracle tests cross-check this against the exhaustive run for n <= 2.
  std::vector<MvdStructure> out;
  VisitStats st;
  visit_lca_universe(n, st, [&](const Document& d) {
    MvdStructure m = kappa(*d.lca);
    if (check_mvd_axioms(m).all_hold()) {
      for (const auto& seen : out)
        if (seen == m) return true;
      out.push_back(m);
    }
    return true;
  });
  return out;
}

void all_homs(const AlgebraPtr& dom, const AlgebraPtr& cod,
              const std::function<void(const CompleteHomomorphism&)>& fn) {
  const int m = dom->atom_count(), k = cod->atom_count();
  if (m == 0 && k > 0) return;
  std::vector<int> am(k, 0);
  while (true) {
    fn(CompleteHomomorphism(dom, cod, am));
    int i = 0;
    for (; i < k; ++i) {
      if (++am[i] < m) break;
      am[i] = 0;
    }
    if (i == k) return;
  }
}

}  // namespace

CorrespondenceReport correspondence_suite(int n, KappaMode mode) {
  if (n > 3) fail(ErrorCode::CapacityExceeded, "correspondence suite caps at 3 atoms");
  CorrespondenceReport rep;

  std::vector<std::vector<LocalContactStructure>> lcas(n + 1);
  std::vector<std::vector<MvdStructure>> mvds(n + 1);
  for (int m = 1; m <= n; ++m) {
    lcas[m] = valid_lcas(m);
    mvds[m] = valid_mvds(m);
  }

  RowBuilder unique("unique_valid_structures");
  for (int m = 1; m <= n; ++m)
    if (lcas[m].size() != 1 || mvds[m].size() != 1)
      unique.record_failure(
          {{"atoms", std::to_string(m)},
           {"valid_lcas", std::to_string(lcas[m].size())},
           {"valid_mvds", std::to_string(mvds[m].size())}});

  // Definition conformance over raw pre-structures (bounded sets smaller than
  // the whole algebra included) -- the rows that catch the mutation hook.
  RowBuilder kdef("kappa_definition");
  RowBuilder tdef("tau_definition");
  for (int m = 1; m <= n; ++m) {
    VisitStats st;
    visit_lca_universe(m, st, [&](const Document& d) {
      const LocalContactStructure& L = *d.lca;
      const std::uint32_t N = L.algebra->element_count(), topb = N - 1;
      MvdStructure got = kappa_mode(L, mode);
      for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < N; ++b) {
          bool expected =
              L.bounded[a] && !L.contact.contains(a, ~b & topb);
          if (got.wellinside.contains(a, b) != expected) {
            kdef.record_failure({{"a", element_expr({L.algebra, a})},
                                 {"b", element_expr({L.algebra, b})},
                                 {"structure", serialize_document(d)}});
            return true;
          }
        }
      // tau over the kappa image, against the quantifier formulas inline.
      const BinaryRelation& W = got.wellinside;
      LocalContactStructure back = tau(got);
      for (std::uint32_t a = 0; a < N; ++a) {
        bool exp_bounded = W.contains(a, topb);
        if (back.bounded[a] != exp_bounded) {
          tdef.record_failure({{"a", element_expr({L.algebra, a})},
                               {"structure", serialize_document(d)}});
          return true;
        }
        for (std::uint32_t b = 0; b < N; ++b) {
          bool wi = true;  // a <<_m b* via the universal formula
          for (std::uint32_t c = 0; c < N && wi; ++c)
            if (W.contains(c, topb) &&
                !W.contains(c & a, (~c & topb) | (~b & topb)))
              wi = false;
          bool exp_contact = !wi;
          if (back.contact.contains(a, b) != exp_contact) {
            tdef.record_failure({{"a", element_expr({L.algebra, a})},
                                 {"b", element_expr({L.algebra, b})},
                                 {"structure", serialize_document(d)}});
            return true;
          }
        }
      }
      return true;
    });
  }

  RowBuilder rt_l("roundtrip_lca");
  RowBuilder k_valid("kappa_validity");
  for (int m = 1; m <= n; ++m)
    for (const auto& L : lcas[m]) {
      MvdStructure M = kappa_mode(L, mode);
      if (!check_mvd_axioms(M).all_hold())
        k_valid.record_failure({{"atoms", std::to_string(m)}});
      if (!(tau(M) == L)) rt_l.record_failure({{"atoms", std::to_string(m)}});
    }

  RowBuilder rt_m("roundtrip_mvd");
  RowBuilder t_valid("tau_validity");
  RowBuilder forms("rho_m_forms");
  for (int m = 1; m <= n; ++m)
    for (const auto& M : mvds[m]) {
      LocalContactStructure L = tau(M);
      if (!check_lca_axioms(L).all_hold())
        t_valid.record_failure({{"atoms", std::to_string(m)}});
      if (!(kappa_mode(L, mode) == M))
        rt_m.record_failure({{"atoms", std::to_string(m)}});
      FormsAgreement fa = rho_m_forms_agree(M);
      if (!fa.agree) forms.record_failure(fa.witness);
    }
  if (n >= 2) {  // the two forms are dual on arbitrary relations too
    AlgebraPtr alg = FiniteBooleanAlgebra::make(default_atom_labels(2));
    for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
      MvdStructure M(alg, relation_from_mask(
                              alg, BinaryRelation::Flavor::WellInside, mask));
      FormsAgreement fa = rho_m_forms_agree(M);
      if (!fa.agree) {
        fa.witness.emplace_back("relation_mask", std::to_string(mask));
        forms.record_failure(fa.witness);
        break;
      }
    }
  }

  // Hom-level rows.
  RowBuilder l1row("L1_iff_L1p");
  RowBuilder lsrow("LS_iff_LSp");
  RowBuilder lorow("LO_iff_LOalt");
  RowBuilder es1row("ES1_S2_implies_S1");
  std::vector<RowBuilder> pairrows;
  for (const auto& [lname, sname] : category_pairs())
    pairrows.emplace_back(lname + "~" + sname);

  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) {
      const LocalContactStructure& src = lcas[m][0];
      const LocalContactStructure& dst = lcas[k][0];
      MvdStructure msrc = kappa_mode(src, mode);
      MvdStructure mdst = kappa_mode(dst, mode);
      all_homs(src.algebra, dst.algebra, [&](const CompleteHomomorphism& phi) {
        auto bicond = [&](RowBuilder& row, const std::string& a,
                          const std::string& b) {
          bool ha = check_morphism_axiom(phi, src, dst, a).holds;
          bool hb = check_morphism_axiom(phi, src, dst, b).holds;
          if (ha != hb)
            row.record_failure({{"hom", hom_desc(phi)},
                                {a, ha ? "holds" : "fails"},
                                {b, hb ? "holds" : "fails"}});
        };
        bicond(l1row, "L1", "L1p");
        bicond(lsrow, "LS", "LSp");
        bicond(lorow, "LO", "LOalt");

        bool es1 = check_morphism_axiom(phi, msrc, mdst, "ES1").holds;
        bool s2 = check_morphism_axiom(phi, msrc, mdst, "S2").holds;
        bool s1 = check_morphism_axiom(phi, msrc, mdst, "S1").holds;
        if (es1 && s2 && !s1)
          es1row.record_failure({{"hom", hom_desc(phi)}});

        Classification cl = classify(phi, src, dst);
        Classification cs = classify(phi, msrc, mdst);
        const auto& pairs = category_pairs();
        for (size_t i = 0; i < pairs.size(); ++i)
          if (cl.member(pairs[i].first) != cs.member(pairs[i].second))
            pairrows[i].record_failure(
                {{"hom", hom_desc(phi)},
                 {"src_atoms", std::to_string(m)},
                 {"dst_atoms", std::to_string(k)},
                 {pairs[i].first,
                  cl.member(pairs[i].first) ? "member" : "non-member"},
                 {pairs[i].second,
                  cs.member(pairs[i].second) ? "member" : "non-member"}});
      });
    }

  // Table-level row: DLC1-5 iff MVDLC1-5 under the kappa transport.
  RowBuilder dlcrow("DLC_iff_MVDLC");
  auto check_table = [&](const MeetFunctionTable& psi,
                         const LocalContactStructure& src,
                         const LocalContactStructure& dst) {
    bool dlc = check_function_axioms(psi, src, dst).all_hold();
    bool mvdlc =
        check_function_axioms(psi, kappa_mode(src, mode), kappa_mode(dst, mode))
            .all_hold();
    if (dlc != mvdlc)
      dlcrow.record_failure({{"table", table_desc(psi)},
                             {"DLC", dlc ? "holds" : "fails"},
                             {"MVDLC", mvdlc ? "holds" : "fails"}});
  };
  for (int m = 1; m <= std::min(n, 2); ++m)
    for (int k = 1; k <= std::min(n, 2); ++k) {
      EnumerationSpec ts;
      ts.kind = "meet_table";
      ts.n = m;
      ts.codomain_n = k;
      for_each_candidate(ts, [&](const Document& d) {
        check_table(*d.meetmap, lcas[m][0], lcas[k][0]);
        return true;
      });
    }
  if (n >= 3) {
    EnumerationSpec ts;
    ts.kind = "meet_table";
    ts.n = 3;
    ts.codomain_n = 3;
    ts.seed = 12345;
    ts.budget = 1000;
    for_each_candidate(ts, [&](const Document& d) {
      check_table(*d.meetmap, lcas[3][0], lcas[3][0]);
      return true;
    });
  }

  rep.rows.push_back(unique.row);
  rep.rows.push_back(kdef.row);
  rep.rows.push_back(tdef.row);
  rep.rows.push_back(rt_l.row);
  rep.rows.push_back(rt_m.row);
  rep.rows.push_back(k_valid.row);
  rep.rows.push_back(t_valid.row);
  rep.rows.push_back(forms.row);
  rep.rows.push_back(l1row.row);
  rep.rows.push_back(lsrow.row);
  rep.rows.push_back(lorow.row);
  rep.rows.push_back(es1row.row);
  for (const auto& r : pairrows) rep.rows.push_back(r.row);
  rep.rows.push_back(dlcrow.row);
  return rep;
}

}  // namespace mereo
