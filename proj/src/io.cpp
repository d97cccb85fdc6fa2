#include "mereo/io.hpp"

#include <algorithm>
#include <bit>

namespace mereo {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  fail(ErrorCode::ParseError, path + ": " + msg);
}

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) parse_fail(path + "." + name, "missing field");
  return *it;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> get_string_array(const json& j,
                                          const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(get_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

/// Evaluates an element expression, re-tagging errors with the field path.
Element eval_at(const AlgebraPtr& alg, const json& j, const std::string& path) {
  std::string expr = get_string(j, path);
  try {
    return eval_element(alg, expr);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

BinaryRelation parse_relation(const json& j, const std::string& path,
                              const AlgebraPtr& alg,
                              BinaryRelation::Flavor flavor) {
  const json* pairs = nullptr;
  if (j.is_array()) {
    pairs = &j;
  } else if (j.is_object()) {
    if (j.contains("atom_edges")) {
      if (flavor != BinaryRelation::Flavor::Contact)
        parse_fail(path + ".atom_edges",
                   "atom_edges only defines contact relations");
      const json& edges = j["atom_edges"];
      if (!edges.is_array()) parse_fail(path + ".atom_edges", "expected an array");
      std::vector<std::pair<Element, Element>> es;
      for (size_t i = 0; i < edges.size(); ++i) {
        const std::string p =
            path + ".atom_edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2)
          parse_fail(p, "expected a pair of atom labels");
        es.emplace_back(eval_at(alg, edges[i][0], p + "[0]"),
                        eval_at(alg, edges[i][1], p + "[1]"));
      }
      return contact_from_atom_graph(alg, es);
    }
    if (j.contains("pairs")) pairs = &j["pairs"];
  }
  if (!pairs || !pairs->is_array())
    parse_fail(path, "expected a pair list or {\"pairs\"/\"atom_edges\": ...}");
  BinaryRelation rel(alg, flavor);
  for (size_t i = 0; i < pairs->size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const json& pr = (*pairs)[i];
    if (!pr.is_array() || pr.size() != 2)
      parse_fail(p, "expected a pair of element expressions");
    rel.set(eval_at(alg, pr[0], p + "[0]").bits,
            eval_at(alg, pr[1], p + "[1]").bits);
  }
  return rel;
}

std::vector<bool> parse_bounded(const json& j, const std::string& path,
                                const AlgebraPtr& alg) {
  std::vector<bool> bounded(alg->element_count(), false);
  if (j.is_object()) {
    Element g = eval_at(alg, field(j, "generator", path), path + ".generator");
    for (std::uint32_t a = 0; a < alg->element_count(); ++a)
      if ((a & ~g.bits) == 0) bounded[a] = true;
    return bounded;
  }
  if (!j.is_array())
    parse_fail(path, "expected an element list or {\"generator\": expr}");
  for (size_t i = 0; i < j.size(); ++i)
    bounded[eval_at(alg, j[i], path + "[" + std::to_string(i) + "]").bits] =
        true;
  return bounded;
}

FiniteSpace parse_space(const json& j, const std::string& path) {
  std::vector<std::string> points =
      get_string_array(field(j, "points", path), path + ".points");
  const bool has_pre = j.contains("preorder"), has_opens = j.contains("opens");
  if (has_pre && has_opens)
    parse_fail(path, "give either \"preorder\" or \"opens\", not both");
  if (has_opens) {
    const json& opens = j["opens"];
    if (!opens.is_array()) parse_fail(path + ".opens", "expected an array");
    std::vector<std::uint32_t> masks;
    for (size_t i = 0; i < opens.size(); ++i) {
      const std::string p = path + ".opens[" + std::to_string(i) + "]";
      std::uint32_t m = 0;
      for (const std::string& lab : get_string_array(opens[i], p)) {
        auto it = std::find(points.begin(), points.end(), lab);
        if (it == points.end())
          parse_fail(p, "unknown point '" + lab + "'");
        m |= 1u << (it - points.begin());
      }
      masks.push_back(m);
    }
    return make_space_opens(points, masks);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (has_pre) {
    const json& pre = j["preorder"];
    if (!pre.is_array()) parse_fail(path + ".preorder", "expected an array");
    for (size_t i = 0; i < pre.size(); ++i) {
      const std::string p = path + ".preorder[" + std::to_string(i) + "]";
      if (!pre[i].is_array() || pre[i].size() != 2)
        parse_fail(p, "expected a pair of point labels");
      pairs.emplace_back(get_string(pre[i][0], p + "[0]"),
                         get_string(pre[i][1], p + "[1]"));
    }
  }
  return make_space_preorder(points, pairs);
}

AlgebraPtr parse_algebra(const json& j, const std::string& path) {
  return FiniteBooleanAlgebra::make(
      get_string_array(field(j, "atoms", path), path + ".atoms"));
}

json relation_pairs_json(const BinaryRelation& rel) {
  json out = json::array();
  for (auto [a, b] : rel.pairs())
    out.push_back({element_expr({rel.algebra(), a}),
                   element_expr({rel.algebra(), b})});
  return out;
}

json space_json(const FiniteSpace& sp) {
  json out = json::object();
  out["points"] = sp.points;
  json pre = json::array();
  for (int x = 0; x < sp.point_count(); ++x)
    for (int y = 0; y < sp.point_count(); ++y)
      if (x != y && (sp.min_open[x] & (1u << y)))
        pre.push_back({sp.points[x], sp.points[y]});
  out["preorder"] = pre;
  return out;
}

}  // namespace

Document Document::of(ContactStructure s) {
  Document d;
  d.kind = Kind::Contact;
  d.contact = std::move(s);
  return d;
}
Document Document::of(LocalContactStructure s) {
  Document d;
  d.kind = Kind::Lca;
  d.lca = std::move(s);
  return d;
}
Document Document::of(MvdStructure s) {
  Document d;
  d.kind = Kind::Mvd;
  d.mvd = std::move(s);
  return d;
}
Document Document::of(CompleteHomomorphism h) {
  Document d;
  d.kind = Kind::Hom;
  d.hom = std::move(h);
  return d;
}
Document Document::of(MeetFunctionTable t) {
  Document d;
  d.kind = Kind::MeetMap;
  d.meetmap = std::move(t);
  return d;
}
Document Document::of(FiniteSpace s) {
  Document d;
  d.kind = Kind::Space;
  d.space = std::move(s);
  return d;
}
Document Document::of(SpaceMap m) {
  Document d;
  d.kind = Kind::Map;
  d.map = std::move(m);
  return d;
}

const char* kind_name(Document::Kind kind) {
  switch (kind) {
    case Document::Kind::Contact: return "contact";
    case Document::Kind::Lca: return "lca";
    case Document::Kind::Mvd: return "mvd";
    case Document::Kind::Hom: return "hom";
    case Document::Kind::MeetMap: return "meetmap";
    case Document::Kind::Space: return "space";
    case Document::Kind::Map: return "map";
  }
  return "?";
}

Document parse_document_json(const json& j) {
  const std::string type = get_string(field(j, "type", "$"), "$.type");
  if (type == "contact") {
    AlgebraPtr alg = parse_algebra(j, "$");
    return Document::of(ContactStructure(
        alg, parse_relation(field(j, "contact", "$"), "$.contact", alg,
                            BinaryRelation::Flavor::Contact)));
  }
  if (type == "lca") {
    AlgebraPtr alg = parse_algebra(j, "$");
    BinaryRelation rho = parse_relation(field(j, "contact", "$"), "$.contact",
                                        alg, BinaryRelation::Flavor::Contact);
    return Document::of(LocalContactStructure(
        alg, std::move(rho),
        parse_bounded(field(j, "bounded", "$"), "$.bounded", alg)));
  }
  if (type == "mvd") {
    AlgebraPtr alg = parse_algebra(j, "$");
    return Document::of(MvdStructure(
        alg, parse_relation(field(j, "wellinside", "$"), "$.wellinside", alg,
                            BinaryRelation::Flavor::WellInside)));
  }
  if (type == "hom") {
    AlgebraPtr dom = FiniteBooleanAlgebra::make(
        get_string_array(field(j, "domain", "$"), "$.domain"));
    AlgebraPtr cod = FiniteBooleanAlgebra::make(
        get_string_array(field(j, "codomain", "$"), "$.codomain"));
    const json& am = field(j, "atom_map", "$");
    if (!am.is_object()) parse_fail("$.atom_map", "expected an object");
    std::vector<int> atom_map(cod->atom_count(), -1);
    for (auto it = am.begin(); it != am.end(); ++it) {
      int q = cod->atom_index(it.key());
      if (q < 0)
        parse_fail("$.atom_map", "'" + it.key() + "' is not a codomain atom");
      Element img = eval_at(dom, it.value(), "$.atom_map." + it.key());
      if (std::popcount(img.bits) != 1)
        parse_fail("$.atom_map." + it.key(), "image must be a domain atom");
      atom_map[q] = std::countr_zero(img.bits);
    }
    for (int q = 0; q < cod->atom_count(); ++q)
      if (atom_map[q] < 0)
        parse_fail("$.atom_map",
                   "no image for atom '" + cod->atom_labels()[q] + "'");
    return Document::of(CompleteHomomorphism(dom, cod, std::move(atom_map)));
  }
  if (type == "meetmap") {
    AlgebraPtr dom = FiniteBooleanAlgebra::make(
        get_string_array(field(j, "domain", "$"), "$.domain"));
    AlgebraPtr cod = FiniteBooleanAlgebra::make(
        get_string_array(field(j, "codomain", "$"), "$.codomain"));
    const json& t = field(j, "table", "$");
    std::vector<std::uint32_t> table(dom->element_count(), 0);
    if (t.is_array()) {
      if (t.size() != dom->element_count())
        parse_fail("$.table", "expected one entry per domain element");
      for (size_t i = 0; i < t.size(); ++i)
        table[i] =
            eval_at(cod, t[i], "$.table[" + std::to_string(i) + "]").bits;
    } else if (t.is_object()) {
      std::vector<bool> seen(dom->element_count(), false);
      for (auto it = t.begin(); it != t.end(); ++it) {
        Element a = eval_element(dom, it.key());
        table[a.bits] = eval_at(cod, it.value(), "$.table." + it.key()).bits;
        seen[a.bits] = true;
      }
      for (std::uint32_t a = 0; a < dom->element_count(); ++a)
        if (!seen[a])
          parse_fail("$.table", "missing entry for " +
                                    element_expr({dom, a}));
    } else {
      parse_fail("$.table", "expected an array or object");
    }
    return Document::of(MeetFunctionTable(dom, cod, std::move(table)));
  }
  if (type == "space") return Document::of(parse_space(j, "$"));
  if (type == "map") {
    FiniteSpace src = parse_space(field(j, "src", "$"), "$.src");
    FiniteSpace dst = parse_space(field(j, "dst", "$"), "$.dst");
    const json& pts = field(j, "points", "$");
    if (!pts.is_object()) parse_fail("$.points", "expected an object");
    std::vector<int> pm(src.point_count(), -1);
    for (auto it = pts.begin(); it != pts.end(); ++it) {
      int x = src.point_index(it.key());
      if (x < 0)
        parse_fail("$.points", "'" + it.key() + "' is not a source point");
      int y = dst.point_index(get_string(it.value(), "$.points." + it.key()));
      if (y < 0)
        parse_fail("$.points." + it.key(), "unknown target point");
      pm[x] = y;
    }
    for (int x = 0; x < src.point_count(); ++x)
      if (pm[x] < 0)
        parse_fail("$.points", "no image for point '" + src.points[x] + "'");
    return Document::of(SpaceMap{std::move(src), std::move(dst), std::move(pm)});
  }
  parse_fail("$.type", "unknown document type '" + type + "'");
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return parse_document_json(j);
}

json document_json(const Document& doc) {
  json out = json::object();
  out["type"] = kind_name(doc.kind);
  switch (doc.kind) {
    case Document::Kind::Contact:
      out["atoms"] = doc.contact->algebra->atom_labels();
      out["contact"] = {{"pairs", relation_pairs_json(doc.contact->contact)}};
      break;
    case Document::Kind::Lca: {
      out["atoms"] = doc.lca->algebra->atom_labels();
      out["contact"] = {{"pairs", relation_pairs_json(doc.lca->contact)}};
      json b = json::array();
      for (std::uint32_t a = 0; a < doc.lca->algebra->element_count(); ++a)
        if (doc.lca->bounded[a])
          b.push_back(element_expr({doc.lca->algebra, a}));
      out["bounded"] = b;
      break;
    }
    case Document::Kind::Mvd:
      out["atoms"] = doc.mvd->algebra->atom_labels();
      out["wellinside"] = relation_pairs_json(doc.mvd->wellinside);
      break;
    case Document::Kind::Hom: {
      out["domain"] = doc.hom->domain()->atom_labels();
      out["codomain"] = doc.hom->codomain()->atom_labels();
      json am = json::object();
      for (int q = 0; q < doc.hom->codomain()->atom_count(); ++q)
        am[doc.hom->codomain()->atom_labels()[q]] =
            doc.hom->domain()->atom_labels()[doc.hom->atom_map()[q]];
      out["atom_map"] = am;
      break;
    }
    case Document::Kind::MeetMap: {
      out["domain"] = doc.meetmap->domain->atom_labels();
      out["codomain"] = doc.meetmap->codomain->atom_labels();
      json t = json::array();
      for (std::uint32_t a = 0; a < doc.meetmap->domain->element_count(); ++a)
        t.push_back(element_expr({doc.meetmap->codomain, doc.meetmap->table[a]}));
      out["table"] = t;
      break;
    }
    case Document::Kind::Space: {
      json sj = space_json(*doc.space);
      out["points"] = sj["points"];
      out["preorder"] = sj["preorder"];
      break;
    }
    case Document::Kind::Map: {
      out["src"] = space_json(doc.map->source);
      out["dst"] = space_json(doc.map->target);
      json pm = json::object();
      for (int x = 0; x < doc.map->source.point_count(); ++x)
        pm[doc.map->source.points[x]] =
            doc.map->target.points[doc.map->point_map[x]];
      out["points"] = pm;
      break;
    }
  }
  return out;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string serialize_document(const Document& doc) {
  return dump_canonical(document_json(doc));
}

json witness_json(const Witness& w) {
  json out = json::object();
  for (const auto& [name, expr] : w) out[name] = expr;
  return out;
}

json report_json(const AxiomReport& report) {
  json verdicts = json::array();
  for (const auto& e : report.entries) {
    json v = {{"axiom", e.axiom}, {"holds", e.holds}};
    if (!e.witness.empty()) v["witness"] = witness_json(e.witness);
    verdicts.push_back(v);
  }
  return {{"verdicts", verdicts}};
}

json classification_json(const Classification& c) {
  json out = report_json(c.axioms);
  out["injective"] = c.injective;
  out["surjective"] = c.surjective;
  out["src_connected"] = c.src_connected;
  out["dst_connected"] = c.dst_connected;
  json cats = json::array();
  for (const auto& f : c.flags)
    cats.push_back({{"category", f.category}, {"member", f.member}});
  out["categories"] = cats;
  return out;
}

json equivalence_json(const EquivalenceReport& r, Document::Kind in) {
  json out = {{"applicable", r.applicable}, {"forms_agree", r.forms_agree}};
  if (in == Document::Kind::Lca) out["forward_ok"] = r.forward_ok;
  if (in == Document::Kind::Mvd) out["backward_ok"] = r.backward_ok;
  if (!r.witness.empty()) out["witness"] = witness_json(r.witness);
  return out;
}

namespace {

json galois_clause_json(const GaloisClause& c) {
  json out = {{"holds", c.holds}};
  if (c.witness)
    out["witness"] = {{"a", element_expr(c.witness->first)},
                      {"b", element_expr(c.witness->second)}};
  return out;
}

}  // namespace

json galois_json(const GaloisReport& r) {
  return {{"lambda", galois_clause_json(r.lambda)},
          {"lambda1", galois_clause_json(r.lambda1)},
          {"lambda2", galois_clause_json(r.lambda2)},
          {"l2rave", galois_clause_json(r.l2rave)}};
}

}  // namespace mereo
