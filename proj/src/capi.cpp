#include "mereo/capi.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "mereo/io.hpp"
#include "mereo/lab.hpp"

using nlohmann::json;

struct mereo_doc {
  mereo::Document doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int status_of(const mereo::Error& e) {
  return e.code() == mereo::ErrorCode::CapacityExceeded ||
                 e.code() == mereo::ErrorCode::TooManyAtoms
             ? 3
             : 2;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const mereo::Error& e) {
    g_last_error = std::string(mereo::error_code_name(e.code())) + ": " + e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 2;
  }
}

[[noreturn]] void input_error(const std::string& msg) {
  mereo::fail(mereo::ErrorCode::ParseError, msg);
}

const mereo::Document& need(const mereo_doc* d, const char* what) {
  if (!d) input_error(std::string("null ") + what + " document");
  return d->doc;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json rc_report(const mereo::RegularClosedAlgebra& rca) {
  json sets = json::array();
  auto point_list = [&](std::uint32_t mask) {
    json out = json::array();
    for (int x = 0; x < rca.space.point_count(); ++x)
      if (mask & (1u << x)) out.push_back(rca.space.points[x]);
    return out;
  };
  for (std::uint32_t s : rca.rc_sets) sets.push_back(point_list(s));
  json embedding = json::object();
  for (std::uint32_t a = 0; a < rca.algebra->element_count(); ++a)
    embedding[mereo::element_expr({rca.algebra, a})] = point_list(rca.set_of(a));
  return {{"atoms", rca.algebra->atom_labels()},
          {"rc_sets", sets},
          {"embedding", embedding}};
}

json search_json(const mereo::SearchOutcome& o) {
  json out = {{"status", o.status},
              {"candidates_tried", o.candidates_tried}};
  if (o.status == "counterexample") {
    out["witness"] = json::parse(o.witness_document);
    out["report"] = mereo::report_json(o.witness_report);
  }
  return out;
}

mereo::EnumerationSpec parse_spec(const json& j) {
  mereo::EnumerationSpec spec;
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    input_error("enumeration spec needs a \"kind\" string");
  spec.kind = j["kind"].get<std::string>();
  if (j.contains("n")) spec.n = j["n"].get<int>();
  if (j.contains("codomain_n")) spec.codomain_n = j["codomain_n"].get<int>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("budget")) spec.budget = j["budget"].get<std::uint64_t>();
  if (j.contains("filter"))
    spec.filter = j["filter"].get<std::vector<std::string>>();
  return spec;
}

}  // namespace

extern "C" {

int mereo_doc_parse(const char* json_text, mereo_doc** out) {
  return guarded([&]() -> int {
    if (!json_text || !out) input_error("null argument");
    *out = new mereo_doc{mereo::parse_document(json_text)};
    return 0;
  });
}

void mereo_doc_free(mereo_doc* doc) { delete doc; }

int mereo_doc_serialize(const mereo_doc* doc, char** out_json) {
  return guarded([&]() -> int {
    if (!out_json) input_error("null output argument");
    *out_json = dup_string(mereo::serialize_document(need(doc, "input")));
    return 0;
  });
}

int mereo_check(const mereo_doc* doc, const char* suite, char** out_report) {
  return guarded([&]() -> int {
    const mereo::Document& d = need(doc, "input");
    if (!suite || !out_report) input_error("null argument");
    const std::string s = suite;
    json report;
    bool all_hold = true;
    if (s == "galois") {
      if (d.kind != mereo::Document::Kind::Hom)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "the galois suite needs a hom document");
      mereo::GaloisReport g = mereo::check_galois(*d.hom);
      report = mereo::galois_json(g);
      all_hold = g.all_hold();
    } else {
      std::vector<std::string> ids;
      if (s == "contact")
        ids = {"C1", "C2", "C3", "C4"};
      else if (s == "nca")
        ids = {"C1", "C2", "C3", "C4", "C5", "C6"};
      else if (s == "lca")
        ids = {"C1", "C2", "C3", "C4", "BB1", "BB2", "BB3",
               "BC1", "BC2", "BC3"};
      else if (s == "mvd")
        ids = {"ll1", "ll2", "ll3", "ll4", "ll5", "ll6", "ll4s", "MVD"};
      else if (s == "connected")
        ids = {d.kind == mereo::Document::Kind::Mvd ? "CONA" : "CON"};
      else
        ids = split_ids(s);
      mereo::AxiomReport r = mereo::eval_axioms(d, ids);
      report = mereo::report_json(r);
      all_hold = r.all_hold();
    }
    *out_report = dup_string(mereo::dump_canonical(report));
    return all_hold ? 0 : 1;
  });
}

int mereo_convert(const mereo_doc* doc, const char* direction, mereo_doc** out,
                  char** out_report) {
  return guarded([&]() -> int {
    const mereo::Document& d = need(doc, "input");
    if (!direction || !out) input_error("null argument");
    const std::string dir = direction;
    mereo::Document converted = d;
    mereo::EquivalenceReport rep;
    if (dir == "kappa") {
      if (d.kind != mereo::Document::Kind::Lca)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "kappa converts lca documents");
      converted = mereo::Document::of(mereo::kappa(*d.lca));
      rep = mereo::roundtrip_report(*d.lca);
    } else if (dir == "tau") {
      if (d.kind != mereo::Document::Kind::Mvd)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "tau converts mvd documents");
      converted = mereo::Document::of(mereo::tau(*d.mvd));
      rep = mereo::roundtrip_report(*d.mvd);
    } else {
      input_error("direction must be kappa or tau");
    }
    *out = new mereo_doc{std::move(converted)};
    if (out_report)
      *out_report =
          dup_string(mereo::dump_canonical(mereo::equivalence_json(rep, d.kind)));
    return 0;
  });
}

int mereo_classify(const mereo_doc* src, const mereo_doc* dst,
                   const mereo_doc* map, char** out_report) {
  return guarded([&]() -> int {
    const mereo::Document& s = need(src, "src");
    const mereo::Document& t = need(dst, "dst");
    const mereo::Document& m = need(map, "map");
    if (!out_report) input_error("null output argument");
    mereo::Classification c;
    if (s.kind == mereo::Document::Kind::Lca &&
        t.kind == mereo::Document::Kind::Lca) {
      if (m.kind == mereo::Document::Kind::Hom)
        c = mereo::classify(*m.hom, *s.lca, *t.lca);
      else if (m.kind == mereo::Document::Kind::MeetMap)
        c = mereo::classify(*m.meetmap, *s.lca, *t.lca);
      else
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "map must be a hom or meetmap document");
    } else if (s.kind == mereo::Document::Kind::Mvd &&
               t.kind == mereo::Document::Kind::Mvd) {
      if (m.kind == mereo::Document::Kind::Hom)
        c = mereo::classify(*m.hom, *s.mvd, *t.mvd);
      else if (m.kind == mereo::Document::Kind::MeetMap)
        c = mereo::classify(*m.meetmap, *s.mvd, *t.mvd);
      else
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "map must be a hom or meetmap document");
    } else {
      mereo::fail(mereo::ErrorCode::KindMismatch,
                  "src and dst must both be lca or both be mvd documents");
    }
    *out_report =
        dup_string(mereo::dump_canonical(mereo::classification_json(c)));
    return 0;
  });
}

int mereo_compose(const char* style, const mereo_doc* psi2,
                  const mereo_doc* psi1, const mereo_doc* first_domain,
                  mereo_doc** out) {
  return guarded([&]() -> int {
    const mereo::Document& d2 = need(psi2, "psi2");
    const mereo::Document& d1 = need(psi1, "psi1");
    const mereo::Document& df = need(first_domain, "first_domain");
    if (!style || !out) input_error("null argument");
    if (d1.kind != mereo::Document::Kind::MeetMap ||
        d2.kind != mereo::Document::Kind::MeetMap)
      mereo::fail(mereo::ErrorCode::KindMismatch,
                  "psi1 and psi2 must be meetmap documents");
    const std::string st = style;
    mereo::MeetFunctionTable composed = *d1.meetmap;
    if (st == "dhlc") {
      if (df.kind != mereo::Document::Kind::Lca)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "dhlc composition needs an lca first_domain");
      composed = mereo::compose_dhlc(*d2.meetmap, *d1.meetmap, *df.lca);
    } else if (st == "mvdhlc") {
      if (df.kind != mereo::Document::Kind::Mvd)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "mvdhlc composition needs an mvd first_domain");
      composed = mereo::compose_mvdhlc(*d2.meetmap, *d1.meetmap, *df.mvd);
    } else {
      input_error("style must be dhlc or mvdhlc");
    }
    *out = new mereo_doc{mereo::Document::of(std::move(composed))};
    return 0;
  });
}

int mereo_space_op(const mereo_doc* doc, const char* op, char** out_report) {
  return guarded([&]() -> int {
    const mereo::Document& d = need(doc, "input");
    if (!op || !out_report) input_error("null argument");
    const std::string o = op;
    json report;
    if (o == "map_properties") {
      if (d.kind != mereo::Document::Kind::Map)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "map_properties needs a map document");
      mereo::MapProperties p = mereo::map_properties(*d.map);
      report = {{"continuous", p.continuous}, {"open", p.open},
                {"closed", p.closed},         {"perfect", p.perfect},
                {"quasi_open", p.quasi_open}, {"skeletal", p.skeletal}};
    } else {
      if (d.kind != mereo::Document::Kind::Space)
        mereo::fail(mereo::ErrorCode::KindMismatch,
                    "space operations need a space document");
      const mereo::FiniteSpace& sp = *d.space;
      if (o == "rc") {
        report = rc_report(mereo::regular_closed_algebra(sp));
      } else if (o == "lca") {
        mereo::StandardLca sl = mereo::standard_lca(sp);
        report = mereo::document_json(mereo::Document::of(sl.lca));
        report["non_lch"] = sl.non_lch;
      } else if (o == "mvd") {
        report = mereo::document_json(
            mereo::Document::of(mereo::standard_mvd(sp)));
      } else if (o == "connected") {
        report = {{"connected", mereo::space_connected(sp)}};
      } else {
        input_error("unknown space operation '" + o + "'");
      }
    }
    *out_report = dup_string(mereo::dump_canonical(report));
    return 0;
  });
}

int mereo_adjoint(const mereo_doc* hom, const char* element_expr,
                  char** out_expr) {
  return guarded([&]() -> int {
    const mereo::Document& d = need(hom, "hom");
    if (!element_expr || !out_expr) input_error("null argument");
    if (d.kind != mereo::Document::Kind::Hom)
      mereo::fail(mereo::ErrorCode::KindMismatch,
                  "adjoint evaluation needs a hom document");
    mereo::Element b = mereo::eval_element(d.hom->codomain(), element_expr);
    *out_expr = dup_string(mereo::element_expr(d.hom->adjoint_apply(b)));
    return 0;
  });
}

int mereo_enumerate(const char* spec_json, char** out_jsonl) {
  return guarded([&]() -> int {
    if (!spec_json || !out_jsonl) input_error("null argument");
    json j;
    try {
      j = json::parse(spec_json);
    } catch (const json::parse_error& e) {
      input_error(e.what());
    }
    mereo::EnumerationResult r = mereo::enumerate_structures(parse_spec(j));
    std::ostringstream out;
    for (const auto& doc : r.documents)
      out << json::parse(doc).dump() << "\n";
    out << json{{"summary", {{"candidates", r.candidates},
                             {"matched", r.matched}}}}
               .dump()
        << "\n";
    *out_jsonl = dup_string(out.str());
    return 0;
  });
}

int mereo_search(const char* spec_json, char** out_report) {
  return guarded([&]() -> int {
    if (!spec_json || !out_report) input_error("null argument");
    json j;
    try {
      j = json::parse(spec_json);
    } catch (const json::parse_error& e) {
      input_error(e.what());
    }
    std::vector<std::string> hyp, concl;
    if (j.contains("hypothesis"))
      hyp = j["hypothesis"].get<std::vector<std::string>>();
    if (j.contains("conclusion"))
      concl = j["conclusion"].get<std::vector<std::string>>();
    mereo::SearchOutcome o =
        mereo::search_implication(hyp, concl, parse_spec(j));
    *out_report = dup_string(mereo::dump_canonical(search_json(o)));
    return 0;
  });
}

const char* mereo_last_error(void) { return g_last_error.c_str(); }

void mereo_string_free(char* s) { std::free(s); }

}  // extern "C"
