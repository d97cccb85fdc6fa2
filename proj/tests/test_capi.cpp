#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <string>

#include <json.hpp>

#include "mereo/capi.h"

using nlohmann::json;

namespace {

struct DocDeleter {
  void operator()(mereo_doc* d) const { mereo_doc_free(d); }
};
using DocPtr = std::unique_ptr<mereo_doc, DocDeleter>;

DocPtr parse_ok(const std::string& text) {
  mereo_doc* raw = nullptr;
  REQUIRE(mereo_doc_parse(text.c_str(), &raw) == 0);
  REQUIRE(raw != nullptr);
  return DocPtr(raw);
}

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  mereo_string_free(s);
  return out;
}

const char* kLcaText = R"({
  "type": "lca", "atoms": ["p", "q"],
  "contact": {"atom_edges": []},
  "bounded": ["0", "p", "q", "p|q"]
})";

}  // namespace

TEST_CASE("parse, serialize, and re-parse are stable") {
  DocPtr doc = parse_ok(kLcaText);
  char* s1 = nullptr;
  REQUIRE(mereo_doc_serialize(doc.get(), &s1) == 0);
  std::string text = take(s1);
  CHECK(text.find("\"type\"") != std::string::npos);
  DocPtr again = parse_ok(text);
  char* s2 = nullptr;
  REQUIRE(mereo_doc_serialize(again.get(), &s2) == 0);
  CHECK(take(s2) == text);
}

TEST_CASE("parse failures return code 2 and set the error string") {
  mereo_doc* raw = nullptr;
  CHECK(mereo_doc_parse("{\"type\": \"nope\"}", &raw) == 2);
  CHECK(std::string(mereo_last_error()).find("$.type") != std::string::npos);
  CHECK(mereo_doc_parse("not json", &raw) == 2);
  CHECK(std::string(mereo_last_error()).size() > 0);
}

TEST_CASE("capacity errors return code 3") {
  std::string atoms;
  for (int i = 0; i < 30; ++i)
    atoms += std::string(i ? "," : "") + "\"a" + std::to_string(i) + "\"";
  std::string text =
      "{\"type\": \"contact\", \"atoms\": [" + atoms + "], \"contact\": []}";
  mereo_doc* raw = nullptr;
  CHECK(mereo_doc_parse(text.c_str(), &raw) == 3);
  CHECK(std::string(mereo_last_error()).find("TooManyAtoms") !=
        std::string::npos);

  char* out = nullptr;
  CHECK(mereo_enumerate("{\"kind\": \"contact_graph\", \"n\": 9}", &out) == 3);
}

TEST_CASE("axiom checks: passing suites return 0, failing ones return 1") {
  DocPtr lca = parse_ok(kLcaText);
  char* rep = nullptr;
  CHECK(mereo_check(lca.get(), "lca", &rep) == 0);
  json j = json::parse(take(rep));
  CHECK(j["verdicts"].size() == 10);
  for (const auto& v : j["verdicts"]) CHECK(v["holds"] == true);

  // Overlap is not connected on two atoms: CON fails with witness p.
  CHECK(mereo_check(lca.get(), "connected", &rep) == 1);
  j = json::parse(take(rep));
  CHECK(j["verdicts"][0]["axiom"] == "CON");
  CHECK(j["verdicts"][0]["witness"]["a"] == "p");

  CHECK(mereo_check(lca.get(), "C1,C2", &rep) == 0);
  take(rep);
  CHECK(mereo_check(lca.get(), "ll1", &rep) == 2);  // wrong catalog for lca
}

TEST_CASE("galois suite on a hom document") {
  DocPtr hom = parse_ok(R"({
    "type": "hom", "domain": ["a1", "a2"], "codomain": ["b1", "b2", "b3"],
    "atom_map": {"b1": "a1", "b2": "a1", "b3": "a2"}
  })");
  char* rep = nullptr;
  CHECK(mereo_check(hom.get(), "galois", &rep) == 0);
  json j = json::parse(take(rep));
  CHECK(j["lambda"]["holds"] == true);
  CHECK(j["l2rave"]["holds"] == true);

  char* expr = nullptr;
  REQUIRE(mereo_adjoint(hom.get(), "b2", &expr) == 0);
  CHECK(take(expr) == "a1");
  REQUIRE(mereo_adjoint(hom.get(), "b1|b3", &expr) == 0);
  CHECK(take(expr) == "1");
  CHECK(mereo_adjoint(hom.get(), "zz", &expr) == 2);
}

TEST_CASE("kappa and tau conversion round trip byte for byte") {
  DocPtr lca = parse_ok(kLcaText);
  char* lca_text = nullptr;
  REQUIRE(mereo_doc_serialize(lca.get(), &lca_text) == 0);
  std::string original = take(lca_text);

  mereo_doc* mvd_raw = nullptr;
  char* rep = nullptr;
  REQUIRE(mereo_convert(lca.get(), "kappa", &mvd_raw, &rep) == 0);
  DocPtr mvd(mvd_raw);
  json j = json::parse(take(rep));
  CHECK(j["applicable"] == true);
  CHECK(j["forward_ok"] == true);
  CHECK(j["forms_agree"] == true);

  mereo_doc* back_raw = nullptr;
  REQUIRE(mereo_convert(mvd.get(), "tau", &back_raw, &rep) == 0);
  DocPtr back(back_raw);
  json jb = json::parse(take(rep));
  CHECK(jb["backward_ok"] == true);

  char* back_text = nullptr;
  REQUIRE(mereo_doc_serialize(back.get(), &back_text) == 0);
  CHECK(take(back_text) == original);

  // Wrong direction for the kind is an input error.
  mereo_doc* bad = nullptr;
  CHECK(mereo_convert(lca.get(), "tau", &bad, nullptr) == 2);
  CHECK(mereo_convert(lca.get(), "sideways", &bad, nullptr) == 2);
}

TEST_CASE("classification through the C API") {
  DocPtr src = parse_ok(kLcaText);
  DocPtr dst = parse_ok(kLcaText);
  DocPtr hom = parse_ok(R"({
    "type": "hom", "domain": ["p", "q"], "codomain": ["p", "q"],
    "atom_map": {"p": "p", "q": "q"}
  })");
  char* rep = nullptr;
  REQUIRE(mereo_classify(src.get(), dst.get(), hom.get(), &rep) == 0);
  json j = json::parse(take(rep));
  CHECK(j["injective"] == true);
  CHECK(j["surjective"] == true);
  bool saw_sal = false;
  for (const auto& c : j["categories"])
    if (c["category"] == "SAL") {
      saw_sal = true;
      CHECK(c["member"] == true);
    }
  CHECK(saw_sal);

  // Kind mismatch: hom in place of a structure.
  CHECK(mereo_classify(hom.get(), dst.get(), hom.get(), &rep) == 2);
}

TEST_CASE("composition through the C API") {
  DocPtr lca = parse_ok(kLcaText);
  DocPtr ident = parse_ok(R"({
    "type": "meetmap", "domain": ["p", "q"], "codomain": ["p", "q"],
    "table": ["0", "p", "q", "1"]
  })");
  mereo_doc* out_raw = nullptr;
  REQUIRE(mereo_compose("dhlc", ident.get(), ident.get(), lca.get(),
                        &out_raw) == 0);
  DocPtr out(out_raw);
  char* s = nullptr;
  REQUIRE(mereo_doc_serialize(out.get(), &s) == 0);
  char* s2 = nullptr;
  REQUIRE(mereo_doc_serialize(ident.get(), &s2) == 0);
  CHECK(take(s) == take(s2));  // identity composed with itself

  CHECK(mereo_compose("mvdhlc", ident.get(), ident.get(), lca.get(),
                      &out_raw) == 2);  // mvdhlc needs an mvd first_domain
}

TEST_CASE("space operations through the C API") {
  DocPtr sp = parse_ok(R"({
    "type": "space", "points": ["x", "y", "z"],
    "preorder": [["y", "x"], ["y", "z"]]
  })");
  char* rep = nullptr;
  REQUIRE(mereo_space_op(sp.get(), "rc", &rep) == 0);
  json j = json::parse(take(rep));
  CHECK(j["atoms"].size() == 2);
  CHECK(j["rc_sets"].size() == 4);

  REQUIRE(mereo_space_op(sp.get(), "connected", &rep) == 0);
  CHECK(json::parse(take(rep))["connected"] == true);

  REQUIRE(mereo_space_op(sp.get(), "lca", &rep) == 0);
  j = json::parse(take(rep));
  CHECK(j["non_lch"] == true);
  CHECK(j["type"] == "lca");

  REQUIRE(mereo_space_op(sp.get(), "mvd", &rep) == 0);
  CHECK(json::parse(take(rep))["type"] == "mvd");

  CHECK(mereo_space_op(sp.get(), "map_properties", &rep) == 2);

  DocPtr map = parse_ok(R"({
    "type": "map",
    "src": {"points": ["u", "v"], "preorder": []},
    "dst": {"points": ["a", "b"], "preorder": [["b", "a"]]},
    "points": {"u": "b", "v": "b"}
  })");
  REQUIRE(mereo_space_op(map.get(), "map_properties", &rep) == 0);
  j = json::parse(take(rep));
  CHECK(j["continuous"] == true);
  CHECK(j["quasi_open"] == false);
  CHECK(j["skeletal"] == false);
}

TEST_CASE("enumeration and search through the C API") {
  char* out = nullptr;
  REQUIRE(mereo_enumerate(
              R"({"kind": "contact_graph", "n": 2,
                  "filter": ["C1", "C2", "C3", "C4", "C5", "C6"]})",
              &out) == 0);
  std::string lines = take(out);
  // One matching structure (the overlap graph) plus the summary line.
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
  CHECK(lines.find("\"summary\"") != std::string::npos);

  REQUIRE(mereo_search(R"({
    "kind": "contact_graph", "n": 3,
    "hypothesis": ["C1", "C2", "C3", "C4"], "conclusion": ["C6"]
  })",
                       &out) == 0);
  json j = json::parse(take(out));
  CHECK(j["status"] == "counterexample");
  CHECK(j["candidates_tried"] == 2);
  CHECK(j["witness"]["type"] == "contact");

  CHECK(mereo_search("{\"n\": 3}", &out) == 2);  // missing kind
}
