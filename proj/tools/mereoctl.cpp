// mereoctl: JSON-document front end for the mereotopology workbench.
// Links only the C API; exit codes: 0 all checks hold, 1 axiom failures,
// 2 input error, 3 capacity exceeded.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mereo/capi.h"

namespace {

struct DocDeleter {
  void operator()(mereo_doc* d) const { mereo_doc_free(d); }
};
using DocPtr = std::unique_ptr<mereo_doc, DocDeleter>;

struct StrDeleter {
  void operator()(char* s) const { mereo_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

int report_error(int rc) {
  std::cerr << "error: " << mereo_last_error() << "\n";
  return rc;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int load_doc(const std::string& path, DocPtr& doc) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 2;
  }
  mereo_doc* raw = nullptr;
  int rc = mereo_doc_parse(text.c_str(), &raw);
  if (rc != 0) return report_error(rc);
  doc.reset(raw);
  return 0;
}

int write_doc(const mereo_doc* doc, const std::string& path) {
  char* text = nullptr;
  int rc = mereo_doc_serialize(doc, &text);
  if (rc != 0) return report_error(rc);
  StrPtr guard(text);
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

std::string spec_json(const std::string& kind, int n, int codomain_n,
                      const std::string& filter, std::uint64_t seed,
                      std::uint64_t budget, const std::string& hyp,
                      const std::string& concl) {
  std::ostringstream out;
  auto id_array = [](const std::string& csv) {
    std::string out = "[";
    std::string cur;
    bool first = true;
    for (char c : csv + ",") {
      if (c == ',') {
        if (!cur.empty()) {
          out += (first ? "\"" : ",\"") + cur + "\"";
          first = false;
          cur.clear();
        }
      } else if (c != ' ') {
        cur += c;
      }
    }
    return out + "]";
  };
  out << "{\"kind\":\"" << kind << "\",\"n\":" << n;
  if (codomain_n >= 0) out << ",\"codomain_n\":" << codomain_n;
  if (!filter.empty()) out << ",\"filter\":" << id_array(filter);
  out << ",\"seed\":" << seed << ",\"budget\":" << budget;
  if (!hyp.empty()) out << ",\"hypothesis\":" << id_array(hyp);
  if (!concl.empty()) out << ",\"conclusion\":" << id_array(concl);
  out << "}";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mereotopology workbench"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "check axioms of a structure file");
  std::string check_file, check_suite = "contact";
  check->add_option("file", check_file)->required();
  check->add_option("--axioms", check_suite,
                    "contact|nca|lca|mvd|connected|galois or axiom-id list");

  // convert
  auto* convert = app.add_subcommand("convert", "apply kappa or tau");
  std::string conv_file, conv_dir, conv_out;
  convert->add_option("file", conv_file)->required();
  convert->add_option("--dir", conv_dir, "kappa|tau")->required();
  convert->add_option("--out", conv_out, "output path (default stdout)");

  // classify
  auto* classify = app.add_subcommand("classify", "category membership of a map");
  std::string cls_src, cls_dst, cls_map;
  classify->add_option("--src", cls_src)->required();
  classify->add_option("--dst", cls_dst)->required();
  classify->add_option("--map", cls_map)->required();

  // compose
  auto* compose = app.add_subcommand("compose", "compose two meet tables");
  std::string comp_style, comp_psi1, comp_psi2, comp_domain, comp_out;
  compose->add_option("--style", comp_style, "dhlc|mvdhlc")->required();
  compose->add_option("--psi1", comp_psi1, "first (inner) table")->required();
  compose->add_option("--psi2", comp_psi2, "second (outer) table")->required();
  compose->add_option("--domain", comp_domain,
                      "structure file on psi1's domain algebra")->required();
  compose->add_option("--out", comp_out, "output path (default stdout)");

  // space
  auto* space = app.add_subcommand("space", "topological operations");
  std::string space_file;
  bool op_rc = false, op_mvd = false, op_lca = false, op_conn = false,
       op_map = false;
  space->add_option("file", space_file)->required();
  space->add_flag("--rc", op_rc, "regular closed algebra");
  space->add_flag("--mvd", op_mvd, "standard MVD structure");
  space->add_flag("--lca", op_lca, "standard local contact structure");
  space->add_flag("--connected", op_conn, "connectedness");
  space->add_flag("--map-properties", op_map,
                  "continuity/openness/... of a map file");

  // enumerate / search
  std::string en_kind, en_filter, en_hyp, en_concl;
  int en_n = 2, en_cod = -1;
  std::uint64_t en_seed = 0, en_budget = 0;
  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--kind", en_kind)->required();
    cmd->add_option("--n", en_n);
    cmd->add_option("--codomain-n", en_cod);
    cmd->add_option("--seed", en_seed);
    cmd->add_option("--budget", en_budget);
  };
  auto* enumerate = app.add_subcommand("enumerate", "enumerate structures");
  add_spec_flags(enumerate);
  enumerate->add_option("--filter", en_filter, "comma-separated axiom ids");
  auto* search = app.add_subcommand("search", "implication counterexamples");
  add_spec_flags(search);
  search->add_option("--hyp", en_hyp, "hypothesis axiom ids")->required();
  search->add_option("--concl", en_concl, "conclusion axiom ids")->required();

  // adjoint
  auto* adjoint = app.add_subcommand("adjoint", "evaluate the lower adjoint");
  std::string adj_map, adj_element;
  adjoint->add_option("--map", adj_map, "hom file")->required();
  adjoint->add_option("--element", adj_element, "codomain element expression")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    DocPtr doc;
    if (int rc = load_doc(check_file, doc)) return rc;
    char* report = nullptr;
    int rc = mereo_check(doc.get(), check_suite.c_str(), &report);
    if (rc >= 2) return report_error(rc);
    StrPtr guard(report);
    std::cout << report;
    return rc;
  }
  if (*convert) {
    DocPtr doc;
    if (int rc = load_doc(conv_file, doc)) return rc;
    mereo_doc* raw = nullptr;
    char* report = nullptr;
    int rc = mereo_convert(doc.get(), conv_dir.c_str(), &raw, &report);
    if (rc != 0) return report_error(rc);
    DocPtr out(raw);
    StrPtr guard(report);
    std::cerr << report;
    return write_doc(out.get(), conv_out);
  }
  if (*classify) {
    DocPtr src, dst, map;
    if (int rc = load_doc(cls_src, src)) return rc;
    if (int rc = load_doc(cls_dst, dst)) return rc;
    if (int rc = load_doc(cls_map, map)) return rc;
    char* report = nullptr;
    int rc = mereo_classify(src.get(), dst.get(), map.get(), &report);
    if (rc != 0) return report_error(rc);
    StrPtr guard(report);
    std::cout << report;
    return 0;
  }
  if (*compose) {
    DocPtr psi1, psi2, domain;
    if (int rc = load_doc(comp_psi1, psi1)) return rc;
    if (int rc = load_doc(comp_psi2, psi2)) return rc;
    if (int rc = load_doc(comp_domain, domain)) return rc;
    mereo_doc* raw = nullptr;
    int rc = mereo_compose(comp_style.c_str(), psi2.get(), psi1.get(),
                           domain.get(), &raw);
    if (rc != 0) return report_error(rc);
    DocPtr out(raw);
    return write_doc(out.get(), comp_out);
  }
  if (*space) {
    DocPtr doc;
    if (int rc = load_doc(space_file, doc)) return rc;
    std::string op = op_rc      ? "rc"
                     : op_mvd   ? "mvd"
                     : op_lca   ? "lca"
                     : op_conn  ? "connected"
                     : op_map   ? "map_properties"
                                : "";
    if (op.empty()) {
      std::cerr << "error: pick one of --rc --mvd --lca --connected "
                   "--map-properties\n";
      return 2;
    }
    char* report = nullptr;
    int rc = mereo_space_op(doc.get(), op.c_str(), &report);
    if (rc != 0) return report_error(rc);
    StrPtr guard(report);
    std::cout << report;
    return 0;
  }
  if (*enumerate) {
    std::string spec = spec_json(en_kind, en_n, en_cod, en_filter, en_seed,
                                 en_budget, "", "");
    char* out = nullptr;
    int rc = mereo_enumerate(spec.c_str(), &out);
    if (rc != 0) return report_error(rc);
    StrPtr guard(out);
    std::cout << out;
    return 0;
  }
  if (*search) {
    std::string spec = spec_json(en_kind, en_n, en_cod, "", en_seed, en_budget,
                                 en_hyp, en_concl);
    char* out = nullptr;
    int rc = mereo_search(spec.c_str(), &out);
    if (rc != 0) return report_error(rc);
    StrPtr guard(out);
    std::cout << out;
    return 0;
  }
  if (*adjoint) {
    DocPtr doc;
    if (int rc = load_doc(adj_map, doc)) return rc;
    char* out = nullptr;
    int rc = mereo_adjoint(doc.get(), adj_element.c_str(), &out);
    if (rc != 0) return report_error(rc);
    StrPtr guard(out);
    std::cout << out << "\n";
    return 0;
  }
  return 2;
}
