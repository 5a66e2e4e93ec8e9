#include "CLI11.hpp"

#include "confal/algfile.hpp"
#include "confal/basis.hpp"
#include "confal/build.hpp"
#include "confal/checks.hpp"
#include "confal/identities.hpp"
#include "confal/parse.hpp"
#include "confal/report.hpp"
#include "confal/solve.hpp"
#include "confal/wab.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace confal;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, at - start)));
    start = at + 1;
  }
}

Rational parse_rational(const std::string& text) {
  std::string s = trim(text);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  std::string num = s, den = "1";
  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits = [](const std::string& p) {
    return !p.empty() && std::all_of(p.begin(), p.end(), [](unsigned char c) {
      return std::isdigit(c);
    });
  };
  if (!digits(num) || !digits(den) || Integer(den) == 0)
    throw Error("not a rational number: " + text);
  Rational r{Integer(num), Integer(den)};
  if (neg) r = -r;
  return r;
}

// Matrix files share the algebra-file lexical conventions: '#' comments,
// blank lines ignored, one row per line, entries separated by commas and
// parsed with the strict expression grammar in the algebra's context.
std::vector<Poly> parse_matrix_file(ConformalAlgebra& alg, const std::string& text,
                                    const std::string& what) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (!line.empty()) rows.push_back(line);
  }
  const std::size_t rank = alg.rank();
  if (rows.size() != rank)
    throw Error(what + " needs " + std::to_string(rank) + " rows, got " +
                std::to_string(rows.size()));
  std::vector<Poly> entries;
  for (const std::string& row : rows) {
    std::vector<std::string> cells = split(row, ',');
    if (cells.size() != rank)
      throw Error(what + " row needs " + std::to_string(rank) + " entries, got " +
                  std::to_string(cells.size()) + ": " + row);
    for (const std::string& cell : cells)
      entries.push_back(parse_poly_strict(alg.ctx(), cell));
  }
  return entries;
}

// ---- checker suites ----------------------------------------------------

const std::vector<std::string> kSuiteNames = {"assoc", "comm",      "lie",
                                              "leibniz", "tpca", "identities"};

std::vector<std::string> expand_suites(const std::vector<std::string>& wanted) {
  std::vector<std::string> out;
  auto push = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const std::string& s : wanted) {
    if (s == "tpca") {
      push("assoc");
      push("comm");
      push("lie");
      push("leibniz");
    } else if (std::find(kSuiteNames.begin(), kSuiteNames.end(), s) !=
               kSuiteNames.end()) {
      push(s);
    } else {
      throw Error("unknown suite: " + s);
    }
  }
  return out;
}

std::vector<std::string> default_suites(const ConformalAlgebra& alg) {
  bool circ = alg.has_table("circ"), bracket = alg.has_table("bracket");
  if (circ && bracket) return {"assoc", "comm", "lie", "leibniz"};
  if (circ) return {"assoc", "comm"};
  if (bracket) return {"lie"};
  throw Error("algebra defines neither a circ nor a bracket table");
}

CheckReport run_suite(const ConformalAlgebra& alg, const std::string& name) {
  if (name == "assoc") return check_associative(alg, "circ");
  if (name == "comm") return check_commutative(alg, "circ");
  if (name == "lie") return check_lie(alg, "bracket");
  if (name == "leibniz") return check_transposed_leibniz(alg, "circ", "bracket");
  if (name == "identities") return check_theorem_identities(alg, "circ", "bracket");
  throw Error("unknown suite: " + name);
}

// ---- report plumbing ---------------------------------------------------

struct Output {
  bool json = false;
  ordered_json report;
  std::string text;

  explicit Output(bool as_json, const std::string& command) : json(as_json) {
    report["command"] = command;
    report["inputs"] = ordered_json::object();
  }
  void input(const std::string& key, const ordered_json& value) {
    report["inputs"][key] = value;
  }
  void emit(bool pass) {
    report["pass"] = pass;
    if (json)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << text;
  }
};

bool attach_suites(Output& out, const std::vector<CheckReport>& reports) {
  bool pass = true;
  out.report["suites"] = ordered_json::array();
  for (const CheckReport& r : reports) {
    pass = pass && r.overall;
    out.report["suites"].push_back(r.to_json());
  }
  out.text += reports_to_text(reports);
  return pass;
}

// ---- commands ----------------------------------------------------------

int cmd_check(const std::string& file, const std::string& suites_csv, bool json) {
  ConformalAlgebra alg = parse_algebra_file(read_file(file));
  std::vector<std::string> suites =
      suites_csv.empty() ? default_suites(alg) : expand_suites(split(suites_csv, ','));
  std::vector<CheckReport> reports;
  for (const std::string& s : suites) reports.push_back(run_suite(alg, s));
  Output out(json, "check");
  out.input("file", file);
  out.input("suites", suites);
  out.text += "checking " + file + "\n";
  bool pass = attach_suites(out, reports);
  out.emit(pass);
  return pass ? 0 : 1;
}

int cmd_catalog(const std::string& id, const std::string& action, const std::string& o,
                bool json) {
  ConformalAlgebra alg = wab::catalog(id);
  Output out(json, "catalog");
  out.input("id", id);
  out.input("action", action);
  if (action == "show") {
    std::string text = print_algebra_file(alg);
    out.report["algebra"] = text;
    if (!o.empty()) {
      write_file(o, text);
      out.text += "wrote " + o + "\n";
    } else {
      out.text += text;
    }
    out.emit(true);
    return 0;
  }
  if (action == "check") {
    std::vector<CheckReport> reports;
    for (const char* s : {"assoc", "lie", "leibniz"})
      reports.push_back(run_suite(alg, s));
    out.text += "checking catalog entry " + id + "\n";
    bool pass = attach_suites(out, reports);
    out.emit(pass);
    return pass ? 0 : 1;
  }
  throw Error("catalog action must be 'show' or 'check', got: " + action);
}

int finish_constructed(Output& out, const ConformalAlgebra& result, const std::string& o,
                       const std::string& and_check_csv) {
  std::string text = print_algebra_file(result);
  out.report["algebra"] = text;
  if (!o.empty()) {
    write_file(o, text);
    out.text += "wrote " + o + "\n";
  } else {
    out.text += text;
  }
  bool pass = true;
  if (!and_check_csv.empty()) {
    std::vector<std::string> suites = expand_suites(split(and_check_csv, ','));
    out.input("and_check", suites);
    std::vector<CheckReport> reports;
    for (const std::string& s : suites) reports.push_back(run_suite(result, s));
    pass = attach_suites(out, reports);
  }
  out.emit(pass);
  return pass ? 0 : 1;
}

int cmd_tensor(const std::string& f1, const std::string& f2, const std::string& o,
               const std::string& and_check, bool json) {
  ConformalAlgebra a = parse_algebra_file(read_file(f1));
  ConformalAlgebra b = parse_algebra_file(read_file(f2));
  ConformalAlgebra t = tensor(a, b);
  Output out(json, "tensor");
  out.input("file1", f1);
  out.input("file2", f2);
  if (!o.empty()) out.input("out", o);
  return finish_constructed(out, t, o, and_check);
}

int cmd_transform(const std::string& file, const std::string& matrixfile,
                  const std::string& o, const std::string& and_check, bool json) {
  ConformalAlgebra alg = parse_algebra_file(read_file(file));
  std::vector<Poly> entries =
      parse_matrix_file(alg, read_file(matrixfile), "basis-change matrix");
  BasisChange T(alg.ctx(), alg.rank(), std::move(entries));
  ConformalAlgebra result = change_basis(alg, T);
  Output out(json, "transform");
  out.input("file", file);
  out.input("matrix", matrixfile);
  if (!o.empty()) out.input("out", o);
  return finish_constructed(out, result, o, and_check);
}

int cmd_derive(const std::string& file, const std::string& dfile, const std::string& o,
               const std::string& and_check, bool json) {
  ConformalAlgebra alg = parse_algebra_file(read_file(file));
  std::vector<Poly> entries =
      parse_matrix_file(alg, read_file(dfile), "derivation matrix");
  Endomorphism D(alg.ctx(), alg.rank(), std::move(entries));
  StructureTable star = derivation_product(alg, "circ", D);
  ConformalAlgebra result = alg;
  result.add_table("star", star);
  Output out(json, "derive");
  out.input("file", file);
  out.input("derivation", dfile);
  if (!o.empty()) out.input("out", o);
  return finish_constructed(out, result, o, and_check);
}

// ---- wab subcommands ---------------------------------------------------

wab::CandidateOctuple resolve_candidate(const std::string& spec) {
  std::string id = spec;
  if (id.rfind("case-", 0) == 0) id = id.substr(5);
  const auto ids = wab::catalog_ids();
  if (std::find(ids.begin(), ids.end(), id) != ids.end())
    return wab::catalog_octuple(id);
  return wab::algebra_octuple(parse_algebra_file(read_file(spec)));
}

int cmd_wab_residuals(const std::string& candidate, const std::string& a_str,
                      const std::string& b_str, bool json) {
  wab::CandidateOctuple oct = resolve_candidate(candidate);
  auto value = [&](const std::string& s, const char* name) {
    if (s.empty()) return Poly::variable(oct.ctx, oct.ctx.param(name));
    return Poly::constant(oct.ctx, parse_rational(s));
  };
  Poly a = value(a_str, "a"), b = value(b_str, "b");
  wab::ResidualSystem rs = wab::residual_system(oct, a, b);

  Output out(json, "wab residuals");
  out.input("candidate", candidate);
  out.input("a", a_str.empty() ? "symbolic" : a_str);
  out.input("b", b_str.empty() ? "symbolic" : b_str);
  out.report["residuals"] = ordered_json::array();
  std::size_t nonzero = 0;
  for (const wab::ResidualEntry& e : rs.entries) {
    if (e.residual.is_zero()) continue;
    ++nonzero;
    out.report["residuals"].push_back(
        {{"label", e.label}, {"residual", to_string(e.residual)}});
    out.text += e.label + ": " + to_string(e.residual) + "\n";
  }
  bool pass = nonzero == 0;
  out.text += pass ? "all " + std::to_string(rs.entries.size()) + " residuals vanish\n"
                   : std::to_string(nonzero) + " of " +
                         std::to_string(rs.entries.size()) + " residuals are nonzero\n";
  out.emit(pass);
  return pass ? 0 : 1;
}

ordered_json solve_to_json(const SolveResult& r) {
  return ordered_json::parse(solve_result_to_json(r));
}

std::string solve_to_text(const SolveResult& r) {
  std::ostringstream os;
  os << r.families.size() << " solution families, " << r.open.size()
     << " open branches\n";
  for (std::size_t i = 0; i < r.families.size(); ++i) {
    const SolutionFamily& f = r.families[i];
    os << "family " << i + 1 << ":\n";
    os << "  assumptions:";
    for (const std::string& a : f.assumptions) os << " [" << a << "]";
    os << "\n  free:";
    for (const std::string& p : f.free_params) os << " " << p;
    os << "\n";
    for (const auto& [name, value] : f.bindings)
      os << "  " << name << " = " << value << "\n";
  }
  for (const OpenBranch& b : r.open) {
    os << "open branch:";
    for (const std::string& a : b.assumptions) os << " [" << a << "]";
    os << "\n";
    for (const std::string& e : b.equations) os << "  0 = " << e << "\n";
  }
  return os.str();
}

int cmd_wab_solve(int degree, unsigned depth, const std::string& a_str,
                  const std::string& b_str, bool json) {
  if (a_str.empty() != b_str.empty())
    throw Error("--a and --b must be given together");
  Output out(json, "wab solve");
  SolveResult r;
  if (!a_str.empty()) {
    Rational a = parse_rational(a_str), b = parse_rational(b_str);
    unsigned deg = degree < 0 ? 2 : static_cast<unsigned>(degree);
    out.input("a", a_str);
    out.input("b", b_str);
    out.input("degree", deg);
    r = wab::solve_full(a, b, deg);
  } else {
    unsigned deg = degree < 0 ? 4 : static_cast<unsigned>(degree);
    out.input("degree", deg);
    out.input("depth", depth);
    r = wab::solve_reduced(deg, depth);
  }
  out.report["solve"] = solve_to_json(r);
  out.text += solve_to_text(r);
  bool pass = r.complete();
  out.emit(pass);
  return pass ? 0 : 1;
}

int cmd_wab_report(bool json, const std::string& command, const CheckReport& rep) {
  Output out(json, command);
  bool pass = attach_suites(out, {rep});
  out.emit(pass);
  return pass ? 0 : 1;
}

int cmd_wab_lemma(int degree, const std::string& a_str, const std::string& b_str,
                  bool json) {
  if (a_str.empty() != b_str.empty())
    throw Error("--a and --b must be given together");
  Output out(json, "wab lemmaA");
  CheckReport rep;
  if (!a_str.empty()) {
    unsigned deg = degree < 0 ? 2 : static_cast<unsigned>(degree);
    out.input("a", a_str);
    out.input("b", b_str);
    out.input("degree", deg);
    rep = wab::verify_lemma_A(parse_rational(a_str), parse_rational(b_str), deg);
  } else {
    unsigned deg = degree < 0 ? 3 : static_cast<unsigned>(degree);
    out.input("degree", deg);
    rep = wab::verify_lemma_A(deg);
  }
  bool pass = attach_suites(out, {rep});
  out.emit(pass);
  return pass ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"confal: exact checker for conformal algebras with two products"};
  app.require_subcommand(1);
  std::string report_mode = "text";
  app.add_option("--report", report_mode, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string chk_file, chk_suites;
  CLI::App* chk = app.add_subcommand("check", "run checker suites on an algebra file");
  chk->fallthrough();
  chk->add_option("file", chk_file, "algebra definition file")->required();
  chk->add_option("--suites", chk_suites,
                  "comma list of assoc, comm, lie, leibniz, tpca, identities");

  std::string cat_id, cat_action, cat_out;
  CLI::App* cat = app.add_subcommand("catalog", "show or check a built-in algebra");
  cat->fallthrough();
  cat->add_option("id", cat_id, "catalog identifier")->required();
  cat->add_option("action", cat_action, "show | check")->required();
  cat->add_option("-o,--out", cat_out, "write the algebra file here");

  std::string t_f1, t_f2, t_out, t_check;
  CLI::App* ten = app.add_subcommand("tensor", "tensor product of two algebra files");
  ten->fallthrough();
  ten->add_option("file1", t_f1)->required();
  ten->add_option("file2", t_f2)->required();
  ten->add_option("-o,--out", t_out, "write the result here");
  ten->add_option("--and-check", t_check, "suites to run on the result");

  std::string x_file, x_matrix, x_out, x_check;
  CLI::App* xf = app.add_subcommand("transform", "rewrite an algebra in a new basis");
  xf->fallthrough();
  xf->add_option("file", x_file)->required();
  xf->add_option("matrix", x_matrix, "basis-change matrix file")->required();
  xf->add_option("-o,--out", x_out, "write the result here");
  xf->add_option("--and-check", x_check, "suites to run on the result");

  std::string d_file, d_matrix, d_out, d_check;
  CLI::App* dv = app.add_subcommand(
      "derive", "add the star table a o D(b) for a derivation D of circ");
  dv->fallthrough();
  dv->add_option("file", d_file)->required();
  dv->add_option("dmatrix", d_matrix, "derivation matrix file")->required();
  dv->add_option("-o,--out", d_out, "write the result here");
  dv->add_option("--and-check", d_check, "suites to run on the result");

  CLI::App* w = app.add_subcommand("wab", "rank-2 candidate-product pipeline");
  w->fallthrough();
  w->require_subcommand(1);

  std::string wr_cand, wr_a, wr_b;
  CLI::App* wr = w->add_subcommand("residuals",
                                   "law residuals of a candidate circ table");
  wr->fallthrough();
  wr->add_option("--candidate", wr_cand, "catalog id or algebra file")->required();
  wr->add_option("--a", wr_a, "rational value for a (default symbolic)");
  wr->add_option("--b", wr_b, "rational value for b (default symbolic)");

  int ws_degree = -1;
  unsigned ws_depth = 2;
  std::string ws_a, ws_b;
  CLI::App* ws = w->add_subcommand("solve", "solve the candidate-product equations");
  ws->fallthrough();
  ws->add_option("--degree", ws_degree, "coefficient degree bound");
  ws->add_option("--depth", ws_depth, "case-split depth for the reduced system");
  ws->add_option("--a", ws_a, "rational a (with --b: full system at numeric a, b)");
  ws->add_option("--b", ws_b, "rational b");

  CLI::App* wn = w->add_subcommand("normal-forms",
                                   "verify the basis-change normal-form table");
  wn->fallthrough();

  int wl_degree = -1;
  std::string wl_a, wl_b;
  CLI::App* wl = w->add_subcommand(
      "lemmaA", "shape reduction (symbolic) or triviality at numeric a, b");
  wl->fallthrough();
  wl->add_option("--degree", wl_degree, "ansatz degree bound");
  wl->add_option("--a", wl_a, "rational a");
  wl->add_option("--b", wl_b, "rational b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  bool json = report_mode == "json";

  if (*chk) return cmd_check(chk_file, chk_suites, json);
  if (*cat) return cmd_catalog(cat_id, cat_action, cat_out, json);
  if (*ten) return cmd_tensor(t_f1, t_f2, t_out, t_check, json);
  if (*xf) return cmd_transform(x_file, x_matrix, x_out, x_check, json);
  if (*dv) return cmd_derive(d_file, d_matrix, d_out, d_check, json);
  if (*wr) return cmd_wab_residuals(wr_cand, wr_a, wr_b, json);
  if (*ws) return cmd_wab_solve(ws_degree, ws_depth, ws_a, ws_b, json);
  if (*wn) return cmd_wab_report(json, "wab normal-forms", wab::verify_normal_forms());
  if (*wl) return cmd_wab_lemma(wl_degree, wl_a, wl_b, json);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const confal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
