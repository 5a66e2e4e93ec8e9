#include "confal/algfile.hpp"

#include "confal/parse.hpp"

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace confal {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error("line " + std::to_string(line_no) + ": " + msg);
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

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

struct SignedTerm {
  int sign;
  std::string body;
};

// Splits an expression at top-level (paren depth zero) '+' and '-' into
// signed terms. A sign with no term accumulated yet acts as a unary sign.
std::vector<SignedTerm> split_signed_terms(const std::string& s, std::size_t line_no) {
  std::vector<SignedTerm> out;
  std::string cur;
  int depth = 0;
  int sign = 1;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') {
      --depth;
      if (depth < 0) fail(line_no, "unbalanced ')'");
    }
    if (depth == 0 && (c == '+' || c == '-')) {
      if (trim(cur).empty()) {
        if (c == '-') sign = -sign;
      } else {
        out.push_back({sign, trim(cur)});
        cur.clear();
        sign = c == '-' ? -1 : 1;
      }
      continue;
    }
    cur += c;
  }
  if (depth != 0) fail(line_no, "unbalanced '('");
  if (trim(cur).empty()) fail(line_no, "expression ends with an operator");
  out.push_back({sign, trim(cur)});
  return out;
}

// Splits a term at top-level '*' into factors.
std::vector<std::string> split_factors(const std::string& s, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == '*') {
      if (trim(cur).empty()) fail(line_no, "empty factor in term");
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (trim(cur).empty()) fail(line_no, "term ends with '*'");
  out.push_back(trim(cur));
  return out;
}

LambdaElement parse_element(ConformalAlgebra& alg, const std::string& rhs,
                            std::size_t line_no) {
  const std::size_t rank = alg.rank();
  std::vector<Poly> comps(rank, Poly::zero(alg.ctx()));
  if (rhs == "0") return LambdaElement(std::move(comps));
  for (const SignedTerm& t : split_signed_terms(rhs, line_no)) {
    std::vector<std::string> factors = split_factors(t.body, line_no);
    std::size_t g = rank;
    for (std::size_t i = 0; i < rank; ++i)
      if (alg.generators()[i] == factors.back()) g = i;
    if (g == rank)
      fail(line_no, "term must end in a generator name, got '" + factors.back() + "'");
    factors.pop_back();
    Poly coeff = Poly::constant(alg.ctx(), Rational(1));
    if (!factors.empty()) {
      try {
        coeff = parse_poly_strict(alg.ctx(), join(factors, "*"));
      } catch (const Error& e) {
        fail(line_no, std::string(e.what()));
      }
    }
    if (t.sign < 0) coeff = -coeff;
    comps[g] = comps[g] + coeff;
  }
  return LambdaElement(std::move(comps));
}

struct RawEntry {
  std::size_t line_no;
  std::string lhs_i, lhs_j, rhs;
};

struct RawTable {
  std::size_t line_no;
  std::string name;
  Symmetry sym = Symmetry::None;
  std::vector<RawEntry> entries;
};

}  // namespace

ConformalAlgebra parse_algebra_file(const std::string& text) {
  std::vector<std::pair<std::string, bool>> params;
  std::vector<std::string> generators;
  std::vector<RawTable> tables;
  bool saw_params = false, saw_generators = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.rfind("params:", 0) == 0) {
      if (saw_params) fail(line_no, "duplicate params section");
      if (!tables.empty()) fail(line_no, "params section must precede tables");
      saw_params = true;
      for (const std::string& item : split(line.substr(7), ',')) {
        std::vector<std::string> w = words(item);
        if (w.empty()) fail(line_no, "empty entry in params list");
        if (w.size() > 2 || (w.size() == 2 && w[1] != "nonzero"))
          fail(line_no, "parameter entry must be 'name' or 'name nonzero'");
        for (auto& [name, nz] : params)
          if (name == w[0]) fail(line_no, "duplicate parameter: " + w[0]);
        params.emplace_back(w[0], w.size() == 2);
      }
      continue;
    }

    if (line.rfind("generators:", 0) == 0) {
      if (saw_generators) fail(line_no, "duplicate generators section");
      if (!tables.empty()) fail(line_no, "generators section must precede tables");
      saw_generators = true;
      generators = split(line.substr(11), ',');
      continue;
    }

    if (line.rfind("table", 0) == 0 &&
        (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
      if (line.back() != ':') fail(line_no, "table header must end with ':'");
      std::vector<std::string> w = words(line.substr(0, line.size() - 1));
      if (w.size() < 2 || w.size() > 3)
        fail(line_no, "table header must be 'table NAME [commutative|skew]:'");
      RawTable t;
      t.line_no = line_no;
      t.name = w[1];
      if (w.size() == 3) {
        if (w[2] == "commutative")
          t.sym = Symmetry::Commutative;
        else if (w[2] == "skew")
          t.sym = Symmetry::Skew;
        else
          fail(line_no, "unknown symmetry tag: " + w[2]);
      }
      if (!Context::valid_identifier(t.name))
        fail(line_no, "invalid table name: " + t.name);
      for (const RawTable& prev : tables)
        if (prev.name == t.name) fail(line_no, "duplicate table: " + t.name);
      tables.push_back(std::move(t));
      continue;
    }

    // Entry line: "G H = expr".
    if (tables.empty()) fail(line_no, "expected a section header, got: " + line);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "entry line needs '='");
    std::vector<std::string> lhs = words(line.substr(0, eq));
    if (lhs.size() != 2) fail(line_no, "entry left side must be two generator names");
    std::string rhs = trim(line.substr(eq + 1));
    if (rhs.empty()) fail(line_no, "entry right side is empty");
    tables.back().entries.push_back({line_no, lhs[0], lhs[1], std::move(rhs)});
  }

  if (!saw_generators) throw Error("algebra file has no generators section");

  ConformalAlgebra alg(Context::make(), generators);
  for (auto& [name, nz] : params) {
    if (!Context::valid_identifier(name) || Context::reserved(name))
      throw Error("invalid parameter name: " + name);
    alg.declare_param(name, nz);
  }

  const std::size_t rank = alg.rank();
  for (const RawTable& t : tables) {
    std::vector<LambdaElement> entries(rank * rank,
                                       LambdaElement::zero(alg.ctx(), rank));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const RawEntry& e : t.entries) {
      std::size_t i = rank, j = rank;
      for (std::size_t g = 0; g < rank; ++g) {
        if (generators[g] == e.lhs_i) i = g;
        if (generators[g] == e.lhs_j) j = g;
      }
      if (i == rank) fail(e.line_no, "unknown generator: " + e.lhs_i);
      if (j == rank) fail(e.line_no, "unknown generator: " + e.lhs_j);
      if (!seen.insert({i, j}).second)
        fail(e.line_no, "duplicate entry " + e.lhs_i + " " + e.lhs_j + " in table " +
                            t.name);
      entries[i * rank + j] = parse_element(alg, e.rhs, e.line_no);
    }
    try {
      alg.add_table(t.name, StructureTable(alg.ctx(), rank, std::move(entries), t.sym));
    } catch (const Error& e) {
      fail(t.line_no, "table " + t.name + ": " + e.what());
    }
  }
  return alg;
}

namespace {

std::string element_str(const LambdaElement& e, const std::vector<std::string>& gens) {
  std::vector<std::string> parts;
  for (std::size_t m = 0; m < e.rank(); ++m) {
    const Poly& p = e[m];
    if (p.is_zero()) continue;
    std::string s = to_string(p);
    if (s == "1")
      parts.push_back(gens[m]);
    else if (p.terms().size() == 1 && s[0] != '-')
      parts.push_back(s + "*" + gens[m]);
    else
      parts.push_back("(" + s + ")*" + gens[m]);
  }
  return parts.empty() ? "0" : join(parts, " + ");
}

}  // namespace

std::string print_algebra_file(const ConformalAlgebra& alg) {
  const Context& ctx = alg.ctx();
  // Only parameters that occur in some table are printed: declared ones first
  // in declaration order (keeping their nonzero flags), then any parameter a
  // table picked up without a declaration. Dropping unused declarations keeps
  // the printed form canonical for basis-change outputs, where eliminated
  // parameters would otherwise linger.
  std::set<std::uint32_t> used;
  for (const auto& [key, tab] : alg.tables())
    for (std::size_t i = 0; i < tab.rank(); ++i)
      for (std::size_t j = 0; j < tab.rank(); ++j)
        for (const Poly& p : tab.entry(i, j).comps())
          for (const auto& [mono, coeff] : p.terms()) coeff.collect_vars(used);
  std::vector<std::string> decls;
  std::set<std::string> declared;
  for (const ParamDecl& p : alg.params()) {
    declared.insert(p.name);
    if (!used.count(p.var.id)) continue;
    decls.push_back(p.nonzero ? p.name + " nonzero" : p.name);
  }
  for (std::uint32_t id : used) {
    VarId v{id};
    if (var_kind(v) == VarKind::Param && !declared.count(ctx.name(v)))
      decls.push_back(ctx.name(v));
  }

  std::string out;
  if (!decls.empty()) out += "params: " + join(decls, ", ") + "\n";
  out += "generators: " + join(alg.generators(), ", ") + "\n";
  for (const auto& [key, tab] : alg.tables()) {
    out += "\ntable " + key;
    if (tab.symmetry() == Symmetry::Commutative) out += " commutative";
    if (tab.symmetry() == Symmetry::Skew) out += " skew";
    out += ":\n";
    for (std::size_t i = 0; i < tab.rank(); ++i)
      for (std::size_t j = 0; j < tab.rank(); ++j) {
        const LambdaElement& e = tab.entry(i, j);
        if (e.is_zero()) continue;
        out += "  " + alg.generators()[i] + " " + alg.generators()[j] + " = " +
               element_str(e, alg.generators()) + "\n";
      }
  }
  return out;
}

}  // namespace confal
