#include "confal/solve.hpp"

#include "confal/parse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <utility>

namespace confal {
namespace {

using Json = nlohmann::ordered_json;

// Scale to integer coefficients with content 1 and a positive coefficient on
// the grlex-largest monomial, so equal zero-sets compare equal.
PPoly normalize_eq(const PPoly& e) {
  if (e.is_zero()) return e;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : e.terms()) {
    den_lcm = int_lcm(den_lcm, denominator(c));
    num_gcd = int_gcd(num_gcd, numerator(c));
  }
  if (num_gcd == 0) num_gcd = 1;
  Rational scale{den_lcm, num_gcd};
  if (e.leading_term().second * scale < 0) scale = -scale;
  return e.scaled(scale);
}

// Monomial dividing every term (pairwise min of exponents); empty when any
// term is free of some shared variable.
Mono common_mono(const PPoly& e) {
  Mono acc;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (first) {
      acc = m;
      first = false;
      continue;
    }
    Mono out;
    for (const auto& [v, ex] : acc) {
      std::uint32_t other = mono_exp(m, v);
      if (other > 0) out.emplace_back(v, std::min(ex, other));
    }
    acc = std::move(out);
    if (acc.empty()) break;
  }
  return acc;
}

PPoly strip_mono(const PPoly& e, const Mono& m) {
  if (m.empty()) return e;
  PPoly out;
  for (const auto& [mm, c] : e.terms()) {
    Mono reduced;
    for (const auto& [v, ex] : mm) {
      std::uint32_t cut = mono_exp(m, v);
      if (ex > cut) reduced.emplace_back(v, ex - cut);
    }
    out.add_term(reduced, c);
  }
  return out;
}

// E with u := num/den, cleared of the denominator (zero-set preserved while
// den is nonzero, which the caller guarantees via its assumptions).
PPoly subst_var(const PPoly& e, std::uint32_t u, const PPoly& num, const PPoly& den) {
  std::uint32_t deg = e.degree_in(u);
  if (deg == 0) return e;
  PPoly out;
  for (std::uint32_t k = 0; k <= deg; ++k)
    out = out + e.coefficient_of(u, k) * num.pow(k) * den.pow(deg - k);
  return out;
}

// Ascending canonical order: fewer terms first, lower total degree first,
// then term-by-term from the grlex-largest monomial down.
bool eq_less(const PPoly& a, const PPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  GrlexLess less;
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return less(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

struct Branch {
  std::vector<PPoly> eqs;
  std::map<std::uint32_t, ParamField> bind;
  std::set<std::uint32_t> nonzero;
  std::vector<std::string> assumptions;
  std::size_t next_designated = 0;
  std::uint32_t depth_left = 0;
  bool dead = false;
};

class Engine {
 public:
  Engine(const Context& ctx, const std::vector<VarId>& unknowns, const SolveOptions& opt)
      : ctx_(ctx), opt_(opt), unknowns_(unknowns) {}

  SolveResult run(std::vector<PPoly> eqs) {
    Branch root;
    root.eqs = std::move(eqs);
    root.depth_left = opt_.depth;
    process(std::move(root));
    canonicalize();
    return std::move(out_);
  }

 private:
  Context ctx_;
  SolveOptions opt_;
  std::vector<VarId> unknowns_;
  SolveResult out_;
  std::uint32_t explored_ = 0;

  bool settled(const Branch& br, std::uint32_t v) const {
    return br.bind.count(v) != 0 || br.nonzero.count(v) != 0;
  }

  void substitute_all(Branch& br, std::uint32_t u, const ParamField& val) {
    for (PPoly& e : br.eqs) e = subst_var(e, u, val.num(), val.den());
  }

  void bind(Branch& br, std::uint32_t u, ParamField val) {
    br.bind.emplace(u, val);
    substitute_all(br, u, val);
  }

  // Normalize, strip assumed-nonzero factors, drop zeros, dedupe, sort; a
  // nonzero constant equation marks the branch dead (no solutions).
  void cleanup(Branch& br) const {
    std::vector<PPoly> kept;
    for (PPoly& e : br.eqs) {
      PPoly n = normalize_eq(e);
      if (n.is_zero()) continue;
      Mono strip;
      for (const auto& [v, ex] : common_mono(n))
        if (br.nonzero.count(v)) strip.emplace_back(v, ex);
      if (!strip.empty()) n = normalize_eq(strip_mono(n, strip));
      if (n.is_zero()) continue;
      if (n.size() == 1 && n.terms().begin()->first.empty()) {
        br.dead = true;
        return;
      }
      kept.push_back(std::move(n));
    }
    std::sort(kept.begin(), kept.end(), eq_less);
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    br.eqs = std::move(kept);
  }

  // Single-term equation whose monomial involves exactly one unsettled
  // unknown: a power of it vanishes, so it is zero.
  bool rule_power(Branch& br) {
    for (const PPoly& e : br.eqs) {
      if (e.size() != 1) continue;
      const Mono& m = e.terms().begin()->first;
      if (m.size() != 1) continue;
      std::uint32_t v = m.front().first;
      bind(br, v, ParamField(Rational(0)));
      return true;
    }
    return false;
  }

  // A pivot coefficient is invertible when it is a single term over assumed-
  // nonzero variables (a rational constant included).
  static bool invertible(const PPoly& a, const std::set<std::uint32_t>& nonzero) {
    if (a.is_zero() || a.size() != 1) return false;
    for (const auto& [v, ex] : a.terms().begin()->first)
      if (!nonzero.count(v)) return false;
    return true;
  }

  // Elimination priority: plain unknowns first, then scalars assumed nonzero
  // by a case split, and designated case scalars last — the latter are the
  // parameters solution families are described over, so they stay free
  // whenever the equation allows it.
  int elimination_class(const Branch& br, std::uint32_t v) const {
    bool designated =
        std::any_of(opt_.designated.begin(), opt_.designated.end(),
                    [&](VarId d) { return d.id == v; });
    if (designated) return 2;
    if (br.nonzero.count(v)) return 1;
    return 0;
  }

  bool rule_linear(Branch& br) {
    for (int cls = 0; cls <= 2; ++cls) {
      for (const PPoly& e : br.eqs) {
        std::set<std::uint32_t> vars;
        e.collect_vars(vars);
        for (std::uint32_t v : vars) {
          if (elimination_class(br, v) != cls) continue;
          if (e.degree_in(v) != 1) continue;
          PPoly a = e.coefficient_of(v, 1);
          if (!invertible(a, br.nonzero)) continue;
          PPoly b = e.coefficient_of(v, 0);
          bind(br, v, ParamField::fraction(-b, a));
          return true;
        }
      }
    }
    return false;
  }

  void process(Branch br) {
    if (++explored_ > opt_.branch_cap) {
      open(br, "branch cap reached");
      return;
    }
    for (;;) {
      cleanup(br);
      if (br.dead) return;
      if (rule_power(br)) continue;
      if (rule_linear(br)) continue;
      break;
    }
    if (br.eqs.empty()) {
      finalize(br);
      return;
    }

    // Designated zero/nonzero splits, in order, while depth lasts; scalars
    // absent from every equation are skipped for free.
    while (br.next_designated < opt_.designated.size()) {
      std::uint32_t v = opt_.designated[br.next_designated].id;
      bool occurs = false;
      for (const PPoly& e : br.eqs)
        if (e.contains_var(v)) {
          occurs = true;
          break;
        }
      if (!occurs || settled(br, v)) {
        ++br.next_designated;
        continue;
      }
      if (br.depth_left == 0) break;
      split(br, v, true);
      return;
    }

    // Factor split: first equation (canonical order) whose terms share an
    // unsettled unknown; multi-term equations are genuine factorizations and
    // take precedence over single-term products.
    for (bool multi : {true, false}) {
      for (const PPoly& e : br.eqs) {
        if (multi ? e.size() < 2 : e.size() != 1) continue;
        const Mono shared = multi ? common_mono(e) : e.terms().begin()->first;
        for (const auto& [v, ex] : shared) {
          if (settled(br, v)) continue;
          split(br, v, false);
          return;
        }
      }
    }

    open(br, "");
  }

  void split(const Branch& br, std::uint32_t v, bool designated) {
    std::string name = ctx_.name(VarId{v});
    Branch zero = br;
    zero.assumptions.push_back(name + " = 0");
    if (designated) {
      --zero.depth_left;
      ++zero.next_designated;
    }
    bind(zero, v, ParamField(Rational(0)));
    process(std::move(zero));

    Branch nz = br;
    nz.assumptions.push_back(name + " != 0");
    if (designated) {
      --nz.depth_left;
      ++nz.next_designated;
    }
    nz.nonzero.insert(v);
    process(std::move(nz));
  }

  void finalize(const Branch& br) {
    SolutionFamily fam;
    fam.assumptions = br.assumptions;
    fam.raw_bindings = br.bind;
    fam.raw_nonzero = br.nonzero;
    // Back-substitute to closed form over the surviving free unknowns; values
    // only reference unknowns unbound at their creation, so this settles in
    // at most one pass per binding.
    bool changed = true;
    std::size_t guard = fam.raw_bindings.size() + 2;
    while (changed && guard-- > 0) {
      changed = false;
      for (auto& [u, val] : fam.raw_bindings) {
        ParamField next = val.subst(fam.raw_bindings);
        if (!(next == val)) {
          val = std::move(next);
          changed = true;
        }
      }
    }
    for (VarId v : unknowns_) {
      auto it = fam.raw_bindings.find(v.id);
      if (it == fam.raw_bindings.end())
        fam.free_params.push_back(ctx_.name(v));
      else
        fam.bindings.emplace(ctx_.name(v), to_string(it->second, ctx_));
    }
    out_.families.push_back(std::move(fam));
  }

  void open(const Branch& br, const std::string& note) {
    OpenBranch ob;
    ob.assumptions = br.assumptions;
    for (const PPoly& e : br.eqs) ob.equations.push_back(to_string(e, ctx_));
    if (!note.empty()) ob.equations.push_back("(" + note + ")");
    out_.open.push_back(std::move(ob));
  }

  void canonicalize() {
    auto key = [](const SolutionFamily& f) { return std::tie(f.assumptions, f.bindings); };
    std::sort(out_.families.begin(), out_.families.end(),
              [&](const SolutionFamily& a, const SolutionFamily& b) { return key(a) < key(b); });
    out_.families.erase(std::unique(out_.families.begin(), out_.families.end(),
                                    [&](const SolutionFamily& a, const SolutionFamily& b) {
                                      return key(a) == key(b);
                                    }),
                        out_.families.end());
    std::sort(out_.open.begin(), out_.open.end(), [](const OpenBranch& a, const OpenBranch& b) {
      return std::tie(a.assumptions, a.equations) < std::tie(b.assumptions, b.equations);
    });
  }
};

void bucket_by_inert(const PPoly& p, const std::vector<std::uint32_t>& inert, std::size_t idx,
                     std::vector<PPoly>& out) {
  if (idx == inert.size()) {
    if (!p.is_zero()) out.push_back(normalize_eq(p));
    return;
  }
  std::uint32_t v = inert[idx];
  for (std::uint32_t n = 0; n <= p.degree_in(v); ++n)
    bucket_by_inert(p.coefficient_of(v, n), inert, idx + 1, out);
}

}  // namespace

std::vector<PPoly> extract_equations(const std::vector<Poly>& residuals,
                                     const std::set<std::uint32_t>& unknowns) {
  std::vector<PPoly> out;
  for (const Poly& r : residuals) {
    for (const auto& [mono, coeff] : r.terms()) {
      std::set<std::uint32_t> den_vars;
      coeff.den().collect_vars(den_vars);
      for (std::uint32_t v : den_vars)
        if (unknowns.count(v))
          throw Error("equation denominator contains an unknown: " +
                      r.ctx().name(VarId{v}));
      std::set<std::uint32_t> vars;
      coeff.num().collect_vars(vars);
      std::vector<std::uint32_t> inert;
      for (std::uint32_t v : vars)
        if (!unknowns.count(v)) inert.push_back(v);
      bucket_by_inert(coeff.num(), inert, 0, out);
    }
  }
  std::sort(out.begin(), out.end(), eq_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SolveResult solve_system(const Context& ctx, std::vector<PPoly> equations,
                         const std::vector<VarId>& unknowns, const SolveOptions& opt) {
  return Engine(ctx, unknowns, opt).run(std::move(equations));
}

std::string solve_result_to_json(const SolveResult& r) {
  Json root;
  root["families"] = Json::array();
  for (const SolutionFamily& f : r.families) {
    Json jf;
    jf["assumptions"] = f.assumptions;
    jf["bindings"] = Json::object();
    for (const auto& [k, v] : f.bindings) jf["bindings"][k] = v;
    jf["free_params"] = f.free_params;
    root["families"].push_back(std::move(jf));
  }
  root["open"] = Json::array();
  for (const OpenBranch& ob : r.open) {
    Json jo;
    jo["assumptions"] = ob.assumptions;
    jo["equations"] = ob.equations;
    root["open"].push_back(std::move(jo));
  }
  root["complete"] = r.complete();
  return root.dump(2);
}

}  // namespace confal
