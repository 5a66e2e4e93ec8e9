#pragma once

#include "confal/algebra.hpp"
#include "confal/parse.hpp"
#include "confal/poly.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace confal::testutil {

// Deterministic random polynomial in the given d/lam variables, with
// coefficients drawn from small rationals and (optionally) parameters.
inline Poly random_poly(std::mt19937_64& rng, Context& ctx, const std::vector<VarId>& vars,
                        const std::vector<VarId>& params, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  Poly p = Poly::zero(ctx);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Poly mono = Poly::constant(ctx, Rational(coeff(rng), den(rng)));
    for (VarId v : vars) {
      int e = deg(rng);
      if (e > 0) mono = mono * Poly::variable(ctx, v, static_cast<std::uint32_t>(e));
    }
    if (!params.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, params.size() - 1);
      std::uniform_int_distribution<int> pe(0, 2);
      int e = pe(rng);
      if (e > 0) mono = mono * Poly::variable(ctx, params[pick(rng)], static_cast<std::uint32_t>(e));
    }
    p = p + mono;
  }
  return p;
}

inline ConformalAlgebra make_alg(std::vector<std::string> gens,
                                 std::vector<std::pair<std::string, bool>> params = {}) {
  ConformalAlgebra alg(Context::make(), std::move(gens));
  for (auto& [name, nonzero] : params) alg.declare_param(name, nonzero);
  return alg;
}

// Adds a table whose rank*rank entries are given row-major as component
// strings (one string per generator component).
inline void add_table(ConformalAlgebra& alg, const std::string& key,
                      const std::vector<std::vector<std::string>>& comps,
                      Symmetry sym = Symmetry::None) {
  std::vector<LambdaElement> entries;
  entries.reserve(comps.size());
  for (const auto& entry : comps) {
    std::vector<Poly> ps;
    ps.reserve(entry.size());
    for (const auto& s : entry) ps.push_back(parse_poly(alg.ctx(), s));
    entries.emplace_back(std::move(ps));
  }
  alg.add_table(key, StructureTable(alg.ctx(), alg.rank(), std::move(entries), sym));
}

// Rank-1 algebra with the standard Virasoro-type bracket (d + 2x)L.
inline ConformalAlgebra make_vir() {
  auto alg = make_alg({"L"});
  add_table(alg, "bracket", {{"d + 2*x"}}, Symmetry::Skew);
  return alg;
}

// Rank-1 algebra with product L o L = c*L on the (d + 2x)L bracket: the
// compatible-product family on the rank-1 Lie algebra.
inline ConformalAlgebra make_scalar_vir(const std::string& cname = "c") {
  auto alg = make_alg({"L"}, {{cname, false}});
  add_table(alg, "circ", {{cname}}, Symmetry::Commutative);
  add_table(alg, "bracket", {{"d + 2*x"}}, Symmetry::Skew);
  return alg;
}

// Rank-2 algebra with symbolic parameters a, b: [L L] = (d+2x)L,
// [L M] = (d+ax+b)M, [M L] = ((a-1)d+ax-b)M, [M M] = 0.
inline ConformalAlgebra make_wab_symbolic() {
  auto alg = make_alg({"L", "M"}, {{"a", false}, {"b", false}});
  add_table(alg, "bracket",
            {{"d + 2*x", "0"},
             {"0", "d + a*x + b"},
             {"0", "(a - 1)*d + a*x - b"},
             {"0", "0"}},
            Symmetry::Skew);
  return alg;
}

}  // namespace confal::testutil
