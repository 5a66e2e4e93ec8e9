#include "confal/products.hpp"

#include "confal/parse.hpp"

namespace confal {

VarId fresh_lam(const Context& ctx, const std::vector<const LambdaElement*>& elems,
                const std::vector<const Poly*>& polys) {
  std::set<std::uint32_t> used;
  for (auto* e : elems) e->collect_vars(used);
  for (auto* p : polys) p->collect_vars(used);
  for (std::uint32_t i = 0; i < kLamCount; ++i) {
    VarId v = ctx.lam(i);
    if (!used.count(v.id)) return v;
  }
  throw Error("lambda variable pool exhausted");
}

LambdaElement eval_product(const ConformalAlgebra& alg, const std::string& op,
                           const LambdaElement& x, const LambdaElement& y, VarId v) {
  if (var_kind(v) != VarKind::Lam) throw Error("product variable must be a lambda variable");
  const StructureTable& table = alg.table(op);
  std::size_t r = alg.rank();
  if (x.rank() != r || y.rank() != r) throw Error("rank mismatch");
  std::set<std::uint32_t> used;
  x.collect_vars(used);
  y.collect_vars(used);
  if (used.count(v.id)) throw Error("variable capture: product variable occurs in an operand");

  const Context& ctx = alg.ctx();
  VarId lam = StructureTable::lambda_var(ctx);
  Poly vv = Poly::variable(ctx, v);
  Poly minus_v = -vv;
  Poly d_plus_v = Poly::variable(ctx, ctx.del()) + vv;
  VarId del = ctx.del();

  std::vector<Poly> xs, ys;
  xs.reserve(r);
  ys.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    xs.push_back(x[i].substitute(del, minus_v));
    ys.push_back(y[i].substitute(del, d_plus_v));
  }

  LambdaElement acc = LambdaElement::zero(ctx, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (xs[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (ys[j].is_zero()) continue;
      LambdaElement entry = table.entry(i, j);
      if (entry.is_zero()) continue;
      if (v != lam) entry = entry.substitute(lam, vv);
      acc = acc + entry.scaled(xs[i] * ys[j]);
    }
  }
  return acc;
}

LambdaElement eval_product_at(const ConformalAlgebra& alg, const std::string& op,
                              const LambdaElement& x, const LambdaElement& y,
                              const Poly& target) {
  VarId v = fresh_lam(alg.ctx(), {&x, &y}, {&target});
  LambdaElement r = eval_product(alg, op, x, y, v);
  return r.substitute(v, target);
}

LambdaElement conjugate(const ConformalAlgebra& alg, const LambdaElement& expr, VarId v,
                        const Poly& target) {
  if (expr.rank() != alg.rank()) throw Error("rank mismatch");
  if (var_kind(v) != VarKind::Lam) throw Error("conjugate expects a lambda variable");
  return expr.substitute(v, target);
}

Rational factorial(std::uint32_t n) {
  Rational r(1);
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

LambdaElement nth_product(const ConformalAlgebra& alg, const std::string& op, std::size_t i,
                          std::size_t j, std::uint32_t n) {
  const StructureTable& table = alg.table(op);
  if (i >= alg.rank() || j >= alg.rank()) throw Error("generator index out of range");
  VarId lam = StructureTable::lambda_var(alg.ctx());
  const LambdaElement& entry = table.entry(i, j);
  std::vector<Poly> comps;
  comps.reserve(alg.rank());
  for (std::size_t k = 0; k < alg.rank(); ++k)
    comps.push_back(entry[k].coefficient_of(lam, n).scaled(factorial(n)));
  return LambdaElement(std::move(comps));
}

LambdaElement nth_product_of(const ConformalAlgebra& alg, const std::string& op,
                             const LambdaElement& x, const LambdaElement& y, std::uint32_t n) {
  VarId v = fresh_lam(alg.ctx(), {&x, &y});
  LambdaElement prod = eval_product(alg, op, x, y, v);
  std::vector<Poly> comps;
  comps.reserve(alg.rank());
  for (std::size_t k = 0; k < alg.rank(); ++k)
    comps.push_back(prod[k].coefficient_of(v, n).scaled(factorial(n)));
  return LambdaElement(std::move(comps));
}

LambdaElement apply_endo(const Endomorphism& e, const LambdaElement& x) {
  if (e.rank() != x.rank()) throw Error("rank mismatch");
  std::size_t r = e.rank();
  std::vector<Poly> comps;
  comps.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    Poly acc = x[0] * e.entry(0, j);
    for (std::size_t i = 1; i < r; ++i) acc = acc + x[i] * e.entry(i, j);
    comps.push_back(std::move(acc));
  }
  return LambdaElement(std::move(comps));
}

std::vector<LabeledResidual> is_derivation(const ConformalAlgebra& alg, const std::string& op,
                                           const Endomorphism& D) {
  const StructureTable& table = alg.table(op);
  VarId lam = StructureTable::lambda_var(alg.ctx());
  std::vector<LabeledResidual> out;
  for (std::size_t i = 0; i < alg.rank(); ++i)
    for (std::size_t j = 0; j < alg.rank(); ++j) {
      LambdaElement lhs = apply_endo(D, table.entry(i, j));
      LambdaElement r1 = eval_product(alg, op, apply_endo(D, alg.gen(i)), alg.gen(j), lam);
      LambdaElement r2 = eval_product(alg, op, alg.gen(i), apply_endo(D, alg.gen(j)), lam);
      LambdaElement residual = lhs - r1 - r2;
      if (!residual.is_zero())
        out.push_back({"(" + alg.generators()[i] + "," + alg.generators()[j] + ")", residual});
    }
  return out;
}

std::string to_string(const LambdaElement& e, const std::vector<std::string>& gens) {
  if (e.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(e[i]) + ")*" + (i < gens.size() ? gens[i] : "g" + std::to_string(i));
  }
  return out;
}

}  // namespace confal
