#include "confal/poly.hpp"

#include "confal/parse.hpp"

namespace confal {

Poly Poly::variable(const Context& ctx, VarId v, std::uint32_t exp) {
  if (var_kind(v) == VarKind::Param) {
    PPoly p = PPoly::variable(v.id, Rational(1), exp);
    return constant(ctx, ParamField(std::move(p)));
  }
  return Poly(ctx, SparsePoly<ParamField>::variable(v.id, ParamField(1), exp));
}

Poly Poly::substitute(VarId v, const Poly& r) const {
  if (var_kind(v) == VarKind::Param)
    throw Error("substitute rejects Param variables; use evaluate_params");
  return substitute_many({{v, r}});
}

Poly Poly::substitute_many(const std::vector<std::pair<VarId, Poly>>& subs) const {
  Context ctx = ctx_;
  std::map<std::uint32_t, SparsePoly<ParamField>> m;
  for (auto& [v, p] : subs) {
    if (var_kind(v) == VarKind::Param)
      throw Error("substitute rejects Param variables; use evaluate_params");
    ctx = Context::join(ctx, p.ctx());
    if (!m.emplace(v.id, p.body()).second) throw Error("duplicate substitution variable");
  }
  return Poly(ctx, t_.substitute_many(m));
}

Poly Poly::coefficient_of(VarId v, std::uint32_t n) const {
  if (var_kind(v) == VarKind::Param) throw Error("coefficient_of expects a Del or Lam variable");
  return Poly(ctx_, t_.coefficient_of(v.id, n));
}

std::uint32_t Poly::degree_in(VarId v) const { return t_.degree_in(v.id); }

Poly Poly::evaluate_params(const std::map<std::string, Rational>& bindings) const {
  std::map<std::uint32_t, Rational> by_id;
  for (auto& [name, val] : bindings) {
    auto v = ctx_.find(name);
    if (!v) continue;  // parameter absent from this context: nothing to bind
    if (var_kind(*v) != VarKind::Param)
      throw Error("evaluate_params binds parameters only, got: " + name);
    by_id.emplace(v->id, val);
  }
  SparsePoly<ParamField> out;
  for (auto& [m, c] : t_.terms()) {
    try {
      out.add_term(m, c.evaluate(by_id));
    } catch (const Error&) {
      throw Error("parameter binding vanishes the denominator of coefficient " +
                  to_string(c, ctx_) + " (monomial " + mono_to_string(m, ctx_) + ")");
    }
  }
  return Poly(ctx_, std::move(out));
}

void Poly::collect_params(std::set<std::uint32_t>& out) const {
  for (auto& [m, c] : t_.terms()) c.collect_vars(out);
}

Poly Poly::rename_params(const std::map<std::uint32_t, std::uint32_t>& remap,
                         const Context& fresh) const {
  if (remap.empty()) return Poly(fresh, t_);
  SparsePoly<ParamField> out;
  for (auto& [m, c] : t_.terms()) {
    ParamField cc = ParamField::fraction(c.num().rename_vars(remap), c.den().rename_vars(remap));
    out.add_term(m, cc);
  }
  return Poly(fresh, std::move(out));
}

}  // namespace confal
