#pragma once

#include "confal/param_field.hpp"
#include "confal/spoly.hpp"
#include "confal/vars.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace confal {

// Polynomial in d and lambda variables with ParamField coefficients; the value
// type of every structure constant and residual. Carries its naming context so
// mixing unrelated universes is caught instead of silently conflating ids.
class Poly {
 public:
  Poly() = default;

  static Poly zero(const Context& ctx) { return Poly(ctx, SparsePoly<ParamField>()); }
  static Poly constant(const Context& ctx, ParamField c) {
    return Poly(ctx, SparsePoly<ParamField>::constant(std::move(c)));
  }
  static Poly constant(const Context& ctx, Rational r) {
    return constant(ctx, ParamField(std::move(r)));
  }
  static Poly variable(const Context& ctx, VarId v, std::uint32_t exp = 1);

  const Context& ctx() const { return ctx_; }
  const SparsePoly<ParamField>::Map& terms() const { return t_.terms(); }
  const SparsePoly<ParamField>& body() const { return t_; }

  bool is_zero() const { return t_.is_zero(); }
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  Poly operator+(const Poly& o) const { return Poly(Context::join(ctx_, o.ctx_), t_ + o.t_); }
  Poly operator-(const Poly& o) const { return Poly(Context::join(ctx_, o.ctx_), t_ - o.t_); }
  Poly operator-() const { return Poly(ctx_, -t_); }
  Poly operator*(const Poly& o) const { return Poly(Context::join(ctx_, o.ctx_), t_ * o.t_); }
  Poly scaled(const ParamField& c) const { return Poly(ctx_, t_.scaled(c)); }
  Poly scaled(const Rational& r) const { return scaled(ParamField(r)); }
  Poly pow(std::uint32_t n) const { return Poly(ctx_, t_.pow(n)); }

  // v must be of kind Del or Lam; parameters are specialized via
  // evaluate_params instead.
  Poly substitute(VarId v, const Poly& r) const;
  Poly substitute_many(const std::vector<std::pair<VarId, Poly>>& subs) const;

  Poly coefficient_of(VarId v, std::uint32_t n) const;
  std::uint32_t degree_in(VarId v) const;

  // Bind parameters (by name) to exact rationals; unbound parameters stay
  // symbolic. Throws when a binding vanishes a stored coefficient denominator,
  // naming the offending coefficient.
  Poly evaluate_params(const std::map<std::string, Rational>& bindings) const;

  void collect_vars(std::set<std::uint32_t>& out) const { t_.collect_vars(out); }
  void collect_params(std::set<std::uint32_t>& out) const;
  bool contains_var(VarId v) const { return t_.contains_var(v.id); }

  Poly with_ctx(const Context& ctx) const { return Poly(Context::join(ctx_, ctx), t_); }
  Poly rename_params(const std::map<std::uint32_t, std::uint32_t>& remap, const Context& fresh) const;

 private:
  Poly(Context ctx, SparsePoly<ParamField> t) : ctx_(std::move(ctx)), t_(std::move(t)) {}
  Context ctx_;
  SparsePoly<ParamField> t_;
};

}  // namespace confal
