#include "confal/param_field.hpp"

namespace confal {

ParamField ParamField::var(VarId v) {
  if (var_kind(v) != VarKind::Param) throw Error("ParamField admits Param variables only");
  ParamField f;
  f.num_ = PPoly::variable(v.id, Rational(1));
  return f;
}

ParamField ParamField::fraction(PPoly num, PPoly den) {
  if (den.is_zero()) throw Error("zero denominator");
  ParamField f(std::move(num), std::move(den), true);
  f.normalize();
  return f;
}

void ParamField::normalize() {
  if (num_.is_zero()) {
    den_ = PPoly::constant(Rational(1));
    return;
  }
  if (den_.total_degree() == 0) {  // constant denominator: absorb
    Rational d = den_.leading_term().second;
    if (d != 1) num_ = num_.scaled(Rational(1) / d);
    den_ = PPoly::constant(Rational(1));
    return;
  }
  PPoly g = pp_gcd(num_, den_);
  if (g.total_degree() > 0) {
    num_ = *pp_divide_exact(num_, g);
    den_ = *pp_divide_exact(den_, g);
  }
  Rational lc = den_.leading_term().second;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (den_.total_degree() == 0) normalize();  // collapsed to a constant
}

bool ParamField::is_one() const {
  return den_.total_degree() == 0 && num_ == PPoly::constant(Rational(1));
}

bool ParamField::has_denominator() const { return den_.total_degree() > 0; }

std::optional<Rational> ParamField::as_rational() const {
  if (has_denominator() || num_.total_degree() > 0) return std::nullopt;
  if (num_.is_zero()) return Rational(0);
  return num_.leading_term().second;
}

ParamField ParamField::operator+(const ParamField& o) const {
  if (!has_denominator() && !o.has_denominator()) return ParamField(num_ + o.num_);
  ParamField r(num_ * o.den_ + o.num_ * den_, den_ * o.den_, true);
  r.normalize();
  return r;
}

ParamField ParamField::operator-(const ParamField& o) const { return *this + (-o); }

ParamField ParamField::operator-() const {
  ParamField r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamField ParamField::operator*(const ParamField& o) const {
  if (is_zero() || o.is_zero()) return ParamField();
  if (!has_denominator() && !o.has_denominator()) return ParamField(num_ * o.num_);
  ParamField r(num_ * o.num_, den_ * o.den_, true);
  r.normalize();
  return r;
}

ParamField ParamField::operator/(const ParamField& o) const {
  if (o.is_zero()) throw Error("division by zero in parameter field");
  if (is_zero()) return ParamField();
  ParamField r(num_ * o.den_, den_ * o.num_, true);
  r.normalize();
  return r;
}

ParamField ParamField::pow(std::uint32_t n) const {
  ParamField r(1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    if (n > 1) base = base * base;
    n >>= 1;
  }
  return r;
}

namespace {
PPoly pp_evaluate(const PPoly& p, const std::map<std::uint32_t, Rational>& bindings) {
  PPoly r;
  for (auto& [m, c] : p.terms()) {
    Rational k = c;
    Mono rest;
    for (auto& [v, e] : m) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest.emplace_back(v, e);
      } else {
        Rational pw(1);
        for (std::uint32_t i = 0; i < e; ++i) pw *= it->second;
        k *= pw;
      }
    }
    r.add_term(rest, k);
  }
  return r;
}
}  // namespace

ParamField ParamField::evaluate(const std::map<std::uint32_t, Rational>& bindings) const {
  PPoly n = pp_evaluate(num_, bindings);
  PPoly d = pp_evaluate(den_, bindings);
  if (d.is_zero()) throw Error("parameter binding makes a denominator vanish");
  ParamField r(std::move(n), std::move(d), true);
  r.normalize();
  return r;
}

ParamField ParamField::subst(const std::map<std::uint32_t, ParamField>& bindings) const {
  auto apply = [&](const PPoly& p) {
    ParamField acc;
    for (auto& [m, c] : p.terms()) {
      ParamField term{Rational(c)};
      Mono rest;
      for (auto& [v, e] : m) {
        auto it = bindings.find(v);
        if (it == bindings.end())
          rest.emplace_back(v, e);
        else
          term = term * it->second.pow(e);
      }
      if (!rest.empty()) {
        PPoly mono;
        mono.add_term(rest, Rational(1));
        term = term * ParamField(mono);
      }
      acc = acc + term;
    }
    return acc;
  };
  return apply(num_) / apply(den_);
}

void ParamField::collect_vars(std::set<std::uint32_t>& out) const {
  num_.collect_vars(out);
  den_.collect_vars(out);
}

}  // namespace confal
