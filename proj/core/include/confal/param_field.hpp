#pragma once

#include "confal/pgcd.hpp"
#include "confal/spoly.hpp"

#include <map>
#include <optional>
#include <set>

namespace confal {

// Rational function in Param variables, always normalized: gcd(num, den) = 1,
// denominator monic w.r.t. the graded-lex leading term, zero stored as 0/1.
// This is the coefficient field for all d/lambda polynomials.
class ParamField {
 public:
  ParamField() : num_(), den_(PPoly::constant(Rational(1))) {}
  explicit ParamField(int v) : ParamField(Rational(v)) {}
  explicit ParamField(Rational r)
      : num_(PPoly::constant(std::move(r))), den_(PPoly::constant(Rational(1))) {}
  explicit ParamField(PPoly p) : num_(std::move(p)), den_(PPoly::constant(Rational(1))) {}

  static ParamField var(VarId v);
  static ParamField fraction(PPoly num, PPoly den);  // throws on den == 0

  const PPoly& num() const { return num_; }
  const PPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool has_denominator() const;
  std::optional<Rational> as_rational() const;

  ParamField operator+(const ParamField& o) const;
  ParamField operator-(const ParamField& o) const;
  ParamField operator-() const;
  ParamField operator*(const ParamField& o) const;
  ParamField operator/(const ParamField& o) const;  // throws on zero divisor
  ParamField pow(std::uint32_t n) const;

  bool operator==(const ParamField&) const = default;

  // Partial specialization of parameters to exact rationals. Throws Error when
  // a binding makes the denominator vanish.
  ParamField evaluate(const std::map<std::uint32_t, Rational>& bindings) const;

  // Full substitution of parameters by field elements (solver back-substitution).
  ParamField subst(const std::map<std::uint32_t, ParamField>& bindings) const;

  void collect_vars(std::set<std::uint32_t>& out) const;

 private:
  ParamField(PPoly num, PPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  PPoly num_, den_;
};

inline bool coeff_is_zero(const ParamField& f) { return f.is_zero(); }

}  // namespace confal
