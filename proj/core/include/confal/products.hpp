#pragma once

#include "confal/algebra.hpp"

namespace confal {

// First pool lambda variable not occurring in any of the elements/polys.
VarId fresh_lam(const Context& ctx, const std::vector<const LambdaElement*>& elems,
                const std::vector<const Poly*>& polys = {});

// x o_v y for the named product, extended from the table by conformal
// sesquilinearity: sum_ij x_i(d -> -v) y_j(d -> d+v) table(i,j)(lambda -> v).
// v must not occur in x or y.
LambdaElement eval_product(const ConformalAlgebra& alg, const std::string& op,
                           const LambdaElement& x, const LambdaElement& y, VarId v);

// Product evaluated at an arbitrary polynomial index (e.g. lambda+mu or
// -d-lambda): evaluated at a fresh variable first, substituted afterwards.
LambdaElement eval_product_at(const ConformalAlgebra& alg, const std::string& op,
                              const LambdaElement& x, const LambdaElement& y,
                              const Poly& target);

// Coordinatewise substitution of v by target (canonically -d-lambda).
LambdaElement conjugate(const ConformalAlgebra& alg, const LambdaElement& expr, VarId v,
                        const Poly& target);

// n-th product of generators i,j from the divided-power expansion:
// n! * (coefficient of lambda^n in the table entry).
LambdaElement nth_product(const ConformalAlgebra& alg, const std::string& op, std::size_t i,
                          std::size_t j, std::uint32_t n);

// n-th product of arbitrary elements.
LambdaElement nth_product_of(const ConformalAlgebra& alg, const std::string& op,
                             const LambdaElement& x, const LambdaElement& y, std::uint32_t n);

LambdaElement apply_endo(const Endomorphism& e, const LambdaElement& x);

struct LabeledResidual {
  std::string label;
  LambdaElement residual;
};

// Nonzero residuals of D(e_i o e_j) - D(e_i) o e_j - e_i o D(e_j); empty
// result means D is a derivation of the product.
std::vector<LabeledResidual> is_derivation(const ConformalAlgebra& alg, const std::string& op,
                                           const Endomorphism& D);

Rational factorial(std::uint32_t n);

std::string to_string(const LambdaElement& e, const std::vector<std::string>& gens);

}  // namespace confal
