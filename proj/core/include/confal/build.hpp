#pragma once

#include "confal/algebra.hpp"
#include "confal/basis.hpp"

namespace confal {

// Finite-dimensional algebra over the scalar field, given by structure
// constants for a bilinear product and a bilinear bracket (either may be all
// zero). Constants are stored row-major: e_i * e_j = sum_k const[(i*dim+j)*dim+k] e_k.
class OrdinaryAlgebra {
 public:
  OrdinaryAlgebra(Context ctx, std::vector<std::string> generators,
                  std::vector<ParamField> product, std::vector<ParamField> bracket);
  static OrdinaryAlgebra zero(Context ctx, std::vector<std::string> generators);

  const Context& ctx() const { return ctx_; }
  std::size_t dim() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const ParamField& product_const(std::size_t i, std::size_t j, std::size_t k) const;
  const ParamField& bracket_const(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  Context ctx_;
  std::vector<std::string> generators_;
  std::vector<ParamField> product_;
  std::vector<ParamField> bracket_;
};

// Current algebra C[d] (x) A: one generator per basis vector, tables "circ"
// and "bracket" copied verbatim from the structure constants (d- and
// lambda-free).
ConformalAlgebra current(const OrdinaryAlgebra& ord);

// Tensor product over C[d] under the identification
// p(d)u (x) q(d)v = p(d)q(d) (u (x) v), with
//   (a1(x)a2) o (b1(x)b2)   = (a1 o b1) (x) (a2 o b2),
//   [(a1(x)a2) (b1(x)b2)]   = [a1 b1](x)(a2 o b2) + (a1 o b1)(x)[a2 b2].
// Both factors must carry "circ"/"bracket" tables passing the full transposed
// Poisson checks (commutative circ included); the construction is not defined
// otherwise. Parameters with equal names in both factors are identified.
ConformalAlgebra tensor(const ConformalAlgebra& a1, const ConformalAlgebra& a2);

// Direct sum: block-diagonal tables for every key present in both summands,
// cross products zero. Symmetry tags are kept when the summands agree.
ConformalAlgebra direct_sum(const ConformalAlgebra& a1, const ConformalAlgebra& a2);

// Commutator bracket [a b] = a * b - conjugate(b * a) of a lambda-product,
// tagged skew.
StructureTable commutator(const ConformalAlgebra& alg, const std::string& star);

// Derived product a * b = a o D(b) for a derivation D of o; rejects D that is
// not a derivation, naming the first offending pair.
StructureTable derivation_product(const ConformalAlgebra& alg, const std::string& circ,
                                  const Endomorphism& D);

// Multiplication-by-h endomorphism alpha_h(x) = (h o_lambda x) at lambda = 0.
// h must be an actual algebra element: coefficients polynomial in d only.
Endomorphism alpha_h(const ConformalAlgebra& alg, const std::string& circ,
                     const LambdaElement& h);

// Twisted bracket [x y]^h = (h o_mu [x y]) at mu = 0; skew tag is preserved
// from the input bracket.
StructureTable h_bracket(const ConformalAlgebra& alg, const std::string& circ,
                         const std::string& bracket, const LambdaElement& h);

// Rewrite every table of alg in the new C[d]-basis e'_i = sum_j T(i,j)(d) e_j.
// Symmetry tags carry over (and are re-verified on construction).
ConformalAlgebra change_basis(const ConformalAlgebra& alg, const BasisChange& T);

}  // namespace confal
