#pragma once

#include "confal/checks.hpp"

namespace confal {

// Seven consequences of the transposed Poisson axioms, three- and
// four-element cyclic/exchange identities in up to three spectral variables
// (x, y, z). The laws only follow when the input is a full transposed Poisson
// pair; on input that fails those axioms the report contains a single passing
// "vacuous" entry instead of residuals.
//
// The identity shapes (all summed over generator tuples; residual must be 0):
//   circ-bracket-cyclic     x o [y z] + y o [z x] + z o [x y]
//   bracket-circ-cyclic     [x y] o z + [y z] o x + [z x] o y
//   scaled-bracket-cyclic   [(h o [x y]) z] + [(h o [y z]) x] + [(h o [z x]) y]
//   bracket-scaled-cyclic   [[x y] (h o z)] + [[y z] (h o x)] + [[z x] (h o y)]
//   paired-brackets-cyclic  [h x] o [y z] + [h y] o [z x] + [h z] o [x y]
//   double-product-exchange [(u o x) (v o y)] + [(v o x) (u o y)] - 2(u o v) o [x y]
//   shifted-product-exchange x o [u (v o y)] + [(v o x) u] o y - (u o v) o [x y]
// with the spectral shifts of each term spelled out in the implementation.
CheckReport check_theorem_identities(const ConformalAlgebra& alg, const std::string& circ,
                                     const std::string& bracket);

// Coefficientwise form of the transposed Leibniz rule through the divided
// n-th products: for all n, m <= N and all generator triples,
//   2 (a_(n) (b_[m] c)) = sum_j C(n,j) (a_(j) b)_[n+m-j] c + b_[m] (a_(n) c),
// where (k) is the k-th circ product and [k] the k-th bracket product. With N
// at least one above the largest lambda-degree in the tables this is
// equivalent to the generating-function form of the rule.
CheckReport check_nth_transposed_leibniz(const ConformalAlgebra& alg, const std::string& circ,
                                         const std::string& bracket, std::uint32_t N);

// Joint compatibility criterion: a pair satisfies the Leibniz rule and the
// transposed Leibniz rule simultaneously exactly when all mixed triple
// products vanish identically:
//   a o [b c] = 0,   [b a] o c = 0,   [(a o b) c] = 0.
struct CompatibilityVerdict {
  bool both_hold = false;              // Leibniz and transposed Leibniz both pass
  bool triple_products_vanish = false; // the three displayed families are zero
  bool agreement = false;              // both_hold == triple_products_vanish
  CheckReport details;                 // residuals of the triple-product families
};

CompatibilityVerdict check_compatibility_criterion(const ConformalAlgebra& alg,
                                                   const std::string& circ,
                                                   const std::string& bracket);

}  // namespace confal
