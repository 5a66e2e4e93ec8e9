#pragma once

#include "confal/products.hpp"
#include "confal/report.hpp"

namespace confal {

// Residual-based law checkers. Each checker quantifies the relevant law(s)
// over all generator tuples of the named product table(s) and reports one
// LawResult per (law, tuple); a suite passes iff every residual is zero.
// Symmetry tags on tables are not trusted: everything is recomputed.

// a o (b o c) at lambda,mu equals (a o b) o c at lambda+mu.
CheckReport check_associative(const ConformalAlgebra& alg, const std::string& op);

// a o b equals the conjugate product b o a evaluated at -d-lambda.
CheckReport check_commutative(const ConformalAlgebra& alg, const std::string& op);

// Sesquilinearity smoke test, skew-symmetry and the Jacobi identity.
CheckReport check_lie(const ConformalAlgebra& alg, const std::string& op);

// Skew-symmetry plus the Jacobi identity twisted by a module map alpha:
// [alpha(a) (b o c)] = [(a b) alpha(c)] + [alpha(b) (a c)] with the usual
// lambda placements.
CheckReport check_hom_lie(const ConformalAlgebra& alg, const std::string& op,
                          const Endomorphism& alpha);

// Associator symmetry in the first two arguments.
CheckReport check_left_symmetric(const ConformalAlgebra& alg, const std::string& op);

// Left-symmetry plus right-commutativity (a*b)*c = (a*c)*b in shifted form.
CheckReport check_novikov(const ConformalAlgebra& alg, const std::string& op);

// The bracket acts by derivations on circ. When circ is commutative the
// shifted equivalent rewriting is checked as cross-validation alongside the
// direct form (the two are equivalent only in that case).
CheckReport check_poisson_leibniz(const ConformalAlgebra& alg, const std::string& circ,
                                  const std::string& bracket);

// The transposed Leibniz rule 2(a o [b c]) = [(a o b) c] + [b (a o c)]. When
// circ is commutative the shifted equivalent rewriting
// 2([a b] o c) = [a (b o c)] - [b (a o c)] is checked as cross-validation
// (a noncommutative product can satisfy the direct form but not the
// rewriting).
CheckReport check_transposed_leibniz(const ConformalAlgebra& alg, const std::string& circ,
                                     const std::string& bracket);

// Coupling laws between a commutative associative product and a Novikov
// product: mixed associativity, the mixed left-symmetry exchange, and their
// three shifted-argument consequences.
CheckReport check_np_conditions(const ConformalAlgebra& alg, const std::string& circ,
                                const std::string& star);

// star acts by derivations on circ: a*(b o c) = (a*b) o c + b o (a*c).
CheckReport check_prelie_commutative(const ConformalAlgebra& alg, const std::string& circ,
                                     const std::string& star);

// Mixed associativity plus the mixed left-symmetry exchange.
CheckReport check_prelie_poisson(const ConformalAlgebra& alg, const std::string& circ,
                                 const std::string& star);

// Mixed associativity, mixed left-symmetry exchange, and the star-derivation
// law together.
CheckReport check_diff_np(const ConformalAlgebra& alg, const std::string& circ,
                          const std::string& star);

// Shifted-argument consequences of associativity (three identities) and the
// commutation of left multiplications for commutative associative products.
CheckReport check_assoc_remarks(const ConformalAlgebra& alg, const std::string& circ);

// Composite verdicts used as preconditions by constructions and reporting.
bool is_comm_assoc(const ConformalAlgebra& alg, const std::string& circ);
bool is_lie_bracket(const ConformalAlgebra& alg, const std::string& bracket);
bool is_tpca(const ConformalAlgebra& alg, const std::string& circ, const std::string& bracket,
             bool require_commutative = true);

}  // namespace confal
