#pragma once

#include "confal/algebra.hpp"
#include "confal/report.hpp"
#include "confal/solve.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace confal::wab {

// Rank-1 algebra carrying the bracket [L_x L] = (d + 2x)L.
ConformalAlgebra make_vir();

// Rank-2 algebra W(a,b): [L_x L] = (d+2x)L, [L_x M] = (d+ax+b)M,
// [M_x L] = ((a-1)d+ax-b)M, [M_x M] = 0. Omitted arguments stay symbolic.
ConformalAlgebra make_wab();
ConformalAlgebra make_wab(const Rational& a);
ConformalAlgebra make_wab(const Rational& a, const Rational& b);

// Classified product families over the W(2,b) bracket (entries "1", "2.1",
// "2.2", "2.3", "2.4" and the normal forms "NF1".."NF5"), the zero family
// over symbolic W(a,b) ("1"), and the rank-1 constant family ("vir-c"). Each
// carries tables "circ" and "bracket" with symbolic parameters and declared
// nonzero side conditions. Unknown ids throw.
std::vector<std::string> catalog_ids();
ConformalAlgebra catalog(const std::string& id);

// The eight structure coefficients of a rank-2 product ansatz
//   L o L = f1 L + f2 M,  L o M = g1 L + g2 M,
//   M o L = h1 L + h2 M,  M o M = q1 L + q2 M,
// each a polynomial in d and the designated lambda variable x (other lambda
// variables are rejected), plus named side conditions assumed nonzero.
struct CandidateOctuple {
  Context ctx;
  Poly f1, f2, g1, g2, h1, h2, q1, q2;
  std::set<std::string> nonzero;

  static CandidateOctuple zero(const Context& ctx);
  std::array<const Poly*, 8> functions() const;
  static const std::array<const char*, 8>& function_names();
};

// Extracts the octuple from a rank-2 algebra's circ table, carrying over the
// algebra's nonzero parameter assumptions.
CandidateOctuple algebra_octuple(const ConformalAlgebra& alg);

// Extracts a candidate's octuple from a rank-2 catalog entry's circ table.
CandidateOctuple catalog_octuple(const std::string& id);

struct ResidualEntry {
  std::string label;  // e.g. "assoc(L,M,L):M" or "leibniz(M,L,M):L"
  Poly residual;
};

struct ResidualSystem {
  std::vector<ResidualEntry> entries;

  bool empty() const;                              // all residuals zero
  const Poly* find(const std::string& label) const;
  std::vector<std::string> nonzero_labels() const;
};

// The full compatibility system for the candidate over the W(a,b) bracket:
// for both laws (associativity of o, and the transposed Leibniz rule linking
// o to the bracket), every ordered generator triple, and every output
// generator, the engine-computed residual. Empty system == the candidate is a
// compatible structure.
ResidualSystem residual_system(const CandidateOctuple& c, const Poly& a, const Poly& b);
ResidualSystem residual_system(const CandidateOctuple& c, const Rational& a, const Rational& b);

// Hard-coded transcriptions of the thirty coefficient equations equivalent to
// the system above, written out function-by-function (substitutions of the
// form f(d+x, y), f(-x-y, x), f(d, x+y), f(d+y, x)). Kept independent of the
// residual engine so the two derivations cross-check each other. The two
// all-zero component slots have no transcription; `labels` selects a subset.
std::vector<std::string> oracle_labels();
ResidualSystem equation_oracle(const CandidateOctuple& c, const Poly& a, const Poly& b,
                               const std::vector<std::string>& labels = {});

// Shape reduction at a = 2: substituting g1 = q1 = 0, h1 = q2 = c0,
// f1 = g2 = p(x), f2 = s(x), h2 = l(x) with generic coefficients collapses
// the full residual system onto exactly six reduced equations (every residual
// is zero or matches one of the six up to sign, and all six occur); breaking
// h1 = q2 breaks the system. Degree is the generic-coefficient bound on p,s,l.
CheckReport verify_lemma_A(std::uint32_t degree = 3);

// Triviality off the a = 2 line: at the given numeric (a, b) the full-system
// bounded-degree solver admits only the zero octuple.
CheckReport verify_lemma_A(const Rational& a, const Rational& b, std::uint32_t degree);

// Solves the six reduced equations with p, s, l as unknown-coefficient
// polynomials of degree <= degree and c0 scalar: linear elimination plus
// zero/nonzero splits on c0 and then on the constant term c1 of p (depth
// counts those splits). With assume_c0_zero the c0 = 0 case is substituted up
// front. Family assumptions touching the shape of l are rendered as "l = 0" /
// "l = c1" when the bindings support it.
SolveResult solve_reduced(std::uint32_t degree, std::uint32_t depth,
                          bool assume_c0_zero = false);

// Full-system bounded-degree ansatz solver at numeric (a, b): unknowns are
// the d^i x^j coefficients (i, j <= degree) of all eight functions.
SolveResult solve_full(const Rational& a, const Rational& b, std::uint32_t degree);

// Rank-1 analogue on the Virasoro bracket: one unknown function f(d, x).
SolveResult solve_vir(std::uint32_t degree);

// Basis-change verification: case (2.2) maps onto NF2; case (2.3) onto NF3
// for nonzero b, onto NF3 (b = 0) or NF4 depending on c3 at b = 0; case (2.4)
// onto NF5 with c = m + k b. Also checks every normal form satisfies
// associativity, the Lie axioms, and the transposed Leibniz rule.
CheckReport verify_normal_forms();

// Rank-1 classification: the constant family passes every check with symbolic
// parameter; the bounded-degree solver returns exactly the constant family;
// the candidate f = d fails associativity with a printed residual.
CheckReport verify_vir_classification(std::uint32_t degree = 3);

}  // namespace confal::wab
