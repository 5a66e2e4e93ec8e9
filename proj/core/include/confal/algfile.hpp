#pragma once

#include "confal/algebra.hpp"

#include <string>

namespace confal {

// Line-oriented algebra definition:
//
//   # comment
//   params: b, c1 nonzero, c2
//   generators: L, M
//   table circ:
//     L L = c1*L + c2*x*M
//     L M = c1*M
//   table bracket skew:
//     L L = (d + 2*x)*L
//     ...
//
// Sections may appear once each ("params:" is optional); every ordered
// generator pair appears at most once per table and missing pairs default to
// the zero product. Right-hand sides are sums of signed terms, each a product
// of coefficient factors (the expression grammar over d, x and declared
// parameters) ending in a generator name; "0" stands for the zero element.
// A declared symmetry tag (commutative/skew) is verified on load.
ConformalAlgebra parse_algebra_file(const std::string& text);

// Canonical printing: parameters in declaration order, tables alphabetically,
// entries row-major with zero entries omitted, every coefficient rendered by
// the canonical polynomial printer. Parameters that occur in no table are not
// printed, so basis changes that eliminate a parameter print without it.
// parse(print(alg)) reproduces the algebra whenever every declared parameter
// occurs in a table, and printing is a fixed point of parse-then-print.
std::string print_algebra_file(const ConformalAlgebra& alg);

}  // namespace confal
