#pragma once

#include "confal/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace confal {

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos(pos) {}
  std::size_t pos;
};

// Expression grammar: `d` is the derivation symbol, x/y/z/w (and v4..v11) are
// lambda variables, any other identifier is interned as a parameter. Operators
// + - * / ^ with nonnegative integer exponents; `/` requires a divisor free of
// d/lambda variables. Whitespace-insensitive.
Poly parse_poly(Context& ctx, std::string_view text);

// As parse_poly, but unknown identifiers are an error instead of being
// interned as new parameters (used for files with declared parameter lists).
Poly parse_poly_strict(Context& ctx, std::string_view text);

// Canonical printers; output re-parses to the same value.
std::string to_string(const Poly& p);
std::string to_string(const ParamField& c, const Context& ctx);
std::string to_string(const PPoly& p, const Context& ctx);
std::string mono_to_string(const Mono& m, const Context& ctx);

}  // namespace confal
