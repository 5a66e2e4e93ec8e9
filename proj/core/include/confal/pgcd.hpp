#pragma once

#include "confal/spoly.hpp"

#include <optional>

namespace confal {

// Exact polynomial division; nullopt when b does not divide a.
std::optional<PPoly> pp_divide_exact(const PPoly& a, const PPoly& b);

// Rational content (gcd of coefficients, sign of the leading coefficient);
// p == content * primitive with the primitive part having integer coefficients
// whose gcd is 1 and positive leading coefficient.
Rational pp_content(const PPoly& p);
PPoly pp_primitive(const PPoly& p);

// Multivariate gcd via primitive pseudo-remainder sequences. Result is
// primitive with positive leading coefficient (1 for coprime inputs).
PPoly pp_gcd(const PPoly& a, const PPoly& b);

}  // namespace confal
