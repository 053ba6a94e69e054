#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace vwt {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent of the prime `p` in a nonzero rational (negative when p divides
/// the denominator).
long rational_valuation(const Rational& q, long p);

/// Parses "a", "-a", or "a/b" in base 10. Returns the canonical form.
std::optional<Rational> parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Always "num/den" (the wire format).
std::string rational_to_wire(const Rational& q);

}  // namespace vwt
