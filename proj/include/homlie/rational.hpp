#ifndef HOMLIE_RATIONAL_HPP
#define HOMLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace homlie {

// Exact rational scalar. Always kept canonical: lowest terms, denominator > 0.
// GMP's mpq keeps results of arithmetic canonical as long as the operands are,
// so only construction from raw strings/integers needs explicit care (use the
// helpers below).
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical rational from an integer pair; throws PreconditionError on den == 0.
Rational rat(long num, long den = 1);

/// Parse "p" or "p/q" (no whitespace, q > 0 in the source text, value reduced
/// on the way in). Throws ParseError on anything else.
Rational rat_parse(std::string_view s);

/// Serialize in lowest terms, "p" or "p/q" with q > 1.
std::string rat_str(const Rational& q);

}  // namespace homlie

#endif
