#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quartic {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every construction goes through
/// make_rational / parse_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p", "p/q" (decimal integers). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline double to_double(const Rational& q)
{
    return q.get_d();
}

}  // namespace quartic
