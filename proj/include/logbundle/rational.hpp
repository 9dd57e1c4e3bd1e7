#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logbundle {

// Arbitrary-precision integers and rationals.  mpq_class keeps its values
// canonical (positive denominator, reduced, zero as 0/1) as long as every
// constructor path goes through canonicalize(); parse_rational does.
using Integer = mpz_class;
using Rational = mpq_class;

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b" with b != 0.  Throws InputError otherwise.
Rational parse_rational(std::string_view text);

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// Binomial polynomial a(a-1)...(a-k+1)/k!, defined for every integer a.
// Agrees with binomial(a, k) when a >= 0.
Integer binomial_poly(long a, long k);

// Least common multiple of the denominators / gcd of numerators helpers.
Integer lcm(const Integer& a, const Integer& b);

}  // namespace logbundle
