#pragma once

#include <gmpxx.h>

#include <string>

namespace ramsey {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// base^e for integer e (negative allowed; base must be nonzero then).
Rational pow_int(const Rational& base, long e);

BigInt binomial(unsigned long n, unsigned long k);

/// Accepts "3/4", "-7", "0.045", "1e-3", "2.5e2".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Smallest integer >= q.
BigInt ceil_rational(const Rational& q);

}  // namespace ramsey
