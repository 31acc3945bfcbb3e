#pragma once

// Exact rational scalars. GMP's mpq_class keeps values in lowest terms with a
// positive denominator after every arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rzr {

using Rat = mpq_class;
using Int = mpz_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// Inverse of to_string; also accepts surrounding whitespace.
Rat parse_rat(std::string_view text);

Int factorial(unsigned long n);
Int pow2(unsigned long e);

/// Scales a rational vector by the lcm of its denominators and divides by the
/// gcd of the result. The zero vector maps to the zero vector.
IntVector primitive_integer_vector(const RatVector& v);

/// Flips sign so that the first nonzero entry is negative.
void normalize_sign_first_negative(IntVector& v);

RatVector to_rat_vector(const IntVector& v);

}  // namespace rzr
