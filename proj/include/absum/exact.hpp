#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace absum {

// All arithmetic in this project is exact. Integers and rationals are
// arbitrary precision; rationals are kept canonical (reduced, positive
// denominator, zero is 0/1), which mpq guarantees as long as values are
// built through the helpers below.
using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k) with the standard convention C(n, k) = 0 for k < 0 or k > n.
// A negative upper index has no agreed meaning in this code base and is
// rejected loudly.
BigInt binomial(long n, long k);

// Rising factorial (alpha)_m, extended to negative m:
//   (alpha)_m = alpha (alpha+1) ... (alpha+m-1)         for m > 0
//   (alpha)_0 = 1
//   (alpha)_m = 1 / ((alpha-1)(alpha-2) ... (alpha+m))  for m < 0
// Throws "pochhammer-pole" when the m < 0 branch divides by zero.
BigRat pochhammer(const BigRat& alpha, long m);

// 2^e for any integer e (negative exponents give exact fractions).
BigRat pow2(long e);

// base^e with 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned long e);

// Canonical rational from an integer pair; denominator must be nonzero.
BigRat make_rat(const BigInt& num, const BigInt& den);

// "p/q" or bare "p"; result is canonical. Throws std::invalid_argument on
// malformed input or zero denominator.
BigRat parse_rational(const std::string& text);

// Always emits "p/q" with the canonical representation, including "p/1".
std::string format_rational(const BigRat& value);

}  // namespace absum
