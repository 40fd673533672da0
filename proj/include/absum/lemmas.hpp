#pragma once

#include <functional>

#include "absum/exact.hpp"

namespace absum {

// Sum over k in [lower, upper_exclusive) under the three-case convention
//   forward sum          if upper_exclusive > lower,
//   zero                 if equal,
//   negated reversed sum if upper_exclusive < lower.
// This is what makes one closed form cover both n >= m and n < m below.
struct SignedRange {
  long lower = 0;
  long upper_exclusive = 0;
};

BigRat signed_sum(const SignedRange& range,
                  const std::function<BigRat(long)>& term);

// Closed forms for the four fundamental triangle sums
//   sum_{0 <= i <= j} i^a j^b C(2n,n+i) C(2m,m+j),  a,b in {0,1}.
// Each equals triangle_sum(a, b, n, m) for all non-negative n, m.
BigRat fundamental_S00(long n, long m);
BigRat fundamental_S10(long n, long m);
BigRat fundamental_S01(long n, long m);
BigRat fundamental_S11(long n, long m);

// Closed forms for the single sums sum_{j=1}^{n} j^p C(2n,n+j)^e:
//   p = 2k,   e = 1  -> single_even_plain
//   p = 2k+1, e = 1  -> single_odd_plain
//   p = 2k,   e = 2  -> single_even_squared
//   p = 2k+1, e = 2  -> single_odd_squared
BigRat single_even_plain(long k, long n);
BigRat single_odd_plain(long k, long n);
BigRat single_even_squared(long k, long n);
BigRat single_odd_squared(long k, long n);

// sum_{i=0}^{m} C(2m,m+i) C(2n,n+i) == C(2m,m)C(2n,n)/2 + C(2m+2n,m+n)/2,
// checked by direct summation.
bool chu_vandermonde_check(long n, long m);

// sum_{j=1}^{n} j C(2n-2b,n+j-b) C(2n,n+j)
//   == (2n(n-b)/(2n-b)) C(2n-2b-1,n-b) C(2n-1,n), for 0 <= b <= n-1.
bool dixon_identity_check(long n, long b);

}  // namespace absum
