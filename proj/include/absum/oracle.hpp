#pragma once

#include <vector>

#include "absum/exact.hpp"

namespace absum {

enum class SumFamily { full_square, triangle, single_plain, single_squared };

// One double-sum instance: sum over i,j of |i^s j^t (i^k - j^k)^beta|
// C(2n,n+i) C(2n,n+j) for the full-square family; the other families reuse
// the (s, t) slots as documented on the evaluators below.
struct SumSpec {
  long s = 0;
  long t = 0;
  long k = 1;
  long beta = 1;
  SumFamily family = SumFamily::full_square;
};

// C(2n, n+i) for i = 0..n.
std::vector<BigInt> central_row(long n);

// Sum over -n <= i, j <= n of |i^s j^t (i^k - j^k)^beta| C(2n,n+i) C(2n,n+j),
// with 0^0 = 1.
BigInt full_square_sum(const SumSpec& spec, long n);

// Sum over 0 <= i <= j of i^s j^t C(2n,n+i) C(2m,m+j), i ranging 0..n and
// j ranging i..m.
BigInt triangle_sum(long s, long t, long n, long m);

// Sum over j = 1..n of j^power C(2n,n+j), squared binomial when requested.
BigInt single_sum(long power, bool squared, long n);

}  // namespace absum
