#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "absum/exact.hpp"

namespace absum {

// Outcome of sweeping sum_{i,j} |j^2-i^2| C(2n,n+i) C(2m,m+j) against
// 2nm C(2n,n) C(2m,m) over 0 <= m, n <= max. On a passing run violations is
// empty and equality happens exactly on the diagonal m = n.
struct InequalityReport {
  long max = 0;
  std::vector<std::pair<long, long>> violations;    // (m, n), sorted
  std::vector<std::pair<long, long>> equality_set;  // (m, n), sorted
};

InequalityReport theorem_inequality_check(long max);

// alpha-weighted quarter of the two-parameter sum:
//   sum_{i,j >= 0} alpha(i=0) alpha(j=0) |j^2-i^2| C(2n,n+i) C(2m,m+j),
// with alpha = 1/2 on the boundary. Four times this is the full sum.
BigRat weighted_abs_square_sum(long n, long m);

// The decomposition of the weighted sum into nm/2 C(2n,n)C(2m,m) plus
// 2(m-n) times the cross-difference sum, checked by direct summation. The
// cross-difference sum runs over 0 <= i <= j with alpha(i=j) = 1/2 on the
// diagonal; that diagonal is identically zero for n, m >= 1 (so the strict
// i < j form is recovered there) and carries the identity across the n = 0
// and m = 0 rows where the shifted binomial rows degenerate.
bool decomposition_identity_check(long n, long m);

// The telescoped identity behind the decomposition:
//   4 sum alpha(i=0) alpha(i=j)
//       (C(2n-2,n+j-1)C(2m,m+i) - C(2n,n+i)C(2m-2,m+j-1))
//   + sum alpha(i=0) alpha(i=j)
//       (C(2n,n+i)C(2m,m+j) - C(2n,n+j)C(2m,m+i))
//   == -(m-n)/(4(m+n)) C(2n,n)C(2m,m)   over 0 <= i <= j,
// with the same diagonal convention as the decomposition.
// Returns nullopt for (0,0), where the right-hand side divides by zero.
std::optional<bool> gosper_identity_check(long n, long m);

// Term-wise comparison C(2n,n+i)C(2m-2,m+j-1) >= C(2n-2,n+j-1)C(2m,m+i)
// for m >= n and i < j, strict off the diagonal wherever the products are
// nonzero. Out-of-support binomials count as zero here.
bool termwise_ratio_check(long max);

}  // namespace absum
