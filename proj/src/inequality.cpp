#include "absum/inequality.hpp"

#include <algorithm>

#include "absum/oracle.hpp"

namespace absum {

namespace {

// Binomial with every out-of-support index, including a negative upper one,
// evaluating to zero. The shifted rows C(2n-2, .) at n = 0 need this.
BigInt binom0(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(n, k);
}

BigRat alpha(bool on_boundary) { return on_boundary ? BigRat(1, 2) : BigRat(1); }

}  // namespace

InequalityReport theorem_inequality_check(long max) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(max) + 1);
  for (long n = 0; n <= max; ++n) rows.push_back(central_row(n));

  InequalityReport report;
  report.max = max;
  for (long m = 0; m <= max; ++m) {
    for (long n = 0; n <= max; ++n) {
      const auto& row_n = rows[static_cast<std::size_t>(n)];
      const auto& row_m = rows[static_cast<std::size_t>(m)];
      BigInt lhs = 0;
      for (long a = 0; a <= n; ++a) {
        const long wa = a == 0 ? 1 : 2;
        for (long b = 0; b <= m; ++b) {
          const long diff = b * b - a * a;
          if (diff == 0) continue;
          const long wb = b == 0 ? 1 : 2;
          lhs += BigInt(wa * wb * (diff < 0 ? -diff : diff)) *
                 row_n[static_cast<std::size_t>(a)] *
                 row_m[static_cast<std::size_t>(b)];
        }
      }
      const BigInt rhs = BigInt(2 * m) * n * row_n[0] * row_m[0];
      if (lhs < rhs) {
        report.violations.emplace_back(m, n);
      } else if (lhs == rhs) {
        report.equality_set.emplace_back(m, n);
      }
    }
  }
  return report;
}

BigRat weighted_abs_square_sum(long n, long m) {
  const auto row_n = central_row(n);
  const auto row_m = central_row(m);
  BigRat total = 0;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= m; ++j) {
      const long diff = j * j - i * i;
      if (diff == 0) continue;
      total += alpha(i == 0) * alpha(j == 0) *
               BigRat(BigInt(diff < 0 ? -diff : diff) *
                      row_n[static_cast<std::size_t>(i)] *
                      row_m[static_cast<std::size_t>(j)]);
    }
  }
  return total;
}

namespace {

// Cross-difference sum of the decomposition identity,
//   sum_{0 <= i <= j} alpha(i=0) alpha(i=j)
//     (C(2n,n+i)C(2m-2,m+j-1) - C(2n-2,n+j-1)C(2m,m+i)).
// The diagonal i = j telescopes to zero whenever n, m >= 1, so this equals
// the strict i < j sum there; with the half-weighted diagonal included the
// identity also covers the n = 0 and m = 0 rows, where the shifted binomial
// rows degenerate.
BigRat cross_difference_sum(long n, long m) {
  const long jmax = std::max(n, m);
  BigRat total = 0;
  for (long j = 0; j <= jmax; ++j) {
    for (long i = 0; i <= j; ++i) {
      const BigInt inner =
          binom0(2 * n, n + i) * binom0(2 * m - 2, m + j - 1) -
          binom0(2 * n - 2, n + j - 1) * binom0(2 * m, m + i);
      if (inner != 0) total += alpha(i == 0) * alpha(i == j) * BigRat(inner);
    }
  }
  return total;
}

}  // namespace

bool decomposition_identity_check(long n, long m) {
  const BigRat lhs = weighted_abs_square_sum(n, m);
  const BigRat rhs =
      BigRat(BigInt(n) * m * binomial(2 * n, n) * binomial(2 * m, m)) / 2 +
      2 * BigRat(m - n) * cross_difference_sum(n, m);
  return lhs == rhs;
}

std::optional<bool> gosper_identity_check(long n, long m) {
  if (n == 0 && m == 0) return std::nullopt;
  const long jmax = std::max(n, m);
  BigRat lhs = 0;
  for (long j = 0; j <= jmax; ++j) {
    for (long i = 0; i <= j; ++i) {
      const BigInt telescoped =
          binom0(2 * n - 2, n + j - 1) * binom0(2 * m, m + i) -
          binom0(2 * n, n + i) * binom0(2 * m - 2, m + j - 1);
      const BigInt antisym = binom0(2 * n, n + i) * binom0(2 * m, m + j) -
                             binom0(2 * n, n + j) * binom0(2 * m, m + i);
      const BigInt combined = 4 * telescoped + antisym;
      if (combined != 0) {
        lhs += alpha(i == 0) * alpha(i == j) * BigRat(combined);
      }
    }
  }
  const BigRat rhs = -BigRat(m - n) / BigRat(4 * (m + n)) *
                     BigRat(binomial(2 * n, n) * binomial(2 * m, m));
  return lhs == rhs;
}

bool termwise_ratio_check(long max) {
  for (long n = 0; n <= max; ++n) {
    for (long m = n; m <= max; ++m) {
      for (long j = 1; j <= max; ++j) {
        for (long i = 0; i < j; ++i) {
          const BigInt lhs = binom0(2 * n, n + i) * binom0(2 * m - 2, m + j - 1);
          const BigInt rhs = binom0(2 * n - 2, n + j - 1) * binom0(2 * m, m + i);
          if (lhs < rhs) return false;
          if (m > n && lhs == rhs && lhs != 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace absum
