#include "absum/lemmas.hpp"

#include "absum/expansion.hpp"

namespace absum {

BigRat signed_sum(const SignedRange& range,
                  const std::function<BigRat(long)>& term) {
  BigRat total = 0;
  if (range.upper_exclusive > range.lower) {
    for (long k = range.lower; k < range.upper_exclusive; ++k) total += term(k);
  } else if (range.upper_exclusive < range.lower) {
    for (long k = range.upper_exclusive; k < range.lower; ++k) total -= term(k);
  }
  return total;
}

BigRat fundamental_S00(long n, long m) {
  return pow2(2 * n + 2 * m - 3) +
         BigRat(binomial(2 * n + 2 * m, n + m)) / 4 +
         BigRat(binomial(2 * n, n) * binomial(2 * m, m)) / 2 +
         pow2(2 * m - 2) * BigRat(binomial(2 * n, n)) -
         signed_sum({0, n - m + 1},
                    [&](long l) {
                      return BigRat(binomial(2 * n - 2 * l, n - l) *
                                    binomial(2 * m + 2 * l, m + l));
                    }) /
             8;
}

BigRat fundamental_S10(long n, long m) {
  return BigRat(-n) * BigRat(binomial(2 * n + 2 * m, n + m)) / 4 +
         BigRat(n) * pow2(2 * m - 2) * BigRat(binomial(2 * n, n)) +
         BigRat(n) *
             signed_sum({0, n - m + 1},
                        [&](long l) {
                          return BigRat(binomial(2 * n - 2 * l, n - l) *
                                        binomial(2 * m + 2 * l, m + l));
                        }) /
             8 -
         BigRat(n) *
             signed_sum({0, n - m},
                        [&](long l) {
                          return BigRat(binomial(2 * n - 2 * l - 2, n - l - 1) *
                                        binomial(2 * m + 2 * l, m + l));
                        }) /
             2;
}

BigRat fundamental_S01(long n, long m) {
  // Every term carries the factor m; return before C(2m-2, m-2) is formed
  // with a negative upper index.
  if (m == 0) return 0;
  return BigRat(m) * BigRat(binomial(2 * n + 2 * m, n + m)) / 4 +
         BigRat(m) * BigRat(binomial(2 * n, n) * binomial(2 * m - 2, m - 2)) -
         BigRat(m) *
             signed_sum({0, n - m + 1},
                        [&](long l) {
                          return BigRat(binomial(2 * n - 2 * l, n - l) *
                                        binomial(2 * m + 2 * l, m + l));
                        }) /
             8 +
         BigRat(m) *
             signed_sum({0, n - m + 2},
                        [&](long l) {
                          return BigRat(
                              binomial(2 * n - 2 * l, n - l) *
                              binomial(2 * m + 2 * l - 2, m + l - 1));
                        }) /
             2;
}

BigRat fundamental_S11(long n, long m) {
  if (n == 0 || m == 0) return 0;
  const BigRat mn(BigInt(m) * n);
  return mn * BigRat(binomial(2 * n + 2 * m - 2, n + m - 1)) / 2 -
         mn * BigRat(binomial(2 * n + 2 * m - 2, n + m - 2)) / 2 +
         mn *
             signed_sum({0, n - m + 1},
                        [&](long l) {
                          return BigRat(binomial(2 * n - 2 * l, n - l) *
                                        binomial(2 * m + 2 * l, m + l));
                        }) /
             8 -
         mn *
             signed_sum({0, n - m},
                        [&](long l) {
                          return BigRat(binomial(2 * n - 2 * l - 2, n - l - 1) *
                                        binomial(2 * m + 2 * l, m + l));
                        }) /
             2;
}

namespace {

BigRat zero_power_term(long k) {  // 0^{2k} with 0^0 = 1
  return k == 0 ? 1 : 0;
}

}  // namespace

BigRat single_even_plain(long k, long n) {
  const auto table = expansion_coeffs(k);
  BigRat sum = 0;
  for (long b = 0; b <= k; ++b) {
    sum += table.coeffs[static_cast<std::size_t>(b)](BigRat(n)) *
           pochhammer(BigRat(2 * n - 2 * b + 1), 2 * b) * pow2(-2 * b - 1);
  }
  return -zero_power_term(k) * BigRat(binomial(2 * n, n)) / 2 +
         pow2(2 * n) * sum;
}

BigRat single_odd_plain(long k, long n) {
  const auto table = expansion_coeffs(k);
  BigRat sum = 0;
  for (long b = 0; b <= k; ++b) {
    sum += table.coeffs[static_cast<std::size_t>(b)](BigRat(n)) *
           pochhammer(BigRat(n - b), b + 1) * pochhammer(BigRat(n - b + 1), b);
  }
  return BigRat(binomial(2 * n, n)) * sum / 2;
}

BigRat single_even_squared(long k, long n) {
  const auto table = expansion_coeffs(k);
  const BigRat central(binomial(2 * n, n));
  BigRat sum = 0;
  for (long b = 0; b <= k; ++b) {
    const BigRat factor = table.coeffs[static_cast<std::size_t>(b)](BigRat(n)) *
                          pochhammer(BigRat(2 * n - 2 * b + 1), 2 * b);
    if (factor == 0) continue;  // keeps C(4n-2b, 2n-b) within support
    sum += factor * BigRat(binomial(4 * n - 2 * b, 2 * n - b));
  }
  return -zero_power_term(k) * central * central / 2 + sum / 2;
}

BigRat single_odd_squared(long k, long n) {
  // At n = 0 every summand vanishes through the (n-b)_{b+1} factor before
  // the n/(2(2n-b)) quotient is meaningful at b = 0; the sum is empty anyway.
  if (n == 0) return 0;
  const auto table = expansion_coeffs(k);
  const BigRat central(binomial(2 * n, n));
  BigRat sum = 0;
  for (long b = 0; b <= k; ++b) {
    const BigRat factor = table.coeffs[static_cast<std::size_t>(b)](BigRat(n)) *
                          pochhammer(BigRat(n - b), b + 1) *
                          pochhammer(BigRat(n - b + 1), b);
    if (factor == 0) continue;  // nonzero factor forces 2n-b > 0
    sum += factor * BigRat(n) / (2 * BigRat(2 * n - b));
  }
  return sum * central * central;
}

bool chu_vandermonde_check(long n, long m) {
  BigInt lhs = 0;
  for (long i = 0; i <= m; ++i) {
    lhs += binomial(2 * m, m + i) * binomial(2 * n, n + i);
  }
  const BigRat rhs = BigRat(binomial(2 * m, m) * binomial(2 * n, n)) / 2 +
                     BigRat(binomial(2 * m + 2 * n, m + n)) / 2;
  return BigRat(lhs) == rhs;
}

bool dixon_identity_check(long n, long b) {
  if (n < 1 || b < 0 || b > n - 1) {
    throw std::invalid_argument("dixon_identity_check requires 0 <= b <= n-1");
  }
  BigInt lhs = 0;
  for (long j = 1; j <= n; ++j) {
    lhs += BigInt(j) * binomial(2 * n - 2 * b, n + j - b) *
           binomial(2 * n, n + j);
  }
  const BigRat rhs =
      BigRat(2 * BigInt(n) * (n - b)) / BigRat(2 * n - b) *
      BigRat(binomial(2 * n - 2 * b - 1, n - b) * binomial(2 * n - 1, n));
  return BigRat(lhs) == rhs;
}

}  // namespace absum
