#include "absum/oracle.hpp"

namespace absum {

std::vector<BigInt> central_row(long n) {
  // C(2n, n+i) built incrementally: next = prev * (n-i) / (n+i+1).
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = binomial(2 * n, n);
  for (long i = 0; i < n; ++i) {
    row[static_cast<std::size_t>(i) + 1] =
        row[static_cast<std::size_t>(i)] * (n - i) / (n + i + 1);
  }
  return row;
}

namespace {

// v^e for v = -n..n, indexed by v + n. 0^0 = 1.
std::vector<BigInt> signed_powers(long n, long e) {
  std::vector<BigInt> table(static_cast<std::size_t>(2 * n) + 1);
  for (long v = -n; v <= n; ++v) {
    table[static_cast<std::size_t>(v + n)] =
        ipow(BigInt(v), static_cast<unsigned long>(e));
  }
  return table;
}

}  // namespace

BigInt full_square_sum(const SumSpec& spec, long n) {
  const auto row = central_row(n);
  const auto pow_s = signed_powers(n, spec.s);
  const auto pow_t = signed_powers(n, spec.t);
  const auto pow_k = signed_powers(n, spec.k);

  BigInt total = 0;
  BigInt weight, diff;
  for (long i = -n; i <= n; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i + n);
    const BigInt& bi = row[static_cast<std::size_t>(i < 0 ? -i : i)];
    for (long j = -n; j <= n; ++j) {
      const std::size_t jj = static_cast<std::size_t>(j + n);
      diff = pow_k[ii] - pow_k[jj];
      if (diff == 0 && spec.beta > 0) continue;
      weight = pow_s[ii] * pow_t[jj] *
               ipow(diff, static_cast<unsigned long>(spec.beta));
      if (weight == 0) continue;
      mpz_abs(weight.get_mpz_t(), weight.get_mpz_t());
      total += weight * bi * row[static_cast<std::size_t>(j < 0 ? -j : j)];
    }
  }
  return total;
}

BigInt triangle_sum(long s, long t, long n, long m) {
  const auto row_n = central_row(n);
  const auto row_m = central_row(m);
  BigInt total = 0;
  for (long i = 0; i <= n; ++i) {
    const BigInt pi = ipow(BigInt(i), static_cast<unsigned long>(s));
    if (pi == 0) continue;
    for (long j = i; j <= m; ++j) {
      total += pi * ipow(BigInt(j), static_cast<unsigned long>(t)) *
               row_n[static_cast<std::size_t>(i)] *
               row_m[static_cast<std::size_t>(j)];
    }
  }
  return total;
}

BigInt single_sum(long power, bool squared, long n) {
  const auto row = central_row(n);
  BigInt total = 0;
  for (long j = 1; j <= n; ++j) {
    const BigInt& b = row[static_cast<std::size_t>(j)];
    total += ipow(BigInt(j), static_cast<unsigned long>(power)) *
             (squared ? b * b : b);
  }
  return total;
}

}  // namespace absum
