#include <doctest.h>

#include "absum/oracle.hpp"

using namespace absum;

TEST_SUITE_BEGIN("oracle");

namespace {

SumSpec full(long s, long t, long k, long beta = 1) {
  return {s, t, k, beta, SumFamily::full_square};
}

BigRat alpha(bool cond) { return cond ? BigRat(1, 2) : BigRat(1); }

// Independent evaluation of the even-exponent parity reduction: four times
// the alpha-weighted triangle sum of (i^s j^t + i^t j^s)(j^{2k} - i^{2k}).
BigRat weighted_triangle_reduction(long s, long t, long khalf, long n) {
  const auto row = central_row(n);
  BigRat total = 0;
  for (long i = 0; i <= n; ++i) {
    for (long j = i; j <= n; ++j) {
      const BigInt is = ipow(BigInt(i), static_cast<unsigned long>(s));
      const BigInt it = ipow(BigInt(i), static_cast<unsigned long>(t));
      const BigInt js = ipow(BigInt(j), static_cast<unsigned long>(s));
      const BigInt jt = ipow(BigInt(j), static_cast<unsigned long>(t));
      const BigInt even_diff =
          ipow(BigInt(j), static_cast<unsigned long>(2 * khalf)) -
          ipow(BigInt(i), static_cast<unsigned long>(2 * khalf));
      total += alpha(i == 0) * alpha(j == 0) *
               BigRat((is * jt + it * js) * even_diff *
                      row[static_cast<std::size_t>(i)] *
                      row[static_cast<std::size_t>(j)]);
    }
  }
  return 4 * total;
}

}  // namespace

TEST_CASE("central row matches binomial") {
  for (long n = 0; n <= 12; ++n) {
    const auto row = central_row(n);
    REQUIRE(row.size() == static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      CHECK(row[static_cast<std::size_t>(i)] == binomial(2 * n, n + i));
    }
  }
}

TEST_CASE("full-square examples") {
  CHECK(full_square_sum(full(0, 0, 2), 1) == 8);
  CHECK(full_square_sum(full(1, 1, 2), 1) == 0);
  CHECK(full_square_sum(full(0, 0, 3), 1) == 12);
  CHECK(full_square_sum(full(0, 0, 5), 1) == 12);
}

TEST_CASE("full-square matches the proved evaluation at small n") {
  for (long n = 0; n <= 8; ++n) {
    const BigInt c = binomial(2 * n, n);
    CHECK(full_square_sum(full(0, 0, 2), n) == BigInt(2 * n) * n * c * c);
  }
}

TEST_CASE("triangle examples") {
  CHECK(triangle_sum(0, 0, 1, 1) == 7);
  CHECK(triangle_sum(1, 0, 1, 1) == 1);
  CHECK(triangle_sum(0, 0, 1, 0) == 2);
  CHECK(triangle_sum(0, 1, 1, 1) == 3);
  CHECK(triangle_sum(1, 1, 1, 1) == 1);
}

TEST_CASE("single-sum examples") {
  CHECK(single_sum(0, false, 1) == 1);
  CHECK(single_sum(1, true, 1) == 1);
  CHECK(single_sum(0, true, 0) == 0);
  CHECK(single_sum(2, false, 3) == 1 * 15 + 4 * 6 + 9 * 1);
}

TEST_CASE("swapping s and t leaves the full sum unchanged") {
  for (long s = 0; s <= 3; ++s) {
    for (long t = 0; t <= 3; ++t) {
      for (long k = 1; k <= 3; ++k) {
        for (long beta = 1; beta <= 2; ++beta) {
          for (long n = 0; n <= 5; ++n) {
            CHECK(full_square_sum(full(s, t, k, beta), n) ==
                  full_square_sum(full(t, s, k, beta), n));
          }
        }
      }
    }
  }
}

TEST_CASE("parity reduction to the weighted triangle sum") {
  for (long s = 0; s <= 3; ++s) {
    for (long t = 0; t <= 3; ++t) {
      for (long khalf = 1; khalf <= 2; ++khalf) {
        for (long n = 0; n <= 6; ++n) {
          const BigRat reduced = weighted_triangle_reduction(s, t, khalf, n);
          CHECK(reduced == BigRat(full_square_sum(full(s, t, 2 * khalf), n)));
        }
      }
    }
  }
}

TEST_CASE("catalogued evaluations match the brute force as displayed") {
  auto rat = [](const BigInt& num, const BigInt& den) {
    return make_rat(num, den);
  };
  for (long n = 1; n <= 12; ++n) {
    const BigInt N(n);
    const BigInt central = binomial(2 * n, n);

    // |j^3-i^3| = 4n^2(5n-2)/(4n-1) C(4n-1,2n-1)
    CHECK(rat(4 * N * N * (5 * N - 2) * binomial(4 * n - 1, 2 * n - 1),
              BigInt(4 * n - 1)) ==
          BigRat(full_square_sum(full(0, 0, 3), n)));

    // |j^5-i^5| = 8n^2(43n^3-70n^2+36n-6)/((4n-2)(4n-3)) C(4n-2,2n-2)
    CHECK(rat(8 * N * N * (43 * N * N * N - 70 * N * N + 36 * N - 6) *
                  binomial(4 * n - 2, 2 * n - 2),
              BigInt(4 * n - 2) * (4 * n - 3)) ==
          BigRat(full_square_sum(full(0, 0, 5), n)));

    // |ij(j^2-i^2)| = 2n^3(n-1)/(2n-1) C(2n,n)^2
    CHECK(rat(2 * N * N * N * (N - 1) * central * central,
              BigInt(2 * n - 1)) ==
          BigRat(full_square_sum(full(1, 1, 2), n)));

    // |i^3j^3(j^2-i^2)| = 2n^4(n-1)(3n^2-6n+2)/((2n-1)(2n-3)) C(2n,n)^2
    CHECK(rat(2 * N * N * N * N * (N - 1) * (3 * N * N - 6 * N + 2) *
                  central * central,
              BigInt(2 * n - 1) * (2 * n - 3)) ==
          BigRat(full_square_sum(full(3, 3, 2), n)));

    // |j^7-i^7| = 16n^2 P1(n)/((4n-3)(4n-4)(4n-5)) C(4n-3,2n-3), n >= 2
    if (n >= 2) {
      const BigInt p1 = ((((531 * N - 1960) * N + 2800) * N - 1952) * N +
                         668) * N - 90;
      CHECK(rat(16 * N * N * p1 * binomial(4 * n - 3, 2 * n - 3),
                BigInt(4 * n - 3) * (4 * n - 4) * (4 * n - 5)) ==
            BigRat(full_square_sum(full(0, 0, 7), n)));
    }

    // |i^4j^3(j^5-i^5)| = n^4(414n^6-2968n^5+8332n^4-11853n^3+9105n^2
    //   -3592n+565)/(2(2n-5)(2n-3)(2n-1)) C(2n,n)^2
    //   + n^2(3n-1)(105n^3-210n^2+147n-34)/128 16^n
    {
      const BigInt q = (((((414 * N - 2968) * N + 8332) * N - 11853) * N +
                         9105) * N - 3592) * N + 565;
      const BigRat first =
          rat(N * N * N * N * q * central * central,
              2 * BigInt(2 * n - 5) * (2 * n - 3) * (2 * n - 1));
      const BigRat second =
          rat(N * N * (3 * N - 1) *
                  (((105 * N - 210) * N + 147) * N - 34),
              BigInt(128)) *
          pow2(4 * n);
      CHECK(first + second == BigRat(full_square_sum(full(4, 3, 5), n)));
    }

    // |ij(j^3-i^3)^3| = n^2(1377n^4-3870n^3+4503n^2-2442n+496)/16 4^n C(2n,n)
    //   - 4n^3 P2(n)/((4n-7)(4n-5)(4n-3)(4n-1)) C(4n,2n)
    {
      const BigInt q = (((1377 * N - 3870) * N + 4503) * N - 2442) * N + 496;
      const BigInt p2 = ((((((1917 * N - 11160) * N + 26439) * N - 33189) *
                           N + 23945) * N - 9951) * N + 2206) * N - 201;
      const BigRat first =
          rat(N * N * q, BigInt(16)) * pow2(2 * n) * BigRat(central);
      const BigRat second =
          rat(4 * N * N * N * p2 * binomial(4 * n, 2 * n),
              BigInt(4 * n - 7) * (4 * n - 5) * (4 * n - 3) * (4 * n - 1));
      CHECK(first - second ==
            BigRat(full_square_sum({1, 1, 3, 3, SumFamily::full_square}, n)));
    }
  }
}

TEST_CASE("outputs are non-negative and vanish at n = 0") {
  for (long s = 0; s <= 2; ++s) {
    for (long k = 1; k <= 4; ++k) {
      for (long beta = 1; beta <= 3; ++beta) {
        CHECK(full_square_sum(full(s, 1, k, beta), 0) == 0);
        for (long n = 0; n <= 4; ++n) {
          CHECK(full_square_sum(full(s, 1, k, beta), n) >= 0);
        }
      }
    }
  }
}

TEST_SUITE_END();
