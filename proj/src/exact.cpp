#include "absum/exact.hpp"

namespace absum {

BigInt binomial(long n, long k) {
  if (n < 0) {
    throw std::domain_error("unsupported-negative-upper");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigRat pochhammer(const BigRat& alpha, long m) {
  if (m >= 0) {
    BigRat product = 1;
    for (long i = 0; i < m; ++i) {
      product *= alpha + i;
    }
    return product;
  }
  BigRat product = 1;
  for (long i = 1; i <= -m; ++i) {
    BigRat factor = alpha - i;
    if (factor == 0) {
      throw std::domain_error("pochhammer-pole");
    }
    product *= factor;
  }
  return 1 / product;
}

BigRat pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) {
    return BigRat(p);
  }
  BigRat result(1, p);
  result.canonicalize();
  return result;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
  return result;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  BigRat result(num, den);
  result.canonicalize();
  return result;
}

BigRat parse_rational(const std::string& text) {
  BigRat result;
  if (text.empty() || result.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (result.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  result.canonicalize();
  return result;
}

std::string format_rational(const BigRat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace absum
