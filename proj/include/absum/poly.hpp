#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "absum/exact.hpp"

namespace absum {

// Univariate polynomial in n over the rationals. Coefficient i multiplies
// n^i; the highest stored coefficient is nonzero unless the polynomial is
// zero (empty coefficient list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const BigRat& c) { return Poly({c}); }
  static Poly monomial(const BigRat& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRat(0);
  }

  // Horner evaluation, exact.
  BigRat operator()(const BigRat& x) const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const BigRat& scalar) const;
  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  // Plain-text form like "3n^2 - 1/2n + 4", for diagnostics.
  std::string to_string() const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  std::vector<BigRat> coeffs_;
};

// Unique interpolating polynomial of degree < #points through the given
// (abscissa, value) pairs. Throws "duplicate-node" on repeated abscissae.
Poly interpolate(const std::vector<std::pair<BigRat, BigRat>>& points);

}  // namespace absum
