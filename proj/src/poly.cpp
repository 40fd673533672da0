#include "absum/poly.hpp"

#include <algorithm>
#include <sstream>

namespace absum {

Poly Poly::monomial(const BigRat& c, std::size_t power) {
  std::vector<BigRat> coeffs(power + 1, BigRat(0));
  coeffs[power] = c;
  return Poly(std::move(coeffs));
}

BigRat Poly::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<BigRat> sum(std::max(coeffs_.size(), other.coeffs_.size()),
                          BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    sum[i] += other.coeffs_[i];
  return Poly(std::move(sum));
}

Poly Poly::operator-(const Poly& other) const {
  return *this + other * BigRat(-1);
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return Poly();
  std::vector<BigRat> prod(coeffs_.size() + other.coeffs_.size() - 1,
                           BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Poly(std::move(prod));
}

Poly Poly::operator*(const BigRat& scalar) const {
  std::vector<BigRat> scaled(coeffs_);
  for (auto& c : scaled) c *= scalar;
  return Poly(std::move(scaled));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigRat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool unit = (a == 1);
    if (!unit || i == 0) out << a;
    if (i > 0) {
      out << "n";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Poly interpolate(const std::vector<std::pair<BigRat, BigRat>>& points) {
  const std::size_t count = points.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (points[i].first == points[j].first) {
        throw std::domain_error("duplicate-node");
      }
    }
  }
  if (count == 0) return Poly();

  // Newton form: divided differences, then expansion over the node basis.
  std::vector<BigRat> dd;
  dd.reserve(count);
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) /
              (points[i].first - points[i - level].first);
    }
  }

  Poly result;
  Poly basis = Poly::constant(1);
  for (std::size_t i = 0; i < count; ++i) {
    result = result + basis * dd[i];
    basis = basis * Poly({-points[i].first, BigRat(1)});
  }
  return result;
}

}  // namespace absum
