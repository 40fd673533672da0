#include "absum/expansion.hpp"

namespace absum {

namespace {

// prod_{r=0}^{a-1} ((n-r)^2 - i^2) for integer n, i.
BigInt falling_product(long a, const BigInt& n, const BigInt& i) {
  BigInt product = 1;
  const BigInt i2 = i * i;
  for (long r = 0; r < a; ++r) {
    product *= (n - r) * (n - r) - i2;
  }
  return product;
}

// Values c_{0,S}(n), ..., c_{S,S}(n) at one integer n, by the triangular
// substitutions i = n, n-1, ..., n-S. Substituting i = n-a kills every term
// of index above a, so each step isolates one coefficient.
std::vector<BigRat> coeff_values_at(long S, long n) {
  std::vector<BigRat> values(static_cast<std::size_t>(S) + 1);
  const BigInt nn(n);
  for (long a = 0; a <= S; ++a) {
    const BigInt point(n - a);
    BigRat rhs(ipow(point, static_cast<unsigned long>(2 * S)));
    for (long b = 0; b < a; ++b) {
      rhs -= values[static_cast<std::size_t>(b)] *
             BigRat(falling_product(b, nn, point));
    }
    const BigInt pivot = falling_product(a, nn, point);
    values[static_cast<std::size_t>(a)] = rhs / BigRat(pivot);
  }
  return values;
}

}  // namespace

ExpansionTable expansion_coeffs(long S) {
  // Nodes n = S+1, S+2, ... keep every pivot (a-r)(2n-r-a) nonzero; the
  // degree bound 2S-2a fixes how many nodes coefficient a needs.
  const long node_count = 2 * S + 1;
  std::vector<std::vector<BigRat>> values_per_node;
  values_per_node.reserve(static_cast<std::size_t>(node_count));
  for (long node = 0; node < node_count; ++node) {
    values_per_node.push_back(coeff_values_at(S, S + 1 + node));
  }

  ExpansionTable table;
  table.S = S;
  table.coeffs.reserve(static_cast<std::size_t>(S) + 1);
  for (long a = 0; a <= S; ++a) {
    const long needed = 2 * S - 2 * a + 1;
    std::vector<std::pair<BigRat, BigRat>> points;
    points.reserve(static_cast<std::size_t>(needed));
    for (long node = 0; node < needed; ++node) {
      points.emplace_back(BigRat(S + 1 + node),
                          values_per_node[static_cast<std::size_t>(node)]
                                         [static_cast<std::size_t>(a)]);
    }
    table.coeffs.push_back(interpolate(points));
  }
  return table;
}

bool expansion_check(const ExpansionTable& table, long i, long n) {
  const BigInt nn(n), ii(i);
  BigRat rhs = 0;
  for (long a = 0; a <= table.S; ++a) {
    rhs += table.coeffs[static_cast<std::size_t>(a)](BigRat(n)) *
           BigRat(falling_product(a, nn, ii));
  }
  return rhs == BigRat(ipow(ii, static_cast<unsigned long>(2 * table.S)));
}

}  // namespace absum
