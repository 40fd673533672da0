#pragma once

#include <vector>

#include "absum/poly.hpp"

namespace absum {

// Coefficients c_{a,S}(n) of the expansion
//   i^{2S} = sum_{a=0}^{S} c_{a,S}(n) prod_{r=0}^{a-1} ((n-r)^2 - i^2),
// valid identically in i and n. deg c_{a,S} <= 2S - 2a, and c_{0,S} = n^{2S}.
// Note the leading coefficient is c_{S,S} = (-1)^S, as the defining identity
// forces (substitute i = n - S).
struct ExpansionTable {
  long S = 0;
  std::vector<Poly> coeffs;  // index a = 0..S
};

ExpansionTable expansion_coeffs(long S);

// Exact check of the expansion identity at one integer point (i, n).
bool expansion_check(const ExpansionTable& table, long i, long n);

}  // namespace absum
