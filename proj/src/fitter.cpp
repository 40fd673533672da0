#include "absum/fitter.hpp"

#include <algorithm>
#include <stdexcept>

namespace absum {

const char* basis_kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::central4n:
      return "central4n";
    case BasisKind::centralSq:
      return "centralSq";
    case BasisKind::pow4central:
      return "pow4central";
    case BasisKind::pow16:
      return "pow16";
  }
  throw std::logic_error("unknown basis kind");
}

BasisKind basis_kind_from_name(const std::string& name) {
  if (name == "central4n") return BasisKind::central4n;
  if (name == "centralSq") return BasisKind::centralSq;
  if (name == "pow4central") return BasisKind::pow4central;
  if (name == "pow16") return BasisKind::pow16;
  throw std::invalid_argument("unknown basis kind: " + name);
}

BigRat basis_value(BasisKind kind, long n) {
  switch (kind) {
    case BasisKind::central4n:
      return BigRat(binomial(4 * n, 2 * n));
    case BasisKind::centralSq: {
      const BigInt c = binomial(2 * n, n);
      return BigRat(c * c);
    }
    case BasisKind::pow4central:
      return pow2(2 * n) * BigRat(binomial(2 * n, n));
    case BasisKind::pow16:
      return pow2(4 * n);
  }
  throw std::logic_error("unknown basis kind");
}

std::vector<long> denom_offsets_for_depth(long depth) {
  std::vector<long> offsets;
  offsets.reserve(static_cast<std::size_t>(depth));
  for (long d = 1; d <= 2 * depth - 1; d += 2) offsets.push_back(d);
  return offsets;
}

namespace {

long denom_base(BasisKind kind) {
  switch (kind) {
    case BasisKind::central4n:
      return 4;
    case BasisKind::centralSq:
      return 2;
    default:
      return 0;  // no denominator for the power kinds
  }
}

}  // namespace

BigRat denom_value(BasisKind kind, const std::vector<long>& offsets, long n) {
  const long base = denom_base(kind);
  if (base == 0 && !offsets.empty()) {
    throw std::invalid_argument("denominator offsets on a power basis kind");
  }
  BigRat product = 1;
  for (long d : offsets) product *= BigRat(base * n - d);
  return product;
}

Poly denom_poly(BasisKind kind, const std::vector<long>& offsets) {
  const long base = denom_base(kind);
  if (base == 0 && !offsets.empty()) {
    throw std::invalid_argument("denominator offsets on a power basis kind");
  }
  Poly product = Poly::constant(1);
  for (long d : offsets) {
    product = product * Poly({BigRat(-d), BigRat(base)});
  }
  return product;
}

BigInt oracle_value(const SumSpec& spec, long n) {
  switch (spec.family) {
    case SumFamily::full_square:
      return full_square_sum(spec, n);
    case SumFamily::triangle:
      return triangle_sum(spec.s, spec.t, n, n);
    default:
      throw std::invalid_argument("no oracle dispatch for single-sum specs");
  }
}

LinearSolution solve_exact(const std::vector<std::vector<BigRat>>& a,
                           const std::vector<BigRat>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) {
    throw std::invalid_argument("matrix/vector size mismatch");
  }

  // Clear denominators row by row; Bareiss then works over the integers.
  std::vector<std::vector<BigInt>> m(rows,
                                     std::vector<BigInt>(cols + 1, BigInt(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              a[r][c].get_den().get_mpz_t());
    }
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[r].get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      m[r][c] = a[r][c].get_num() * (lcm / a[r][c].get_den());
    }
    m[r][cols] = b[r].get_num() * (lcm / b[r].get_den());
  }

  auto divide_exact = [](const BigInt& num, const BigInt& den) {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (rem != 0) throw std::logic_error("fraction-free step not exact");
    return q;
  };

  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_rows;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        m[i][j] = divide_exact(m[rank][c] * m[i][j] - m[i][c] * m[rank][j],
                               prev);
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    pivot_cols.push_back(c);
    pivot_rows.push_back(rank);
    ++rank;
  }

  LinearSolution result;
  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) {
      result.consistent = false;
      return result;
    }
  }

  result.consistent = true;
  result.values.assign(cols, BigRat(0));
  for (std::size_t c = 0, p = 0; c < cols; ++c) {
    if (p < pivot_cols.size() && pivot_cols[p] == c) {
      ++p;
    } else {
      result.free_columns.push_back(c);
    }
  }
  for (std::size_t s = rank; s-- > 0;) {
    const std::size_t r = pivot_rows[s];
    const std::size_t c = pivot_cols[s];
    BigRat rhs(m[r][cols]);
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (m[r][j] != 0) rhs -= BigRat(m[r][j]) * result.values[j];
    }
    result.values[c] = rhs / BigRat(m[r][c]);
  }
  return result;
}

namespace {

struct OracleCache {
  const SumSpec& spec;
  std::map<long, BigRat> values;

  const BigRat& at(long n) {
    auto it = values.find(n);
    if (it == values.end()) {
      it = values.emplace(n, BigRat(oracle_value(spec, n))).first;
    }
    return it->second;
  }
};

FitReport run_fit(const SumSpec& spec, const DegreePlan& plan,
                  OracleCache& cache) {
  std::size_t unknowns = 0;
  for (const auto& term : plan.terms) {
    unknowns += static_cast<std::size_t>(term.degree_bound) + 1;
  }

  const long fit_count = static_cast<long>(unknowns) + 3;
  FitReport report;
  report.form.spec = spec;

  std::vector<std::vector<BigRat>> a;
  std::vector<BigRat> b;
  a.reserve(static_cast<std::size_t>(fit_count));
  b.reserve(static_cast<std::size_t>(fit_count));
  for (long n = 1; n <= fit_count; ++n) {
    report.fit_points.push_back(n);
    std::vector<BigRat> row;
    row.reserve(unknowns);
    for (const auto& term : plan.terms) {
      const BigRat base =
          basis_value(term.kind, n) /
          denom_value(term.kind, denom_offsets_for_depth(term.denom_depth), n);
      BigRat power = 1;
      for (long p = 0; p <= term.degree_bound; ++p) {
        row.push_back(base * power);
        power *= n;
      }
    }
    a.push_back(std::move(row));
    b.push_back(cache.at(n));
  }

  const LinearSolution solution = solve_exact(a, b);
  if (!solution.consistent) {
    report.status = FitStatus::inconsistent;
    return report;
  }

  std::size_t offset = 0;
  for (const auto& term : plan.terms) {
    const std::size_t count = static_cast<std::size_t>(term.degree_bound) + 1;
    std::vector<BigRat> coeffs(solution.values.begin() + offset,
                               solution.values.begin() + offset + count);
    offset += count;
    Poly numerator{std::move(coeffs)};
    if (numerator.is_zero()) continue;
    report.form.terms.push_back(
        {term.kind, denom_offsets_for_depth(term.denom_depth),
         std::move(numerator)});
  }

  for (long n = fit_count + 1; n <= fit_count + 10; ++n) {
    report.guard_points.push_back(n);
    if (eval_closed_form(report.form, n) != cache.at(n)) {
      report.status = FitStatus::inconsistent;
      report.failed_point = n;
      return report;
    }
  }
  report.status = solution.free_columns.empty()
                      ? FitStatus::verified
                      : FitStatus::underdetermined_resolved;
  return report;
}

}  // namespace

FitReport fit(const SumSpec& spec) {
  return fit_with_plan(spec, degree_plan(spec));
}

FitReport fit_with_plan(const SumSpec& spec, const DegreePlan& plan) {
  OracleCache cache{spec, {}};
  return run_fit(spec, plan, cache);
}

FitReport fit_generic(const SumSpec& spec, const std::vector<BasisKind>& kinds,
                      long max_degree,
                      const std::map<BasisKind, long>& denom_depths) {
  if (kinds.empty()) throw std::invalid_argument("fit_generic needs a basis");
  long start_degree = 1;
  for (BasisKind kind : kinds) {
    auto it = denom_depths.find(kind);
    if (it != denom_depths.end()) start_degree = std::max(start_degree, it->second);
  }

  OracleCache cache{spec, {}};
  FitReport last;
  for (long degree = std::min(start_degree, max_degree); degree <= max_degree;
       ++degree) {
    DegreePlan plan;
    for (BasisKind kind : kinds) {
      auto it = denom_depths.find(kind);
      const long depth = it == denom_depths.end() ? 0 : it->second;
      plan.terms.push_back({kind, degree, depth});
    }
    last = run_fit(spec, plan, cache);
    if (last.status != FitStatus::inconsistent) return last;
  }
  return last;
}

BigRat eval_closed_form(const ClosedForm& form, long n) {
  BigRat total = 0;
  for (const auto& term : form.terms) {
    total += term.numerator(BigRat(n)) /
             denom_value(term.kind, term.denom_offsets, n) *
             basis_value(term.kind, n);
  }
  return total;
}

bool closed_forms_equivalent(const ClosedForm& a, const ClosedForm& b) {
  auto coefficient = [](const ClosedForm& form, BasisKind kind,
                        Poly& num, Poly& den) {
    num = Poly();
    den = Poly::constant(1);
    for (const auto& term : form.terms) {
      if (term.kind == kind) {
        num = term.numerator;
        den = denom_poly(term.kind, term.denom_offsets);
        return;
      }
    }
  };
  for (BasisKind kind : {BasisKind::central4n, BasisKind::centralSq,
                         BasisKind::pow4central, BasisKind::pow16}) {
    Poly na, da, nb, db;
    coefficient(a, kind, na, da);
    coefficient(b, kind, nb, db);
    if (!(na * db == nb * da)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Degree plans, one per parity case of the exponent pair (s, t) and the
// inner exponent family. Shapes per case, with S = s/2, T = t/2,
// p = S + T + khat, q = p/2 (floor division throughout):
//   * even exponent 2*khat, s and t even: centralSq alone, no extra factors
//     beyond q of them; mixed parity lives on {central4n, pow4central}
//     (e.g. s=0, t=1, k=2 gives 4n^2(2n-1)/(4n-1) C(4n,2n)
//     - n^2/2 4^n C(2n,n), which {centralSq, pow4central} cannot
//     represent); both odd keeps centralSq with one extra denominator
//     factor (|ij(j^2-i^2)| gives 2n^3(n-1)/(2n-1) C(2n,n)^2).
//   * odd exponent 2*khat+1: s,t even on central4n alone; mixed parity on
//     {centralSq, pow16} with one extra centralSq factor; both odd on
//     {central4n, pow4central} with one extra central4n factor.
//   * khat = 0 in the odd family needs one more numerator degree: the sum
//     of |j - i| equals 2n C(4n,2n), degree 1.
// Degree bounds grow with every added denominator factor. Every plan is
// pinned by tests and closes against the oracle with ten exact guard points.
// ---------------------------------------------------------------------------

namespace {

DegreePlan plan_even_exponent(long s, long t, long khat) {
  const long S = s / 2, T = t / 2;
  const long p = S + T + khat;
  const long q = p / 2;
  const long base = 2 * p;
  DegreePlan plan;
  const bool s_odd = (s % 2) != 0, t_odd = (t % 2) != 0;
  if (!s_odd && !t_odd) {
    plan.terms.push_back({BasisKind::centralSq, base + q, q});
  } else if (s_odd != t_odd) {
    plan.terms.push_back({BasisKind::central4n, 3 * p, p});
    plan.terms.push_back({BasisKind::pow4central, base + 1, 0});
  } else {
    plan.terms.push_back({BasisKind::centralSq, base + 2 + q, q + 1});
  }
  return plan;
}

DegreePlan plan_odd_exponent(long s, long t, long khat) {
  const long S = s / 2, T = t / 2;
  const long p = S + T + khat;
  const long q = p / 2;
  const long base = 2 * p;
  const long low_k = khat == 0 ? 1 : 0;
  DegreePlan plan;
  const bool s_odd = (s % 2) != 0, t_odd = (t % 2) != 0;
  if (!s_odd && !t_odd) {
    plan.terms.push_back({BasisKind::central4n, 3 * p + low_k, p});
  } else if (s_odd != t_odd) {
    plan.terms.push_back({BasisKind::centralSq, base + 2 + q + low_k, q + 1});
    plan.terms.push_back({BasisKind::pow16, base + 1, 0});
  } else {
    plan.terms.push_back({BasisKind::central4n, 3 * p + 3, p + 1});
    plan.terms.push_back({BasisKind::pow4central, base + 2, 0});
  }
  return plan;
}

DegreePlan plan_triangle(long s, long t) {
  const long S = s / 2, T = t / 2;
  const long q = (S + T) / 2;
  const long p = S + T;
  const long base = 2 * S + 2 * T;
  DegreePlan plan;
  const bool s_odd = (s % 2) != 0, t_odd = (t % 2) != 0;
  if (!s_odd && !t_odd) {
    plan.terms.push_back({BasisKind::central4n, 3 * p, p});
    plan.terms.push_back({BasisKind::centralSq, base + q, q});
    if (s == 0) plan.terms.push_back({BasisKind::pow4central, 2 * T, 0});
    plan.terms.push_back({BasisKind::pow16, base, 0});
  } else if (s_odd && !t_odd) {
    plan.terms.push_back({BasisKind::central4n, 3 * p + 1, p});
    plan.terms.push_back({BasisKind::centralSq, base + 2 + q, q + 1});
    plan.terms.push_back({BasisKind::pow4central, base + 1, 0});
  } else if (!s_odd && t_odd) {
    plan.terms.push_back({BasisKind::central4n, 3 * p + 1, p});
    plan.terms.push_back({BasisKind::centralSq, base + 2 + q, q + 1});
  } else {
    plan.terms.push_back({BasisKind::central4n, 3 * p + 3, p + 1});
    plan.terms.push_back({BasisKind::centralSq, base + 3 + q, q + 1});
  }
  return plan;
}

}  // namespace

DegreePlan degree_plan(const SumSpec& spec) {
  if (spec.beta != 1) {
    throw std::domain_error("no-proved-degree-plan");
  }
  switch (spec.family) {
    case SumFamily::full_square:
      if (spec.k < 1) throw std::domain_error("no-proved-degree-plan");
      if (spec.k % 2 == 0) return plan_even_exponent(spec.s, spec.t, spec.k / 2);
      return plan_odd_exponent(spec.s, spec.t, (spec.k - 1) / 2);
    case SumFamily::triangle:
      return plan_triangle(spec.s, spec.t);
    default:
      throw std::domain_error("no-proved-degree-plan");
  }
}

}  // namespace absum
