#pragma once

#include <map>
#include <vector>

#include "absum/oracle.hpp"
#include "absum/poly.hpp"

namespace absum {

// The four functions every sum in scope reduces to. Coefficients are
// polynomials over products of odd linear factors: (4n-d) for central4n,
// (2n-d) for centralSq; the two pure powers carry no denominator.
enum class BasisKind { central4n, centralSq, pow4central, pow16 };

const char* basis_kind_name(BasisKind kind);
BasisKind basis_kind_from_name(const std::string& name);

struct BasisTerm {
  BasisKind kind = BasisKind::centralSq;
  std::vector<long> denom_offsets;  // strictly increasing odd, starting at 1
  Poly numerator;
};

struct ClosedForm {
  SumSpec spec;
  std::vector<BasisTerm> terms;  // distinct kinds, canonical enum order
};

enum class FitStatus { verified, underdetermined_resolved, inconsistent };

struct FitReport {
  ClosedForm form;
  std::vector<long> fit_points;
  std::vector<long> guard_points;
  FitStatus status = FitStatus::inconsistent;
  long failed_point = -1;  // offending n for a guard failure, -1 otherwise
};

struct PlanTerm {
  BasisKind kind = BasisKind::centralSq;
  long degree_bound = 0;
  long denom_depth = 0;
};

struct DegreePlan {
  std::vector<PlanTerm> terms;
};

// Basis membership, numerator degree bounds and denominator depths for the
// proved beta = 1 cases: the even/odd exponent theorems for full-square
// specs and the four parity cases for triangle specs. Throws
// "no-proved-degree-plan" when beta != 1 or the family has no proved shape.
DegreePlan degree_plan(const SumSpec& spec);

// Indeterminate-coefficient fit against the exact oracle: solve for all
// numerator coefficients from oracle values at n = 1..N (N = unknowns + 3),
// zero any free variables, then verify on 10 further guard points.
FitReport fit(const SumSpec& spec);

// The same pipeline with an explicit plan, one solve, no escalation.
FitReport fit_with_plan(const SumSpec& spec, const DegreePlan& plan);

// Same pipeline with a caller-supplied basis; numerator degree starts low
// and escalates by 1 up to max_degree while the system stays inconsistent.
FitReport fit_generic(const SumSpec& spec, const std::vector<BasisKind>& kinds,
                      long max_degree,
                      const std::map<BasisKind, long>& denom_depths);

struct LinearSolution {
  bool consistent = false;
  std::vector<BigRat> values;
  std::vector<std::size_t> free_columns;
};

// Exact linear solve via fraction-free (Bareiss) elimination with row
// pivoting; free variables are reported, not chosen.
LinearSolution solve_exact(const std::vector<std::vector<BigRat>>& a,
                           const std::vector<BigRat>& b);

BigRat basis_value(BasisKind kind, long n);
std::vector<long> denom_offsets_for_depth(long depth);  // {1, 3, ..., 2d-1}
BigRat denom_value(BasisKind kind, const std::vector<long>& offsets, long n);
Poly denom_poly(BasisKind kind, const std::vector<long>& offsets);

BigRat eval_closed_form(const ClosedForm& form, long n);

// Equality as functions of n: per kind, cross-multiplied numerator/denominator
// agreement. Insensitive to representation slack in the denominators.
bool closed_forms_equivalent(const ClosedForm& a, const ClosedForm& b);

// Oracle dispatch used by the fit pipeline (triangle specs use m = n).
BigInt oracle_value(const SumSpec& spec, long n);

}  // namespace absum
