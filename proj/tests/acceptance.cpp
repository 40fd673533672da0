// Acceptance suite: runs every criterion exactly, prints one line per
// criterion, exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "absum/expansion.hpp"
#include "absum/fitter.hpp"
#include "absum/inequality.hpp"
#include "absum/lemmas.hpp"
#include "absum/oracle.hpp"
#include "absum/render.hpp"

using namespace absum;

namespace {

int failures = 0;
std::vector<ClosedForm> fitted_forms;  // collected for the round-trip check

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed >= budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)%s%s\n",
              ok ? "PASS" : "FAIL", number, label.c_str(), elapsed,
              budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

SumSpec full(long s, long t, long k, long beta = 1) {
  return {s, t, k, beta, SumFamily::full_square};
}

Poly ipoly(std::initializer_list<long> ascending) {
  std::vector<BigRat> coeffs;
  for (long c : ascending) coeffs.emplace_back(c);
  return Poly(std::move(coeffs));
}

ClosedForm expected_form(const SumSpec& spec, BasisKind kind,
                         std::vector<long> offsets, Poly numerator) {
  ClosedForm form;
  form.spec = spec;
  form.terms.push_back({kind, std::move(offsets), std::move(numerator)});
  return form;
}

bool check_fit(const SumSpec& spec, const ClosedForm& expected,
               std::string& detail) {
  const FitReport report = fit(spec);
  if (report.status != FitStatus::verified) {
    detail += "fit of (" + std::to_string(spec.s) + "," +
              std::to_string(spec.t) + "," + std::to_string(spec.k) +
              ") not verified; ";
    return false;
  }
  if (!closed_forms_equivalent(report.form, expected)) {
    detail += "fitted form for (" + std::to_string(spec.s) + "," +
              std::to_string(spec.t) + "," + std::to_string(spec.k) +
              ") differs from the reference identity; ";
    return false;
  }
  fitted_forms.push_back(report.form);
  return true;
}

// Parity classes (s, t, k_literal) with S + T + khat <= bound.
std::vector<SumSpec> parity_classes(long bound) {
  std::vector<SumSpec> specs;
  for (int odd_family = 0; odd_family <= 1; ++odd_family) {
    for (long khat = odd_family ? 0 : 1; khat <= bound; ++khat) {
      const long klit = odd_family ? 2 * khat + 1 : 2 * khat;
      if (klit < 1) continue;
      for (long S = 0; S + khat <= bound; ++S) {
        for (long T = 0; S + T + khat <= bound; ++T) {
          for (long sp = 0; sp <= 1; ++sp) {
            for (long tp = 0; tp <= 1; ++tp) {
              specs.push_back(full(2 * S + sp, 2 * T + tp, klit));
            }
          }
        }
      }
    }
  }
  return specs;
}

}  // namespace

int main() {
  criterion(1, "degree-two evaluation 2n^2 C(2n,n)^2 for n = 0..30", 5.0,
            [](std::string&) {
              const SumSpec spec = full(0, 0, 2);
              for (long n = 0; n <= 30; ++n) {
                const BigInt c = binomial(2 * n, n);
                if (full_square_sum(spec, n) != BigInt(2 * n) * n * c * c) {
                  return false;
                }
              }
              return true;
            });

  criterion(2, "four fundamental lemmas equal the oracle on 0<=n,m<=12", 30.0,
            [](std::string& detail) {
              for (long n = 0; n <= 12; ++n) {
                for (long m = 0; m <= 12; ++m) {
                  if (fundamental_S00(n, m) != BigRat(triangle_sum(0, 0, n, m)) ||
                      fundamental_S10(n, m) != BigRat(triangle_sum(1, 0, n, m)) ||
                      fundamental_S01(n, m) != BigRat(triangle_sum(0, 1, n, m)) ||
                      fundamental_S11(n, m) != BigRat(triangle_sum(1, 1, n, m))) {
                    detail = "cell n=" + std::to_string(n) +
                             " m=" + std::to_string(m);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(3, "single-sum closed forms equal the oracle for k<=4, n<=15",
            10.0, [](std::string& detail) {
              for (long k = 0; k <= 4; ++k) {
                for (long n = 0; n <= 15; ++n) {
                  if (single_even_plain(k, n) !=
                          BigRat(single_sum(2 * k, false, n)) ||
                      single_odd_plain(k, n) !=
                          BigRat(single_sum(2 * k + 1, false, n)) ||
                      single_even_squared(k, n) !=
                          BigRat(single_sum(2 * k, true, n)) ||
                      single_odd_squared(k, n) !=
                          BigRat(single_sum(2 * k + 1, true, n))) {
                    detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(4, "re-discovery of five catalogued closed forms", 120.0,
            [](std::string& detail) {
              bool ok = true;
              // |j^3-i^3| -> 4n^2(5n-2)/(4n-1) C(4n-1,2n-1)
              ok &= check_fit(full(0, 0, 3),
                              expected_form(full(0, 0, 3), BasisKind::central4n,
                                            {1}, ipoly({0, 0, -4, 10})),
                              detail);
              // |j^5-i^5| -> 8n^2(43n^3-70n^2+36n-6)/((4n-2)(4n-3)) C(4n-2,2n-2)
              ok &= check_fit(
                  full(0, 0, 5),
                  expected_form(full(0, 0, 5), BasisKind::central4n, {1, 3},
                                ipoly({0, 0, -12, 72, -140, 86})),
                  detail);
              // |ij(j^2-i^2)| -> 2n^3(n-1)/(2n-1) C(2n,n)^2
              ok &= check_fit(full(1, 1, 2),
                              expected_form(full(1, 1, 2), BasisKind::centralSq,
                                            {1}, ipoly({0, 0, 0, -2, 2})),
                              detail);
              // |i^3 j^3 (j^2-i^2)| -> 2n^4(n-1)(3n^2-6n+2)/((2n-1)(2n-3)) C(2n,n)^2
              ok &= check_fit(
                  full(3, 3, 2),
                  expected_form(full(3, 3, 2), BasisKind::centralSq, {1, 3},
                                ipoly({0, 0, 0, 0, -4, 16, -18, 6})),
                  detail);
              // |j^7-i^7| -> 16n^2 P1(n)/((4n-3)(4n-4)(4n-5)) C(4n-3,2n-3)
              ok &= check_fit(
                  full(0, 0, 7),
                  expected_form(full(0, 0, 7), BasisKind::central4n, {1, 3, 5},
                                ipoly({0, 0, -180, 1336, -3904, 5600, -3920,
                                       1062})),
                  detail);
              return ok;
            });

  criterion(5, "stretch re-discovery through the generic fitter", 300.0,
            [](std::string& detail) {
              bool ok = true;
              {
                // |i^4 j^3 (j^5-i^5)|
                const SumSpec spec = full(4, 3, 5);
                const FitReport report = fit_generic(
                    spec, {BasisKind::centralSq, BasisKind::pow16}, 12,
                    {{BasisKind::centralSq, 3}});
                ClosedForm expected;
                expected.spec = spec;
                expected.terms.push_back(
                    {BasisKind::centralSq,
                     {1, 3, 5},
                     ipoly({0, 0, 0, 0, 565, -3592, 9105, -11853, 8332, -2968,
                            414}) *
                         BigRat(1, 2)});
                expected.terms.push_back(
                    {BasisKind::pow16,
                     {},
                     ipoly({0, 0, 34, -249, 651, -735, 315}) * BigRat(1, 128)});
                if (report.status != FitStatus::verified ||
                    !closed_forms_equivalent(report.form, expected)) {
                  detail += "i^4 j^3 (j^5-i^5) mismatch; ";
                  ok = false;
                } else {
                  fitted_forms.push_back(report.form);
                }
              }
              {
                // |ij(j^3-i^3)^3| with P2
                const SumSpec spec = full(1, 1, 3, 3);
                const FitReport report = fit_generic(
                    spec, {BasisKind::pow4central, BasisKind::central4n}, 12,
                    {{BasisKind::central4n, 4}});
                ClosedForm expected;
                expected.spec = spec;
                expected.terms.push_back(
                    {BasisKind::pow4central,
                     {},
                     ipoly({0, 0, 496, -2442, 4503, -3870, 1377}) *
                         BigRat(1, 16)});
                expected.terms.push_back(
                    {BasisKind::central4n,
                     {1, 3, 5, 7},
                     ipoly({0, 0, 0, 201, -2206, 9951, -23945, 33189, -26439,
                            11160, -1917}) *
                         BigRat(4)});
                if (report.status != FitStatus::verified ||
                    !closed_forms_equivalent(report.form, expected)) {
                  detail += "ij(j^3-i^3)^3 mismatch; ";
                  ok = false;
                } else {
                  fitted_forms.push_back(report.form);
                }
              }
              return ok;
            });

  criterion(
      6, "parity vanishing over all classes with S+T+khat <= 3", 120.0,
      [](std::string& detail) {
        bool ok = true;
        for (const SumSpec& spec : parity_classes(3)) {
          const DegreePlan plan = degree_plan(spec);
          const FitReport report = fit(spec);
          if (report.status != FitStatus::verified) {
            detail += "(" + std::to_string(spec.s) + "," +
                      std::to_string(spec.t) + "," + std::to_string(spec.k) +
                      ") not verified; ";
            ok = false;
            continue;
          }
          fitted_forms.push_back(report.form);
          for (const auto& term : report.form.terms) {
            bool in_plan = false;
            for (const auto& planned : plan.terms) {
              if (planned.kind == term.kind) {
                in_plan = true;
                if (term.numerator.degree() > planned.degree_bound) {
                  detail += "degree bound exceeded; ";
                  ok = false;
                }
              }
            }
            if (!in_plan) {
              detail += "kind outside the theorem basis; ";
              ok = false;
            }
          }
          if ((spec.s / 2) + (spec.t / 2) + spec.k / 2 <= 2) {
            // Full-basis cross-check: coefficients off the theorem basis
            // must come out identically zero.
            const long S = spec.s / 2, T = spec.t / 2;
            const long khat = spec.k % 2 == 0 ? spec.k / 2 : (spec.k - 1) / 2;
            const long p = S + T + khat;
            DegreePlan wide;
            wide.terms.push_back({BasisKind::central4n, 3 * p + 4, p + 1});
            wide.terms.push_back(
                {BasisKind::centralSq, 2 * p + 4 + p / 2, p / 2 + 1});
            wide.terms.push_back({BasisKind::pow4central, 2 * p + 2, 0});
            wide.terms.push_back({BasisKind::pow16, 2 * p + 1, 0});
            const FitReport wide_report = fit_with_plan(spec, wide);
            if (wide_report.status == FitStatus::inconsistent) {
              detail += "full-basis fit failed; ";
              ok = false;
              continue;
            }
            for (const auto& term : wide_report.form.terms) {
              bool allowed = false;
              for (const auto& planned : plan.terms) {
                if (planned.kind == term.kind) allowed = true;
              }
              if (!allowed) {
                detail += "(" + std::to_string(spec.s) + "," +
                          std::to_string(spec.t) + "," +
                          std::to_string(spec.k) + ") has a nonzero " +
                          basis_kind_name(term.kind) + " part; ";
                ok = false;
              }
            }
          }
        }
        return ok;
      });

  criterion(
      7, "two-parameter inequality suite", 60.0, [](std::string& detail) {
        bool ok = true;
        const InequalityReport report = theorem_inequality_check(25);
        if (!report.violations.empty()) {
          detail += std::to_string(report.violations.size()) + " violations; ";
          ok = false;
        }
        if (report.equality_set.size() != 26) {
          detail += "equality set is not the diagonal; ";
          ok = false;
        }
        for (const auto& [m, n] : report.equality_set) {
          if (m != n) {
            detail += "off-diagonal equality; ";
            ok = false;
          }
        }
        // Diagonal values against the one-parameter evaluation.
        const SumSpec spec = full(0, 0, 2);
        for (long n = 0; n <= 25; ++n) {
          const BigInt c = binomial(2 * n, n);
          if (full_square_sum(spec, n) != BigInt(2 * n) * n * c * c) {
            detail += "diagonal cross-check failed; ";
            ok = false;
          }
        }
        for (long n = 0; n <= 12; ++n) {
          for (long m = 0; m <= 12; ++m) {
            if (!decomposition_identity_check(n, m)) {
              detail += "decomposition failed; ";
              ok = false;
            }
            const auto gosper = gosper_identity_check(n, m);
            if (n == 0 && m == 0) {
              if (gosper.has_value()) {
                detail += "(0,0) should be skipped; ";
                ok = false;
              }
            } else if (gosper != true) {
              detail += "telescoped identity failed; ";
              ok = false;
            }
          }
        }
        if (!termwise_ratio_check(12)) {
          detail += "termwise lemma failed; ";
          ok = false;
        }
        // Consistency chain: quarter-sum times four on the diagonal.
        for (long n = 0; n <= 10; ++n) {
          if (4 * weighted_abs_square_sum(n, n) !=
              BigRat(full_square_sum(spec, n))) {
            detail += "quarter-sum chain failed; ";
            ok = false;
          }
        }
        return ok;
      });

  criterion(8, "expansion identity for S <= 6 on 0 <= i <= n <= 20", 5.0,
            [](std::string& detail) {
              for (long S = 0; S <= 6; ++S) {
                const ExpansionTable table = expansion_coeffs(S);
                if (!(table.coeffs[0] ==
                      Poly::monomial(BigRat(1),
                                     static_cast<std::size_t>(2 * S)))) {
                  detail = "c_{0,S} != n^{2S}";
                  return false;
                }
                for (long a = 0; a <= S; ++a) {
                  if (table.coeffs[static_cast<std::size_t>(a)].degree() >
                      2 * S - 2 * a) {
                    detail = "degree bound violated";
                    return false;
                  }
                }
                for (long n = 0; n <= 20; ++n) {
                  for (long i = 0; i <= n; ++i) {
                    if (!expansion_check(table, i, n)) {
                      detail = "identity fails at S=" + std::to_string(S);
                      return false;
                    }
                  }
                }
              }
              return true;
            });

  criterion(9, "Chu-Vandermonde and Dixon spot checks", 5.0,
            [](std::string& detail) {
              for (long n = 0; n <= 15; ++n) {
                for (long m = 0; m <= 15; ++m) {
                  if (!chu_vandermonde_check(n, m)) {
                    detail = "Chu-Vandermonde fails";
                    return false;
                  }
                }
              }
              for (long n = 1; n <= 10; ++n) {
                for (long b = 0; b <= n - 1; ++b) {
                  if (!dixon_identity_check(n, b)) {
                    detail = "Dixon fails";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(10, "serialized closed forms re-evaluate bit-identically", 10.0,
            [](std::string& detail) {
              if (fitted_forms.size() < 7) {
                detail = "expected the seven acceptance forms to be collected";
                return false;
              }
              for (const ClosedForm& form : fitted_forms) {
                const ClosedForm reparsed =
                    closed_form_from_json(closed_form_to_json(form));
                for (long n = 1; n <= 20; ++n) {
                  if (eval_closed_form(reparsed, n) !=
                      eval_closed_form(form, n)) {
                    detail = "round trip changed a value";
                    return false;
                  }
                }
                if (closed_form_to_json(reparsed) != closed_form_to_json(form)) {
                  detail = "round trip changed the serialization";
                  return false;
                }
              }
              return true;
            });

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures;
}
