#include "absum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "absum/expansion.hpp"
#include "absum/fitter.hpp"
#include "absum/inequality.hpp"
#include "absum/lemmas.hpp"
#include "absum/oracle.hpp"
#include "absum/render.hpp"

namespace absum::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsageError = 2;

SumFamily family_from_name(const std::string& name) {
  if (name == "full-square") return SumFamily::full_square;
  if (name == "triangle") return SumFamily::triangle;
  if (name == "single-plain") return SumFamily::single_plain;
  if (name == "single-squared") return SumFamily::single_squared;
  throw CLI::ValidationError("--family", "unknown family " + name);
}

struct EvaluateOptions {
  long s = 0, t = 0, k = 1, beta = 1, n = 0, m = -1, power = 0;
  std::string family = "full-square";
};

int run_evaluate(const EvaluateOptions& opt, std::ostream& out) {
  switch (family_from_name(opt.family)) {
    case SumFamily::full_square: {
      SumSpec spec{opt.s, opt.t, opt.k, opt.beta, SumFamily::full_square};
      out << full_square_sum(spec, opt.n).get_str() << "\n";
      return kOk;
    }
    case SumFamily::triangle:
      out << triangle_sum(opt.s, opt.t, opt.n, opt.m < 0 ? opt.n : opt.m)
                 .get_str()
          << "\n";
      return kOk;
    case SumFamily::single_plain:
      out << single_sum(opt.power, false, opt.n).get_str() << "\n";
      return kOk;
    case SumFamily::single_squared:
      out << single_sum(opt.power, true, opt.n).get_str() << "\n";
      return kOk;
  }
  return kUsageError;
}

struct FitOptions {
  long s = 0, t = 0, k = 1, beta = 1;
  bool generic = false;
  std::vector<std::string> kinds;
  long max_degree = 12;
  std::vector<std::string> denom_depths;  // kind=depth
  std::string emit = "latex";
  bool canonical = false;
};

int run_fit_command(const FitOptions& opt, std::ostream& out,
                    std::ostream& err) {
  SumSpec spec{opt.s, opt.t, opt.k, opt.beta, SumFamily::full_square};
  if (!opt.generic && opt.beta != 1) {
    err << "no-proved-degree-plan: beta != 1 needs --generic with an "
           "explicit basis\n";
    return kUsageError;
  }
  FitReport report;
  if (opt.generic) {
    std::vector<BasisKind> kinds;
    for (const auto& name : opt.kinds) {
      kinds.push_back(basis_kind_from_name(name));
    }
    std::map<BasisKind, long> depths;
    for (const auto& assignment : opt.denom_depths) {
      const auto eq = assignment.find('=');
      if (eq == std::string::npos) {
        err << "bad --denom-depth, expected kind=depth: " << assignment
            << "\n";
        return kUsageError;
      }
      depths[basis_kind_from_name(assignment.substr(0, eq))] =
          std::stol(assignment.substr(eq + 1));
    }
    report = fit_generic(spec, kinds, opt.max_degree, depths);
  } else {
    report = fit(spec);
  }

  if (report.status == FitStatus::inconsistent) {
    err << "fit inconsistent";
    if (report.failed_point >= 0) err << " at guard point n=" << report.failed_point;
    err << "\n";
    return kMathFailure;
  }
  if (opt.emit == "json") {
    out << closed_form_to_json(report.form);
  } else {
    out << emit_latex(report.form, opt.canonical) << "\n";
  }
  if (report.status == FitStatus::underdetermined_resolved) {
    err << "note: underdetermined system, free coefficients set to zero\n";
  }
  return kOk;
}

int run_verify(const std::string& path, long n_max, std::ostream& out,
               std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot read " << path << "\n";
    return kUsageError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const ClosedForm form = closed_form_from_json(buffer.str());
  for (long n = 1; n <= n_max; ++n) {
    const BigRat expected(oracle_value(form.spec, n));
    const BigRat actual = eval_closed_form(form, n);
    if (expected != actual) {
      out << "mismatch at n=" << n << ": form " << actual.get_str()
          << " vs sum " << expected.get_str() << "\n";
      return kMathFailure;
    }
  }
  out << "verified n=1.." << n_max << "\n";
  return kOk;
}

struct LemmaOptions {
  std::string which;
  long n = 0, m = 0, k = 0;
  bool check = false;
  long max = 8;
};

int run_lemma(const LemmaOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.check) {
    bool all_ok = true;
    for (long n = 0; n <= opt.max; ++n) {
      for (long m = 0; m <= opt.max; ++m) {
        const bool ok =
            fundamental_S00(n, m) == BigRat(triangle_sum(0, 0, n, m)) &&
            fundamental_S10(n, m) == BigRat(triangle_sum(1, 0, n, m)) &&
            fundamental_S01(n, m) == BigRat(triangle_sum(0, 1, n, m)) &&
            fundamental_S11(n, m) == BigRat(triangle_sum(1, 1, n, m));
        if (!ok) {
          out << "mismatch at n=" << n << " m=" << m << "\n";
          all_ok = false;
        }
      }
    }
    for (long k = 0; k <= 4; ++k) {
      for (long n = 0; n <= opt.max; ++n) {
        const bool ok =
            single_even_plain(k, n) == BigRat(single_sum(2 * k, false, n)) &&
            single_odd_plain(k, n) == BigRat(single_sum(2 * k + 1, false, n)) &&
            single_even_squared(k, n) == BigRat(single_sum(2 * k, true, n)) &&
            single_odd_squared(k, n) == BigRat(single_sum(2 * k + 1, true, n));
        if (!ok) {
          out << "single-sum mismatch at k=" << k << " n=" << n << "\n";
          all_ok = false;
        }
      }
    }
    out << (all_ok ? "all lemmas match the oracle" : "mismatches found")
        << "\n";
    return all_ok ? kOk : kMathFailure;
  }

  BigRat value;
  if (opt.which == "S00") value = fundamental_S00(opt.n, opt.m);
  else if (opt.which == "S10") value = fundamental_S10(opt.n, opt.m);
  else if (opt.which == "S01") value = fundamental_S01(opt.n, opt.m);
  else if (opt.which == "S11") value = fundamental_S11(opt.n, opt.m);
  else if (opt.which == "aux8") value = single_even_plain(opt.k, opt.n);
  else if (opt.which == "aux9") value = single_odd_plain(opt.k, opt.n);
  else if (opt.which == "aux7a") value = single_even_squared(opt.k, opt.n);
  else if (opt.which == "aux7b") value = single_odd_squared(opt.k, opt.n);
  else {
    err << "unknown lemma " << opt.which << "\n";
    return kUsageError;
  }
  out << value.get_str() << "\n";
  return kOk;
}

int run_inequality(long max, const std::string& which, std::ostream& out) {
  bool pass = true;
  if (which == "theorem" || which == "all") {
    const InequalityReport report = theorem_inequality_check(max);
    bool diagonal_only = report.violations.empty();
    for (const auto& [m, n] : report.equality_set) {
      if (m != n) diagonal_only = false;
    }
    if (report.equality_set.size() != static_cast<std::size_t>(max) + 1) {
      diagonal_only = false;
    }
    out << "theorem: " << report.violations.size() << " violations, equality on "
        << report.equality_set.size() << " cells"
        << (diagonal_only ? " (diagonal only)" : "") << "\n";
    pass = pass && diagonal_only;
  }
  if (which == "decomposition" || which == "all") {
    bool ok = true;
    for (long n = 0; n <= max; ++n) {
      for (long m = 0; m <= max; ++m) {
        if (!decomposition_identity_check(n, m)) {
          out << "decomposition fails at n=" << n << " m=" << m << "\n";
          ok = false;
        }
      }
    }
    out << "decomposition: " << (ok ? "holds" : "fails") << "\n";
    pass = pass && ok;
  }
  if (which == "gosper" || which == "all") {
    bool ok = true;
    long skipped = 0;
    for (long n = 0; n <= max; ++n) {
      for (long m = 0; m <= max; ++m) {
        const auto result = gosper_identity_check(n, m);
        if (!result.has_value()) {
          ++skipped;
        } else if (!*result) {
          out << "gosper identity fails at n=" << n << " m=" << m << "\n";
          ok = false;
        }
      }
    }
    out << "gosper: " << (ok ? "holds" : "fails") << " (" << skipped
        << " skipped)\n";
    pass = pass && ok;
  }
  if (which == "termwise" || which == "all") {
    const bool ok = termwise_ratio_check(max);
    out << "termwise: " << (ok ? "holds" : "fails") << "\n";
    pass = pass && ok;
  }
  return pass ? kOk : kMathFailure;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact evaluation, discovery and verification of binomial "
               "double sums with absolute values", "absum"};
  app.require_subcommand(1);

  EvaluateOptions eval_opt;
  auto* evaluate = app.add_subcommand("evaluate", "brute-force exact sum");
  evaluate->add_option("--s", eval_opt.s)->check(CLI::NonNegativeNumber);
  evaluate->add_option("--t", eval_opt.t)->check(CLI::NonNegativeNumber);
  evaluate->add_option("--k", eval_opt.k)->check(CLI::PositiveNumber);
  evaluate->add_option("--beta", eval_opt.beta)->check(CLI::PositiveNumber);
  evaluate->add_option("--n", eval_opt.n)
      ->required()
      ->check(CLI::NonNegativeNumber);
  evaluate->add_option("--m", eval_opt.m)->check(CLI::NonNegativeNumber);
  evaluate->add_option("--power", eval_opt.power)
      ->check(CLI::NonNegativeNumber);
  evaluate->add_option("--family", eval_opt.family)
      ->check(CLI::IsMember(
          {"full-square", "triangle", "single-plain", "single-squared"}));

  FitOptions fit_opt;
  auto* fit_cmd = app.add_subcommand("fit", "discover a closed form");
  fit_cmd->add_option("--s", fit_opt.s)->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--t", fit_opt.t)->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--k", fit_opt.k)
      ->required()
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--beta", fit_opt.beta)->check(CLI::PositiveNumber);
  fit_cmd->add_flag("--generic", fit_opt.generic);
  fit_cmd->add_option("--kinds", fit_opt.kinds)->delimiter(',');
  fit_cmd->add_option("--max-degree", fit_opt.max_degree)
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--denom-depth", fit_opt.denom_depths,
                      "kind=depth, repeatable");
  fit_cmd->add_option("--emit", fit_opt.emit)
      ->check(CLI::IsMember({"latex", "json"}));
  fit_cmd->add_flag("--canonical", fit_opt.canonical);

  std::string form_path;
  long n_max = 20;
  auto* verify = app.add_subcommand("verify", "check a stored closed form");
  verify->add_option("--form", form_path)->required();
  verify->add_option("--n-max", n_max)->check(CLI::PositiveNumber);

  LemmaOptions lemma_opt;
  auto* lemma = app.add_subcommand("lemma", "evaluate a fundamental lemma");
  lemma->add_option("--which", lemma_opt.which)
      ->check(CLI::IsMember(
          {"S00", "S10", "S01", "S11", "aux8", "aux9", "aux7a", "aux7b"}));
  lemma->add_option("--n", lemma_opt.n)->check(CLI::NonNegativeNumber);
  lemma->add_option("--m", lemma_opt.m)->check(CLI::NonNegativeNumber);
  lemma->add_option("--k", lemma_opt.k)->check(CLI::NonNegativeNumber);
  lemma->add_flag("--check", lemma_opt.check);
  lemma->add_option("--max", lemma_opt.max)->check(CLI::NonNegativeNumber);

  long ineq_max = 10;
  std::string ineq_which = "all";
  auto* inequality = app.add_subcommand("inequality", "two-parameter bound");
  inequality->add_option("--max", ineq_max)->check(CLI::NonNegativeNumber);
  inequality->add_option("--which", ineq_which)
      ->check(CLI::IsMember(
          {"theorem", "decomposition", "gosper", "termwise", "all"}));

  long expansion_s = 0;
  auto* expansion = app.add_subcommand("expansion", "falling-basis table");
  expansion->add_option("--S", expansion_s)
      ->required()
      ->check(CLI::NonNegativeNumber);

  // CLI11 wants argv in reverse order when parsing a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  if (evaluate->parsed()) return run_evaluate(eval_opt, out);
  if (fit_cmd->parsed()) return run_fit_command(fit_opt, out, err);
  if (verify->parsed()) return run_verify(form_path, n_max, out, err);
  if (lemma->parsed()) return run_lemma(lemma_opt, out, err);
  if (inequality->parsed()) return run_inequality(ineq_max, ineq_which, out);
  if (expansion->parsed()) {
    const ExpansionTable table = expansion_coeffs(expansion_s);
    out << expansion_to_latex(table);
    out << expansion_to_json(table);
    return kOk;
  }
  err << "no subcommand\n";
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace absum::cli
