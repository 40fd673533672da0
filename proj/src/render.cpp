#include "absum/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace absum {

std::string closed_form_to_json(const ClosedForm& form) {
  nlohmann::json doc;
  doc["spec"] = {{"s", form.spec.s},
                 {"t", form.spec.t},
                 {"k", form.spec.k},
                 {"beta", form.spec.beta}};
  doc["terms"] = nlohmann::json::array();
  for (const auto& term : form.terms) {
    nlohmann::json entry;
    entry["kind"] = basis_kind_name(term.kind);
    entry["numerator"] = nlohmann::json::array();
    for (const auto& c : term.numerator.coeffs()) {
      entry["numerator"].push_back(format_rational(c));
    }
    entry["denom_offsets"] = term.denom_offsets;
    doc["terms"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

ClosedForm closed_form_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  ClosedForm form;
  form.spec.s = doc.at("spec").at("s").get<long>();
  form.spec.t = doc.at("spec").at("t").get<long>();
  form.spec.k = doc.at("spec").at("k").get<long>();
  form.spec.beta = doc.at("spec").at("beta").get<long>();
  form.spec.family = SumFamily::full_square;
  for (const auto& entry : doc.at("terms")) {
    BasisTerm term;
    term.kind = basis_kind_from_name(entry.at("kind").get<std::string>());
    std::vector<BigRat> coeffs;
    for (const auto& c : entry.at("numerator")) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    term.numerator = Poly(std::move(coeffs));
    term.denom_offsets = entry.at("denom_offsets").get<std::vector<long>>();
    // Odd, positive, strictly increasing: keeps every denominator factor
    // nonzero at integer n (serialization emits 1, 3, 5, ...). The two pure
    // power kinds never carry a denominator.
    if ((term.kind == BasisKind::pow4central ||
         term.kind == BasisKind::pow16) &&
        !term.denom_offsets.empty()) {
      throw std::invalid_argument("denominator offsets on a power basis kind");
    }
    for (std::size_t i = 0; i < term.denom_offsets.size(); ++i) {
      const long d = term.denom_offsets[i];
      if (d < 1 || d % 2 == 0 ||
          (i > 0 && d <= term.denom_offsets[i - 1])) {
        throw std::invalid_argument("malformed denom_offsets");
      }
    }
    form.terms.push_back(std::move(term));
  }
  return form;
}

namespace {

// (base*n - offset) linear factors; scalars accumulate separately.
struct LinearFactor {
  long base;
  long offset;
  bool operator==(const LinearFactor& other) const = default;
};

struct DisplayTerm {
  BigInt content_num = 1;   // carries the sign
  BigInt content_den = 1;
  long n_power = 0;
  Poly reduced;                       // integer coefficients, gcd 1, leading > 0
  std::vector<LinearFactor> denominator;
  std::string basis;
};

// Split p into (cn/cd) * n^v * Q with Q primitive over the integers and
// positive leading coefficient.
void factor_poly(const Poly& p, BigInt& cn, BigInt& cd, long& v, Poly& q) {
  v = 0;
  while (p.coeff(static_cast<std::size_t>(v)) == 0) ++v;
  BigInt g = 0, l = 1;
  for (int i = v; i <= p.degree(); ++i) {
    const BigRat c = p.coeff(static_cast<std::size_t>(i));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  const bool negative = p.coeffs().back() < 0;
  cn = negative ? -g : g;
  cd = l;
  std::vector<BigRat> reduced;
  for (int i = v; i <= p.degree(); ++i) {
    reduced.push_back(p.coeff(static_cast<std::size_t>(i)) * BigRat(cd) /
                      BigRat(cn));
  }
  q = Poly(std::move(reduced));
}

std::string int_poly_latex(const Poly& q) {
  std::ostringstream out;
  bool first = true;
  for (int i = q.degree(); i >= 0; --i) {
    BigRat c = q.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? "-" : "+");
    }
    first = false;
    if (c < 0) c = -c;
    if (c != 1 || i == 0) {
      if (c.get_den() == 1) {
        out << c.get_num().get_str();
      } else {
        out << "\\tfrac{" << c.get_num().get_str() << "}{"
            << c.get_den().get_str() << "}";
      }
    }
    if (i > 0) {
      out << "n";
      if (i > 1) out << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

std::string factor_latex(const LinearFactor& f) {
  std::ostringstream out;
  out << f.base << "n" << (f.offset >= 0 ? "-" : "+")
      << (f.offset >= 0 ? f.offset : -f.offset);
  return out.str();
}

std::string render_display_term(const DisplayTerm& term) {
  std::ostringstream num;
  const bool has_poly = !(term.reduced == Poly::constant(1));
  BigInt abs_num = term.content_num < 0 ? BigInt(-term.content_num)
                                        : term.content_num;
  if (abs_num != 1 || (term.n_power == 0 && !has_poly)) {
    num << abs_num.get_str();
  }
  if (term.n_power > 0) {
    num << "n";
    if (term.n_power > 1) num << "^" << term.n_power;
  }
  if (has_poly) {
    num << "(" << int_poly_latex(term.reduced) << ")";
  }
  std::string numerator = num.str();
  if (numerator.empty()) numerator = "1";

  std::ostringstream out;
  if (term.content_den == 1 && term.denominator.empty()) {
    out << numerator;
  } else {
    std::ostringstream den;
    if (term.content_den != 1) den << term.content_den.get_str();
    if (term.denominator.size() == 1 && term.content_den == 1) {
      den << factor_latex(term.denominator[0]);
    } else {
      for (const auto& f : term.denominator) {
        den << "(" << factor_latex(f) << ")";
      }
    }
    out << "\\frac{" << numerator << "}{" << den.str() << "}";
  }
  out << term.basis;
  return out.str();
}

std::string canonical_basis_latex(BasisKind kind) {
  switch (kind) {
    case BasisKind::central4n:
      return "\\binom{4n}{2n}";
    case BasisKind::centralSq:
      return "\\binom{2n}{n}^2";
    case BasisKind::pow4central:
      return "4^n\\binom{2n}{n}";
    case BasisKind::pow16:
      return "16^n";
  }
  return "";
}

DisplayTerm make_display_term(const BasisTerm& term, bool canonical) {
  DisplayTerm display;
  Poly numerator = term.numerator;
  std::vector<LinearFactor> denominator;
  for (long d : term.denom_offsets) {
    denominator.push_back({term.kind == BasisKind::central4n ? 4 : 2, d});
  }
  display.basis = canonical_basis_latex(term.kind);

  // Absorb the central4n denominator depth r into a shifted binomial
  // C(4n-r, 2n-r); the leftover factors stay in the denominator.
  const long shift = static_cast<long>(term.denom_offsets.size());
  if (!canonical && term.kind == BasisKind::central4n && shift > 0) {
    BigInt scale = 1;
    std::vector<LinearFactor> incoming;
    for (long j = 0; j < shift; ++j) incoming.push_back({4, j});
    for (long j = 0; j < shift; ++j) denominator.push_back({2, j});
    for (const auto& f : incoming) {
      auto hit = std::find(denominator.begin(), denominator.end(), f);
      if (hit != denominator.end()) {
        denominator.erase(hit);
        continue;
      }
      if (f.offset % 2 == 0) {
        const LinearFactor half{2, f.offset / 2};
        auto h = std::find(denominator.begin(), denominator.end(), half);
        if (h != denominator.end()) {
          denominator.erase(h);
          scale *= 2;
          continue;
        }
      }
      numerator = numerator * Poly({BigRat(-f.offset), BigRat(f.base)});
    }
    for (auto& f : denominator) {
      if (f.base == 2) {  // render as (4n-2c), compensating by 2
        f = {4, 2 * f.offset};
        scale *= 2;
      }
    }
    std::sort(denominator.begin(), denominator.end(),
              [](const LinearFactor& a, const LinearFactor& b) {
                return a.offset < b.offset;
              });
    numerator = numerator * BigRat(scale);
    std::ostringstream basis;
    basis << "\\binom{4n-" << shift << "}{2n-" << shift << "}";
    display.basis = basis.str();
  }

  factor_poly(numerator, display.content_num, display.content_den,
              display.n_power, display.reduced);
  display.denominator = std::move(denominator);
  return display;
}

}  // namespace

std::string emit_latex(const ClosedForm& form, bool canonical) {
  if (form.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : form.terms) {
    if (term.numerator.is_zero()) continue;
    DisplayTerm display = make_display_term(term, canonical);
    const bool negative = display.content_num < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    out << render_display_term(display);
  }
  return first ? "0" : out.str();
}

std::string poly_to_latex(const Poly& p) { return int_poly_latex(p); }

std::string expansion_to_json(const ExpansionTable& table) {
  nlohmann::json doc;
  doc["S"] = table.S;
  doc["coeffs"] = nlohmann::json::array();
  for (const auto& c : table.coeffs) {
    nlohmann::json entry = nlohmann::json::array();
    for (const auto& v : c.coeffs()) entry.push_back(format_rational(v));
    doc["coeffs"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

std::string expansion_to_latex(const ExpansionTable& table) {
  std::ostringstream out;
  for (long a = 0; a <= table.S; ++a) {
    out << "c_{" << a << "," << table.S << "}(n) = "
        << poly_to_latex(table.coeffs[static_cast<std::size_t>(a)]) << "\n";
  }
  return out.str();
}

}  // namespace absum
