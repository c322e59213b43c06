#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcactus/cactus.hpp"
#include "qcactus/csp.hpp"
#include "qcactus/interp.hpp"
#include "qcactus/matrix.hpp"
#include "qcactus/seminormal.hpp"

namespace qcactus {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrices: canonical JSON payload and round-trip.

inline Json matrix_to_json(const MatrixQq& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline MatrixQq matrix_from_json(const Json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows)
    throw ParseError("matrix JSON row count mismatch");
  MatrixQq m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = entries.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != cols)
      throw ParseError("matrix JSON column count mismatch");
    for (int j2 = 0; j2 < cols; ++j2)
      m.at(i, j2) = RationalFunction::parse(row.at(static_cast<size_t>(j2)).get<std::string>());
  }
  return m;
}

// ---------------------------------------------------------------------------
// Quantum-integer pretty printing. A canonical entry is matched greedily as
//   constant * q^k * prod [n_i] / prod [m_j]
// in balanced quantum integers; anything unmatched falls back to the raw
// rational-function form.

struct QuantumFactorization {
  bool ok = false;
  Rational constant;
  long q_power = 0;
  std::vector<int> num_factors;  // descending
  std::vector<int> den_factors;
};

namespace serialize_detail {

// Ordinary part of balanced [n]: 1 + q^2 + ... + q^(2n-2).
inline LaurentPoly balanced_ordinary(int n) {
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p.add_term(2L * j, Rational(1));
  return p;
}

inline bool factor_ordinary(LaurentPoly poly, std::vector<int>& factors, Rational& constant,
                            long& balance_shift) {
  while (!poly.is_constant()) {
    long deg = poly.max_exp();
    bool divided = false;
    for (int n = static_cast<int>(deg / 2) + 1; n >= 2; --n) {
      LaurentPoly quot, rem;
      LaurentPoly::divmod(poly, balanced_ordinary(n), quot, rem);
      if (rem.is_zero()) {
        factors.push_back(n);
        balance_shift += n - 1;
        poly = std::move(quot);
        divided = true;
        break;
      }
    }
    if (!divided) return false;
  }
  if (poly.is_zero()) return false;
  constant = poly.coeff(0);
  return true;
}

}  // namespace serialize_detail

inline QuantumFactorization quantum_factor(const RationalFunction& x) {
  QuantumFactorization f;
  if (x.is_zero()) return f;
  long shift = x.num().min_exp();
  LaurentPoly n = x.num().shifted(-shift);
  Rational cn(1), cd(1);
  long balance = shift;
  if (!serialize_detail::factor_ordinary(std::move(n), f.num_factors, cn, balance)) return f;
  long den_balance = 0;
  if (!serialize_detail::factor_ordinary(x.den(), f.den_factors, cd, den_balance)) return f;
  if (cd != 1) return f;  // canonical denominators are monic
  f.ok = true;
  f.constant = cn;
  f.q_power = balance - den_balance;
  std::sort(f.num_factors.rbegin(), f.num_factors.rend());
  std::sort(f.den_factors.rbegin(), f.den_factors.rend());
  return f;
}

namespace serialize_detail {

inline std::string bracket_product(const std::vector<int>& factors, bool latex) {
  std::ostringstream out;
  for (size_t i = 0; i < factors.size();) {
    size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    size_t mult = j - i;
    if (i > 0 && !latex) out << "*";
    out << "[" << factors[i] << "]";
    if (mult > 1) out << (latex ? "^{" + std::to_string(mult) + "}" : "^" + std::to_string(mult));
    i = j;
  }
  return out.str();
}

inline std::string laurent_pretty(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = c;
    if (!first) {
      out << (a > 0 ? (latex ? " + " : "+") : (latex ? " - " : "-"));
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1 && e != 0);
    if (!unit) out << qcactus::to_string(a);
    if (e != 0) {
      if (!unit && !latex) out << "*";
      out << "q";
      if (e != 1) out << (latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e));
    }
  }
  return out.str();
}

inline std::string fraction(const std::string& num, const std::string& den, bool latex) {
  if (den.empty()) return num;
  if (latex) return "\\frac{" + num + "}{" + den + "}";
  return num + "/" + den;
}

}  // namespace serialize_detail

// Human-readable entry: quantum-integer form when recognizable, raw rational
// function otherwise. `latex` switches between \frac-style and plain text.
inline std::string entry_pretty(const RationalFunction& x, bool latex) {
  using namespace serialize_detail;
  if (x.is_zero()) return "0";
  QuantumFactorization f = quantum_factor(x);
  if (!f.ok) {
    std::string num = laurent_pretty(x.num(), latex);
    if (x.is_polynomial()) return num;
    if (x.num().term_count() > 1 && !latex) num = "(" + num + ")";
    std::string den = laurent_pretty(x.den(), latex);
    if (x.den().term_count() > 1 && !latex) den = "(" + den + ")";
    return fraction(num, den, latex);
  }
  bool negative = f.constant < 0;
  Rational c = negative ? Rational(-f.constant) : f.constant;
  std::ostringstream num, den;
  Integer cn = c.get_num();
  Integer cd = c.get_den();
  bool num_has_factor = !f.num_factors.empty() || f.q_power > 0;
  bool den_has_factor = !f.den_factors.empty() || f.q_power < 0;
  if (cn != 1 || !num_has_factor) num << cn.get_str();
  if (f.q_power != 0) {
    long e = f.q_power > 0 ? f.q_power : -f.q_power;
    std::ostringstream& side = f.q_power > 0 ? num : den;
    if (!side.str().empty() && !latex) side << "*";
    side << "q";
    if (e != 1) side << (latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e));
  }
  if (!f.num_factors.empty()) {
    if (!num.str().empty() && !latex) num << "*";
    num << bracket_product(f.num_factors, latex);
  }
  if (cd != 1) {
    den << cd.get_str();
    if (!f.den_factors.empty() && !latex) den << "*";
  }
  if (!f.den_factors.empty()) den << bracket_product(f.den_factors, latex);
  std::string result = fraction(num.str(), den.str(), latex);
  return negative ? "-" + result : result;
}

// LaTeX array body in the style of the worked example.
inline std::string matrix_to_latex(const MatrixQq& m) {
  std::ostringstream out;
  out << "\\left(\\begin{array}{" << std::string(static_cast<size_t>(m.cols()), 'r') << "}\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << " & ";
      out << entry_pretty(m.at(i, j), true);
    }
    out << " \\\\\n";
  }
  out << "\\end{array}\\right)\n";
  return out.str();
}

inline std::string matrix_to_text(const MatrixQq& m) {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.rows()));
  std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::string s = entry_pretty(m.at(i, j), false);
      width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], s.size());
      cells[static_cast<size_t>(i)].push_back(std::move(s));
    }
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& s = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
      out << std::string(width[static_cast<size_t>(j)] - s.size(), ' ') << s;
      out << (j + 1 < m.cols() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Tableaux and shapes.

inline Json tableau_to_json(const StandardTableau& t) {
  return Json{{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

inline StandardTableau tableau_from_json(const Json& j) {
  Shape shape(j.at("shape").get<std::vector<int>>());
  return StandardTableau(shape, j.at("rows").get<std::vector<std::vector<int>>>());
}

// ---------------------------------------------------------------------------
// Polynomials.

inline Json intpoly_to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).get_str());
  return coeffs;
}

// Coefficients as plain integers when they fit, strings otherwise.
inline Json intpoly_to_json_numeric(const IntPoly& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    Integer c = p.coeff(k);
    if (c.fits_slong_p())
      coeffs.push_back(c.get_si());
    else
      coeffs.push_back(c.get_str());
  }
  return coeffs;
}

inline std::string intpoly_to_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Integer c = p.coeff(k);
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Integer a = abs(c);
    if (a != 1 || k == 0) out << a.get_str();
    if (k >= 1) {
      if (a != 1) out << "*";
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reports.

inline Json checks_to_json(const std::vector<RelationCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks)
    arr.push_back(Json{{"relation", c.relation},
                       {"instance", c.instance},
                       {"status", c.pass ? "pass" : "fail"}});
  return arr;
}

inline Json presentation_report_to_json(const PresentationReport& r) {
  return Json{{"rank", r.rank}, {"all_pass", r.all_pass()}, {"checks", checks_to_json(r.checks)}};
}

inline Json relation_suite_to_json(const RelationSuiteReport& r) {
  return Json{{"shape", r.shape.parts()},
              {"all_pass", r.all_pass()},
              {"checks", checks_to_json(r.checks)}};
}

inline Json lemma_cyclic_to_json(const LemmaCyclicReport& r) {
  return Json{{"shape", r.shape.parts()},
              {"holds", r.holds},
              {"promotion_order", r.promotion_order}};
}

inline Json rect_order_to_json(const RectOrderReport& r) {
  return Json{{"shape", r.shape.parts()},
              {"p_power_identity", r.p_power_identity},
              {"rc_conjugates_q_to_w", r.rc_conjugates_q_to_w},
              {"q_commutes_with_rc", r.q_commutes_with_rc},
              {"promotion_order", r.promotion_order},
              {"all_pass", r.all_pass()}};
}

inline Json certificate_to_json(const InterpolationCertificate& c, bool include_matrices) {
  Json j{{"shape", c.shape.parts()},
         {"regular_at_zero", c.regular_at_zero},
         {"power_is_identity", c.power_is_identity}};
  j["power_order"] = c.power_order ? Json(*c.power_order) : Json(nullptr);
  j["eval0_is_promotion"] = c.eval0_is_promotion ? Json(*c.eval0_is_promotion) : Json(nullptr);
  j["char_polys_equal"] = c.char_polys_equal;
  if (c.char_poly_eval0) j["char_poly_eval0"] = c.char_poly_eval0->to_string();
  if (c.char_poly_eval1) j["char_poly_eval1"] = c.char_poly_eval1->to_string();
  j["matched_basis_permutation"] =
      c.matched_basis_permutation ? Json(*c.matched_basis_permutation) : Json(nullptr);
  if (include_matrices) {
    j["p_hat"] = matrix_to_json(c.p_hat);
    if (c.eval0) j["eval0"] = matrix_to_json(*c.eval0);
    if (c.eval1) j["eval1"] = matrix_to_json(*c.eval1);
  }
  return j;
}

inline Json csp_verdict_to_json(const CspVerdict& v) {
  Json per_k = Json::array();
  for (const auto& e : v.per_k)
    per_k.push_back(Json{{"k", e.k},
                         {"lhs", e.lhs.to_string()},
                         {"rhs", e.rhs},
                         {"equal", e.equal}});
  return Json{{"shape", v.shape.parts()},
              {"polynomial", v.which == CspPolynomial::q_hook ? "q_hook" : "maj"},
              {"coefficients", intpoly_to_json_numeric(v.polynomial)},
              {"fix_counts", v.fix_counts},
              {"per_k", std::move(per_k)},
              {"holds", v.holds}};
}

inline Json example_match_to_json(const ExampleMatchReport& r, bool include_matrices) {
  Json j{{"matched", r.matched}, {"basis_permutation", r.basis_permutation}};
  j["per_matrix"] = checks_to_json(r.per_matrix);
  if (!r.diffs.empty()) {
    Json diffs = Json::array();
    for (const auto& d : r.diffs)
      diffs.push_back(Json{{"matrix", d.matrix},
                           {"row", d.row},
                           {"col", d.col},
                           {"expected", d.expected},
                           {"computed", d.computed}});
    j["diffs"] = std::move(diffs);
  }
  if (include_matrices) {
    j["interpolating"] = matrix_to_json(r.p_hat);
    j["interpolating_inverse"] = matrix_to_json(r.p_hat_inverse);
    j["promotion"] = matrix_to_json(r.eval0);
    j["promotion_inverse"] = matrix_to_json(r.eval0_inverse);
    j["rotation"] = matrix_to_json(r.eval1);
    j["rotation_inverse"] = matrix_to_json(r.eval1_inverse);
  }
  return j;
}

inline Json intertwiner_report_to_json(const IntertwinerReport& r) {
  return Json{{"m_c0_eq_phat_m", r.m_c0_eq_phat_m},
              {"m_phat_eq_c0_m", r.m_phat_eq_c0_m},
              {"m_c0_eq_c1_m", r.m_c0_eq_c1_m},
              {"m_c1_eq_c0_m", r.m_c1_eq_c0_m},
              {"any", r.any()}};
}

}  // namespace qcactus
