#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcactus/tableau.hpp"

namespace qcactus {

// Generator families. s(p,q) are the defining generators (1 <= p < q <= r);
// the derived families are indexed 1..r-1 and anchored so that t(1) maps to
// the transposition (1,2) and p(r-1) to the long cycle:
//   t(i) -> (i, i+1)
//   p(i) = t(i) t(i-1) ... t(1)
//   q(i) = p(1) p(2) ... p(i)        (= s(1, i+1))
//   v(i) = t(i) t(i+1) ... t(r-1)
//   w(i) = v(r-1) v(r-2) ... v(r-i)
enum class GenFamily { s, t, p, q, v, w };

struct CactusLetter {
  GenFamily family;
  int a = 0;  // index, or interval start for s
  int b = 0;  // interval end for s
};

class CactusWord {
 public:
  explicit CactusWord(int rank, std::vector<CactusLetter> letters = {})
      : rank_(rank), letters_(std::move(letters)) {
    if (rank_ < 1) throw MathError("cactus rank must be positive");
    for (const auto& l : letters_) validate(l);
  }

  int rank() const { return rank_; }
  const std::vector<CactusLetter>& letters() const { return letters_; }

  CactusWord& append(CactusLetter l) {
    validate(l);
    letters_.push_back(l);
    return *this;
  }

  CactusWord operator*(const CactusWord& o) const {
    if (rank_ != o.rank_) throw MathError("cactus word rank mismatch");
    std::vector<CactusLetter> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return CactusWord(rank_, std::move(ls));
  }

  CactusWord repeated(int n) const {
    std::vector<CactusLetter> ls;
    for (int k = 0; k < n; ++k)
      ls.insert(ls.end(), letters_.begin(), letters_.end());
    return CactusWord(rank_, std::move(ls));
  }

  static CactusWord s(int p, int q, int rank) {
    return CactusWord(rank, {{GenFamily::s, p, q}});
  }
  static CactusWord t(int i, int rank) { return CactusWord(rank, {{GenFamily::t, i, 0}}); }
  static CactusWord p(int i, int rank) { return CactusWord(rank, {{GenFamily::p, i, 0}}); }
  static CactusWord q(int i, int rank) { return CactusWord(rank, {{GenFamily::q, i, 0}}); }
  static CactusWord v(int i, int rank) { return CactusWord(rank, {{GenFamily::v, i, 0}}); }
  static CactusWord w(int i, int rank) { return CactusWord(rank, {{GenFamily::w, i, 0}}); }

  // Purely syntactic expansion into t-letters; no group simplification.
  std::vector<int> t_indices() const {
    std::vector<int> out;
    for (const auto& l : letters_) expand(l, out);
    return out;
  }

  CactusWord to_t_word() const {
    std::vector<CactusLetter> ls;
    for (int i : t_indices()) ls.push_back({GenFamily::t, i, 0});
    return CactusWord(rank_, std::move(ls));
  }

  // CLI syntax: dot-separated letters `t3.t2.t1`, `s[2,4]`, `p5`, `q4`, `w3`.
  std::string to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) out << ".";
      const auto& l = letters_[i];
      switch (l.family) {
        case GenFamily::s: out << "s[" << l.a << "," << l.b << "]"; break;
        case GenFamily::t: out << "t" << l.a; break;
        case GenFamily::p: out << "p" << l.a; break;
        case GenFamily::q: out << "q" << l.a; break;
        case GenFamily::v: out << "v" << l.a; break;
        case GenFamily::w: out << "w" << l.a; break;
      }
    }
    return out.str();
  }

  static CactusWord parse(const std::string& text, int rank) {
    CactusWord w(rank);
    if (text.empty()) return w;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find('.', pos);
      if (next == std::string::npos) next = text.size();
      std::string tok = text.substr(pos, next - pos);
      w.append(parse_letter(tok));
      pos = next + 1;
      if (next == text.size()) break;
    }
    return w;
  }

 private:
  static CactusLetter parse_letter(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty cactus letter");
    char f = tok[0];
    std::string rest = tok.substr(1);
    auto to_int = [&](const std::string& s) {
      try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("bad index: " + tok);
        return v;
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad cactus letter: " + tok);
      }
    };
    if (f == 's') {
      if (rest.size() < 5 || rest.front() != '[' || rest.back() != ']')
        throw ParseError("bad interval letter: " + tok);
      std::string body = rest.substr(1, rest.size() - 2);
      size_t comma = body.find(',');
      if (comma == std::string::npos) throw ParseError("bad interval letter: " + tok);
      return {GenFamily::s, to_int(body.substr(0, comma)), to_int(body.substr(comma + 1))};
    }
    int idx = to_int(rest);
    switch (f) {
      case 't': return {GenFamily::t, idx, 0};
      case 'p': return {GenFamily::p, idx, 0};
      case 'q': return {GenFamily::q, idx, 0};
      case 'v': return {GenFamily::v, idx, 0};
      case 'w': return {GenFamily::w, idx, 0};
      default: throw ParseError("unknown cactus letter: " + tok);
    }
  }

  void validate(const CactusLetter& l) const {
    if (l.family == GenFamily::s) {
      if (!(1 <= l.a && l.a < l.b && l.b <= rank_))
        throw MathError("s(p,q) requires 1 <= p < q <= rank");
    } else {
      if (!(1 <= l.a && l.a <= rank_ - 1))
        throw MathError("generator index out of range 1..rank-1");
    }
  }

  void expand(const CactusLetter& l, std::vector<int>& out) const {
    auto push_p = [&](int i) {
      for (int k = i; k >= 1; --k) out.push_back(k);
    };
    auto push_q = [&](int i) {
      for (int j = 1; j <= i; ++j) push_p(j);
    };
    switch (l.family) {
      case GenFamily::t:
        out.push_back(l.a);
        break;
      case GenFamily::p:
        push_p(l.a);
        break;
      case GenFamily::q:
        push_q(l.a);
        break;
      case GenFamily::v:
        for (int k = l.a; k <= rank_ - 1; ++k) out.push_back(k);
        break;
      case GenFamily::w:
        for (int j = rank_ - 1; j >= rank_ - l.a; --j)
          for (int k = j; k <= rank_ - 1; ++k) out.push_back(k);
        break;
      case GenFamily::s:
        // s(1,m) = q(m-1); s(p,q) = s(1,q) s(1,q+1-p) s(1,q) for p > 1.
        // (The inner index q+1-p is pinned by the homomorphism images:
        // the composite must reverse the interval [p,q].)
        if (l.a == 1) {
          push_q(l.b - 1);
        } else {
          push_q(l.b - 1);
          push_q(l.b - l.a);
          push_q(l.b - 1);
        }
        break;
    }
  }

  int rank_;
  std::vector<CactusLetter> letters_;
};

// Permutation of {1..r} stored as 1-based images: perm[i-1] is the image of i.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int r) {
  Permutation p(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) p[static_cast<size_t>(i)] = i + 1;
  return p;
}

// (f after g)(x) = f(g(x)).
inline Permutation compose_permutations(const Permutation& f, const Permutation& g) {
  Permutation r(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    r[i] = f[static_cast<size_t>(g[i]) - 1];
  return r;
}

// Image under the homomorphism to the symmetric group; the rightmost letter
// acts first.
inline Permutation image_in_symmetric(const CactusWord& w) {
  Permutation acc = identity_permutation(w.rank());
  for (int i : w.t_indices()) {
    Permutation tr = identity_permutation(w.rank());
    std::swap(tr[static_cast<size_t>(i) - 1], tr[static_cast<size_t>(i)]);
    acc = compose_permutations(acc, tr);
  }
  return acc;
}

// Applies the word through bender_knuth involutions, rightmost letter first.
inline StandardTableau act_on_tableau(const CactusWord& w, const StandardTableau& t) {
  if (w.rank() != t.size()) throw MathError("word rank does not match tableau size");
  std::vector<int> ts = w.t_indices();
  StandardTableau cur = t;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) cur = bender_knuth(cur, *it);
  return cur;
}

// Lazy per-instance cache of the chain expansions p, q, v, w, s over any
// action with compose semantics "a after b". Not thread-safe; build one per
// thread.
template <class Action>
class CactusCalculator {
 public:
  using Element = typename Action::Element;

  CactusCalculator(const Action& act, int rank)
      : act_(act), r_(rank),
        tc_(static_cast<size_t>(rank)), pc_(static_cast<size_t>(rank)),
        qc_(static_cast<size_t>(rank)), vc_(static_cast<size_t>(rank)),
        wc_(static_cast<size_t>(rank)) {}

  int rank() const { return r_; }
  const Action& action() const { return act_; }

  const Element& t(int i) { return memo(tc_, i, [&] { return act_.t_elem(i); }); }

  const Element& p(int i) {
    return memo(pc_, i, [&] {
      return i == 1 ? t(1) : act_.compose(t(i), p(i - 1));
    });
  }

  const Element& q(int i) {
    return memo(qc_, i, [&] {
      return i == 1 ? p(1) : act_.compose(q(i - 1), p(i));
    });
  }

  const Element& v(int i) {
    return memo(vc_, i, [&] {
      return i == r_ - 1 ? t(r_ - 1) : act_.compose(t(i), v(i + 1));
    });
  }

  const Element& w(int i) {
    return memo(wc_, i, [&] {
      return i == 1 ? v(r_ - 1) : act_.compose(w(i - 1), v(r_ - i));
    });
  }

  Element s(int p_lo, int q_hi) {
    if (!(1 <= p_lo && p_lo < q_hi && q_hi <= r_))
      throw MathError("s(p,q) requires 1 <= p < q <= rank");
    if (p_lo == 1) return q(q_hi - 1);
    const Element& outer = q(q_hi - 1);
    const Element& inner = q(q_hi - p_lo);
    return act_.compose(act_.compose(outer, inner), outer);
  }

  Element letter(const CactusLetter& l) {
    switch (l.family) {
      case GenFamily::s: return s(l.a, l.b);
      case GenFamily::t: return t(l.a);
      case GenFamily::p: return p(l.a);
      case GenFamily::q: return q(l.a);
      case GenFamily::v: return v(l.a);
      case GenFamily::w: return w(l.a);
    }
    throw MathError("unknown generator family");
  }

  Element word(const CactusWord& w) {
    Element acc = act_.identity();
    for (const auto& l : w.letters()) acc = act_.compose(acc, letter(l));
    return acc;
  }

 private:
  template <class F>
  const Element& memo(std::vector<std::optional<Element>>& cache, int i, F&& make) {
    if (i < 1 || i > r_ - 1) throw MathError("generator index out of range");
    auto& slot = cache[static_cast<size_t>(i)];
    if (!slot) slot = make();
    return *slot;
  }

  Action act_;
  int r_;
  std::vector<std::optional<Element>> tc_, pc_, qc_, vc_, wc_;
};

// Action of the t-generators on the set of SYT of a shape, as permutations
// of the basis index space.
class TableauPermutationAction {
 public:
  using Element = std::vector<int>;

  explicit TableauPermutationAction(const Shape& shape)
      : basis_(enumerate_syt(shape)), index_(basis_) {}

  const std::vector<StandardTableau>& basis() const { return basis_; }

  Element identity() const {
    Element e(basis_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(i);
    return e;
  }

  Element t_elem(int i) const {
    Element e(basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j)
      e[j] = index_.at(bender_knuth(basis_[j], i));
    return e;
  }

  Element compose(const Element& a, const Element& b) const {
    Element r(b.size());
    for (size_t j = 0; j < b.size(); ++j) r[j] = a[static_cast<size_t>(b[j])];
    return r;
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element reverse_complement_elem() const {
    Element e(basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j)
      e[j] = index_.at(reverse_complement(basis_[j]));
    return e;
  }

 private:
  std::vector<StandardTableau> basis_;
  TableauIndex index_;
};

struct RelationCheck {
  std::string relation;
  std::string instance;
  bool pass = false;
};

struct PresentationReport {
  int rank = 0;
  std::vector<RelationCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks every instance of the three defining relation families on the
// given action: involutivity, commutation of disjoint intervals, and the
// nesting relation. Failures are report entries, not exceptions.
template <class Action>
PresentationReport check_presentation(const Action& act, int r) {
  if (r < 2) throw MathError("presentation check requires rank >= 2");
  CactusCalculator<Action> calc(act, r);
  PresentationReport report;
  report.rank = r;
  auto instance = [](int p, int q, int k, int l) {
    std::ostringstream out;
    out << "s[" << p << "," << q << "]";
    if (k > 0) out << ", s[" << k << "," << l << "]";
    return out.str();
  };

  for (int p = 1; p <= r; ++p)
    for (int q = p + 1; q <= r; ++q) {
      auto g = calc.s(p, q);
      bool ok = act.equal(act.compose(g, g), act.identity());
      report.checks.push_back({"involution", instance(p, q, 0, 0), ok});
    }

  for (int p = 1; p <= r; ++p)
    for (int q = p + 1; q <= r; ++q)
      for (int k = q + 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l) {
          auto a = calc.s(p, q);
          auto b = calc.s(k, l);
          bool ok = act.equal(act.compose(a, b), act.compose(b, a));
          report.checks.push_back({"disjoint_commute", instance(p, q, k, l), ok});
        }

  for (int p = 1; p <= r; ++p)
    for (int q = p + 1; q <= r; ++q)
      for (int k = p; k <= q; ++k)
        for (int l = k + 1; l <= q; ++l) {
          if (k == p && l == q) continue;
          auto outer = calc.s(p, q);
          auto inner = calc.s(k, l);
          auto reflected = calc.s(p + q - l, p + q - k);
          bool ok = act.equal(act.compose(outer, inner),
                              act.compose(reflected, outer));
          report.checks.push_back({"nesting", instance(p, q, k, l), ok});
        }

  return report;
}

struct LemmaCyclicReport {
  Shape shape;
  bool holds = false;
  long promotion_order = 0;
};

// p(r-1)^r = w(r-1) q(r-1) as permutations of SYT(shape); shape-independent.
inline LemmaCyclicReport verify_lemma_cyclic(const Shape& shape) {
  int r = shape.size();
  if (r < 2) throw MathError("lemma check requires size >= 2");
  TableauPermutationAction act(shape);
  CactusCalculator<TableauPermutationAction> calc(act, r);
  auto p = calc.p(r - 1);
  auto lhs = act.identity();
  for (int k = 0; k < r; ++k) lhs = act.compose(lhs, p);
  auto rhs = act.compose(calc.w(r - 1), calc.q(r - 1));
  return {shape, act.equal(lhs, rhs), permutation_order(p)};
}

struct RectOrderReport {
  Shape shape;
  bool p_power_identity = false;
  bool rc_conjugates_q_to_w = false;
  bool q_commutes_with_rc = false;
  long promotion_order = 0;

  bool all_pass() const {
    return p_power_identity && rc_conjugates_q_to_w && q_commutes_with_rc;
  }
};

// The three facts behind the r-th power identity on rectangles:
// p(r-1)^r = 1, RC q(r-1) RC = w(r-1), and RC q(r-1) = q(r-1) RC.
inline RectOrderReport verify_rect_order(const Shape& shape) {
  if (!shape.is_rectangular())
    throw MathError("rect order check requires a rectangular shape");
  int r = shape.size();
  if (r < 2) throw MathError("rect order check requires size >= 2");
  TableauPermutationAction act(shape);
  CactusCalculator<TableauPermutationAction> calc(act, r);
  RectOrderReport report{shape};
  auto p = calc.p(r - 1);
  auto power = act.identity();
  for (int k = 0; k < r; ++k) power = act.compose(power, p);
  report.p_power_identity = act.equal(power, act.identity());
  report.promotion_order = permutation_order(p);
  auto rc = act.reverse_complement_elem();
  auto q = calc.q(r - 1);
  auto w = calc.w(r - 1);
  report.rc_conjugates_q_to_w =
      act.equal(act.compose(act.compose(rc, q), rc), w);
  report.q_commutes_with_rc = act.equal(act.compose(rc, q), act.compose(q, rc));
  return report;
}

// Cross-validation of the sliding algorithm against the t-chain definition
// of promotion on every SYT of the shape.
inline bool promotion_matches_t_chain(const Shape& shape) {
  int r = shape.size();
  for (const auto& t : enumerate_syt(shape)) {
    StandardTableau via_chain = t;
    for (int i = 1; i <= r - 1; ++i) via_chain = bender_knuth(via_chain, i);
    if (!(jdt_promotion(t) == via_chain)) return false;
  }
  return true;
}

}  // namespace qcactus
