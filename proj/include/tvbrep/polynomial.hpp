#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tvbrep/error.hpp"
#include "tvbrep/rational.hpp"
#include "tvbrep/variables.hpp"

namespace tvbrep {

using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then the first variable in
// ring order with a differing exponent decides.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <bool Laurent>
class BasicPolynomial;

template <bool Laurent>
struct PolynomialRing {
  Variables vars;

  BasicPolynomial<Laurent> zero() const;
  BasicPolynomial<Laurent> one() const;
  BasicPolynomial<Laurent> constant(const Rational& r) const;
  BasicPolynomial<Laurent> variable(const std::string& name) const;
  std::string name() const {
    return Laurent ? "Q<" + vars.joined() + ">" : "Q[" + vars.joined() + "]";
  }
  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) { return a.vars == b.vars; }
};

// Sparse polynomial with rational coefficients. With Laurent = true exponents
// may be negative (the rings Q[t^{+-1}] and Q[t^{+-1}, q^{+-1}]).
template <bool Laurent>
class BasicPolynomial {
 public:
  using ring_type = PolynomialRing<Laurent>;
  using TermMap = std::map<Exponents, Rational, GrlexLess>;
  static constexpr bool is_laurent = Laurent;

  BasicPolynomial() = default;
  explicit BasicPolynomial(Variables vars) : vars_(std::move(vars)) {}

  static BasicPolynomial constant(const Variables& vars, const Rational& c) {
    BasicPolynomial p(vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(vars.size(), 0), c);
    return p;
  }
  static BasicPolynomial variable(const Variables& vars, const std::string& name) {
    auto idx = vars.index_of(name);
    if (!idx) throw RingMismatch("variable '" + name + "' not in ring " + ring_type{vars}.name());
    Exponents e(vars.size(), 0);
    e[*idx] = 1;
    return monomial(vars, std::move(e), Rational(1));
  }
  static BasicPolynomial monomial(const Variables& vars, Exponents e, const Rational& c) {
    if (e.size() != vars.size()) throw DimensionMismatch("exponent vector length does not match ring");
    if (!Laurent)
      for (int x : e)
        if (x < 0) throw OutsideDomain("negative exponent in polynomial ring");
    BasicPolynomial p(vars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const Variables& variables() const { return vars_; }
  ring_type ring() const { return ring_type{vars_}; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](int x) { return x == 0; }));
  }
  bool is_one() const { return is_constant() && constant_value().is_one(); }
  Rational constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  // Largest term under graded lex. Undefined on zero.
  const std::pair<const Exponents, Rational>& leading_term() const { return *terms_.rbegin(); }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  long total_degree() const {
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      long d = std::accumulate(e.begin(), e.end(), 0L);
      if (first || d > best) best = d;
      first = false;
    }
    return best;
  }
  int degree_in(std::size_t var) const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] > best) best = e[var];
      first = false;
    }
    return best;
  }

  // Componentwise minimum exponent over all terms (the monomial content).
  Exponents min_exponents() const {
    Exponents m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  bool is_unit() const {
    if (Laurent) return terms_.size() == 1;
    return is_constant() && !is_zero();
  }
  BasicPolynomial inverse() const {
    if (!is_unit()) throw NotAUnit(to_string() + " is not a unit in " + ring().name());
    const auto& [e, c] = *terms_.begin();
    Exponents neg(e.size());
    std::transform(e.begin(), e.end(), neg.begin(), [](int x) { return -x; });
    return monomial(vars_, std::move(neg), c.inverse());
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  BasicPolynomial operator-() const {
    BasicPolynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_ring(b);
    BasicPolynomial r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  BasicPolynomial scaled(const Rational& s) const {
    BasicPolynomial r(vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }
  // Multiply by the monomial x^shift (shift may be negative only for Laurent
  // rings or when every term stays nonnegative).
  BasicPolynomial shifted(const Exponents& shift) const {
    BasicPolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents n(e);
      for (std::size_t i = 0; i < n.size(); ++i) {
        n[i] += shift[i];
        if (!Laurent && n[i] < 0) throw OutsideDomain("monomial shift leaves the polynomial ring");
      }
      r.terms_.emplace(std::move(n), c);
    }
    return r;
  }

  BasicPolynomial pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BasicPolynomial result = constant(vars_, Rational(1));
    BasicPolynomial base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_ring(b);
    return a.terms_ == b.terms_;
  }

  // Quotient a / b when b divides a exactly, otherwise nullopt.
  friend std::optional<BasicPolynomial> exact_quotient(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_ring(b);
    if (b.is_zero()) throw OutsideDomain("division by the zero polynomial");
    if (a.is_zero()) return BasicPolynomial(a.vars_);
    if constexpr (Laurent) {
      Exponents ma = a.min_exponents(), mb = b.min_exponents();
      auto neg = [](Exponents v) {
        for (int& x : v) x = -x;
        return v;
      };
      auto pa = a.shifted(neg(ma)), pb = b.shifted(neg(mb));
      auto q = divide_nonnegative(pa, pb);
      if (!q) return std::nullopt;
      Exponents shift(ma.size());
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = ma[i] - mb[i];
      return q->shifted(shift);
    } else {
      return divide_nonnegative(a, b);
    }
  }

  // Exact square root of a polynomial with nonnegative exponents.
  std::optional<BasicPolynomial> try_sqrt() const {
    if (is_zero()) return *this;
    const auto& [le, lc] = leading_term();
    Rational root_c;
    if (!lc.try_sqrt(root_c)) return std::nullopt;
    Exponents root_e(le.size());
    for (std::size_t i = 0; i < le.size(); ++i) {
      if (le[i] % 2 != 0 || le[i] < 0) return std::nullopt;
      root_e[i] = le[i] / 2;
    }
    long min_degree = 0;
    {
      bool first = true;
      for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        if (first || d < min_degree) min_degree = d;
        first = false;
      }
    }
    BasicPolynomial root = monomial(vars_, root_e, root_c);
    Exponents last = root_e;
    const Exponents lead_root = root_e;
    const Rational two_lead = root_c * Rational(2);
    for (;;) {
      BasicPolynomial rem = *this - root * root;
      if (rem.is_zero()) return root;
      const auto& [re, rc] = rem.leading_term();
      Exponents te(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) {
        te[i] = re[i] - lead_root[i];
        if (te[i] < 0) return std::nullopt;
      }
      if (!GrlexLess{}(te, last)) return std::nullopt;
      if (2 * std::accumulate(te.begin(), te.end(), 0L) < min_degree) return std::nullopt;
      root += monomial(vars_, te, rc / two_lead);
      last = te;
    }
  }

  // Terms in decreasing graded-lex order, "+"-joined, each "coef*v^e*...".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += "+";
      out += it->second.to_string();
      for (std::size_t i = 0; i < it->first.size(); ++i)
        if (it->first[i] != 0) out += "*" + vars_[i] + "^" + std::to_string(it->first[i]);
    }
    return out;
  }

  static BasicPolynomial parse(const Variables& vars, std::string_view text) {
    BasicPolynomial p(vars);
    if (text == "0") return p;
    if (text.empty()) throw ParseError("empty polynomial");
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find('+', pos);
      std::string_view term = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      p.parse_term(term, text);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return p;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicPolynomial& p) { return os << p.to_string(); }

 private:
  void check_ring(const BasicPolynomial& o) const {
    if (!(vars_ == o.vars_))
      throw RingMismatch("ring mismatch: " + ring().name() + " vs " + o.ring().name());
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void parse_term(std::string_view term, std::string_view whole) {
    auto fail = [&](const std::string& why) {
      throw ParseError("cannot parse term '" + std::string(term) + "' in '" + std::string(whole) + "': " + why);
    };
    if (term.empty()) fail("empty term");
    std::size_t star = term.find('*');
    Rational coef = Rational::parse(term.substr(0, star));
    if (coef.is_zero()) fail("zero coefficient");
    Exponents e(vars_.size(), 0);
    std::vector<bool> seen(vars_.size(), false);
    while (star != std::string_view::npos) {
      std::size_t begin = star + 1;
      star = term.find('*', begin);
      std::string_view factor = term.substr(begin, star == std::string_view::npos ? std::string_view::npos : star - begin);
      std::size_t caret = factor.find('^');
      if (caret == std::string_view::npos) fail("factor without exponent");
      auto idx = vars_.index_of(std::string(factor.substr(0, caret)));
      if (!idx) fail("unknown variable");
      if (seen[*idx]) fail("repeated variable");
      seen[*idx] = true;
      std::string_view ex = factor.substr(caret + 1);
      std::string_view digits = ex;
      if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail("malformed exponent");
      int value = std::stoi(std::string(ex));
      if (value == 0) fail("zero exponent");
      if (!Laurent && value < 0) fail("negative exponent outside a Laurent ring");
      e[*idx] = value;
    }
    add_term(e, coef);
  }

  static std::optional<BasicPolynomial> divide_nonnegative(const BasicPolynomial& a, const BasicPolynomial& b) {
    BasicPolynomial rem = a;
    BasicPolynomial quot(a.vars_);
    const auto& [be, bc] = b.leading_term();
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading_term();
      Exponents te(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) {
        te[i] = re[i] - be[i];
        if (te[i] < 0) return std::nullopt;
      }
      BasicPolynomial t = monomial(a.vars_, std::move(te), rc / bc);
      quot += t;
      rem -= t * b;
    }
    return quot;
  }

  Variables vars_;
  TermMap terms_;
};

using MultiPoly = BasicPolynomial<false>;
using Laurent = BasicPolynomial<true>;

template <bool L>
BasicPolynomial<L> PolynomialRing<L>::zero() const {
  return BasicPolynomial<L>(vars);
}
template <bool L>
BasicPolynomial<L> PolynomialRing<L>::one() const {
  return BasicPolynomial<L>::constant(vars, Rational(1));
}
template <bool L>
BasicPolynomial<L> PolynomialRing<L>::constant(const Rational& r) const {
  return BasicPolynomial<L>::constant(vars, r);
}
template <bool L>
BasicPolynomial<L> PolynomialRing<L>::variable(const std::string& name) const {
  return BasicPolynomial<L>::variable(vars, name);
}

}  // namespace tvbrep
