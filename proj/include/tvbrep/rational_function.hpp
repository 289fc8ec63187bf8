#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "tvbrep/polynomial.hpp"

namespace tvbrep {

class RationalFunction;

struct RationalFunctionField {
  Variables vars;

  RationalFunction zero() const;
  RationalFunction one() const;
  RationalFunction constant(const Rational& r) const;
  RationalFunction variable(const std::string& name) const;
  std::string name() const { return "Q(" + vars.joined() + ")"; }
  friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) {
    return a.vars == b.vars;
  }
};

// Element of the fraction field Q(v1, ..., vk).
//
// No multivariate gcd is computed. Normal form only cancels the common
// monomial factor, clears exact divisibility in either direction and makes the
// denominator monic, so two equal functions may be stored differently.
// Equality is therefore decided by cross-multiplication.
class RationalFunction {
 public:
  using ring_type = RationalFunctionField;

  RationalFunction() : RationalFunction(Variables()) {}
  explicit RationalFunction(const Variables& vars)
      : num_(vars), den_(MultiPoly::constant(vars, Rational(1))) {}
  RationalFunction(MultiPoly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(MultiPoly::constant(num_.variables(), Rational(1))) {}
  RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!(num_.variables() == den_.variables())) throw RingMismatch("numerator and denominator rings differ");
    if (den_.is_zero()) throw OutsideDomain("rational function with zero denominator");
    normalize();
  }

  static RationalFunction constant(const Variables& vars, const Rational& c) {
    return RationalFunction(MultiPoly::constant(vars, c));
  }
  static RationalFunction variable(const Variables& vars, const std::string& name) {
    return RationalFunction(MultiPoly::variable(vars, name));
  }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const Variables& variables() const { return num_.variables(); }
  ring_type ring() const { return ring_type{variables()}; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return !is_zero() && num_ == den_; }
  bool is_unit() const { return !is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RationalFunction inverse() const {
    if (is_zero()) throw NotAUnit("0 is not invertible in " + ring().name());
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    a.check_ring(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    if (auto k = exact_quotient(b.den_, a.den_)) return RationalFunction(a.num_ * *k + b.num_, b.den_);
    if (auto k = exact_quotient(a.den_, b.den_)) return RationalFunction(a.num_ + b.num_ * *k, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    a.check_ring(b);
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    cancel_pair(an, bd);
    cancel_pair(bn, ad);
    return RationalFunction(an * bn, ad * bd);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw OutsideDomain("division by zero in " + b.ring().name());
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(e), den_.pow(e));
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    a.check_ring(b);
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  // Exact square root when numerator * denominator is a perfect square.
  std::optional<RationalFunction> try_sqrt() const {
    if (is_zero()) return *this;
    auto root = (num_ * den_).try_sqrt();
    if (!root) return std::nullopt;
    return RationalFunction(*root, den_);
  }

  // "N" when the denominator is 1, otherwise "(N)/(D)".
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  static RationalFunction parse(const Variables& vars, std::string_view text) {
    if (!text.empty() && text.front() == '(') {
      auto mid = text.find(")/(");
      if (mid == std::string_view::npos || text.back() != ')')
        throw ParseError("malformed rational function '" + std::string(text) + "'");
      auto num = MultiPoly::parse(vars, text.substr(1, mid - 1));
      auto den = MultiPoly::parse(vars, text.substr(mid + 3, text.size() - mid - 4));
      if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return RationalFunction(std::move(num), std::move(den));
    }
    return RationalFunction(MultiPoly::parse(vars, text));
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

 private:
  void check_ring(const RationalFunction& o) const {
    if (!(variables() == o.variables()))
      throw RingMismatch("ring mismatch: " + ring().name() + " vs " + o.ring().name());
  }

  // Remove a factor shared by a numerator and a denominator when one divides
  // the other or they share a monomial factor.
  static void cancel_pair(MultiPoly& num, MultiPoly& den) {
    if (num.is_zero()) return;
    if (den.is_constant()) return;
    Exponents mn = num.min_exponents(), md = den.min_exponents();
    Exponents common(mn.size());
    bool any = false;
    for (std::size_t i = 0; i < mn.size(); ++i) {
      common[i] = -std::min(mn[i], md[i]);
      any = any || common[i] != 0;
    }
    if (any) {
      num = num.shifted(common);
      den = den.shifted(common);
    }
    if (den.is_constant()) return;
    if (auto q = exact_quotient(num, den)) {
      num = std::move(*q);
      den = MultiPoly::constant(den.variables(), Rational(1));
    } else if (!num.is_constant()) {
      if (auto q2 = exact_quotient(den, num)) {
        den = std::move(*q2);
        num = MultiPoly::constant(num.variables(), Rational(1));
      }
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(num_.variables(), Rational(1));
      return;
    }
    cancel_pair(num_, den_);
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
      Rational inv = lc.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

inline RationalFunction RationalFunctionField::zero() const { return RationalFunction(vars); }
inline RationalFunction RationalFunctionField::one() const { return RationalFunction::constant(vars, Rational(1)); }
inline RationalFunction RationalFunctionField::constant(const Rational& r) const {
  return RationalFunction::constant(vars, r);
}
inline RationalFunction RationalFunctionField::variable(const std::string& name) const {
  return RationalFunction::variable(vars, name);
}

}  // namespace tvbrep
