#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tvbrep/error.hpp"

namespace tvbrep {

class Rational;

// The field Q. Stateless; exists so that generic code can ask any scalar for
// its ring and build zero/one/constants in it.
struct RationalField {
  Rational zero() const;
  Rational one() const;
  Rational constant(const Rational& r) const;
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

// Arbitrary precision rational in lowest terms with positive denominator.
class Rational {
 public:
  using ring_type = RationalField;

  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : Rational(from_integers(mpz_class(num), mpz_class(den))) {}
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  static Rational from_integers(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw OutsideDomain("rational with zero denominator");
    return Rational(mpq_class(num, den));
  }

  RationalField ring() const { return {}; }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_unit() const { return !is_zero(); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational inverse() const {
    if (is_zero()) throw NotAUnit("0 is not invertible in Q");
    return Rational(mpq_class(1) / value_);
  }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw OutsideDomain("division by zero in Q");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return from_integers(n, d);
  }

  // Exact square root when this is the square of a rational.
  bool try_sqrt(Rational& out) const {
    if (sign() < 0) return false;
    if (!mpz_perfect_square_p(value_.get_num_mpz_t()) ||
        !mpz_perfect_square_p(value_.get_den_mpz_t()))
      return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
    out = from_integers(n, d);
    return true;
  }

  // "p/q", or "p" when q = 1.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  // Accepts exactly [-]digits[/digits] with a nonzero denominator.
  static Rational parse(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char ch : s)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
      negative = true;
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return from_integers(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::constant(const Rational& r) const { return r; }

}  // namespace tvbrep
