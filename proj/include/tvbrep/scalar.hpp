#pragma once

#include <cctype>
#include <concepts>
#include <optional>
#include <map>
#include <string>
#include <string_view>

#include "tvbrep/polynomial.hpp"
#include "tvbrep/rational.hpp"
#include "tvbrep/rational_function.hpp"

namespace tvbrep {

template <class S>
concept Scalar = requires(const S& a, const S& b, const typename S::ring_type& ring) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_unit() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<S>;
  { a.ring() } -> std::convertible_to<typename S::ring_type>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { ring.zero() } -> std::same_as<S>;
  { ring.one() } -> std::same_as<S>;
  { ring.constant(Rational(1)) } -> std::same_as<S>;
  { ring.name() } -> std::convertible_to<std::string>;
};

template <class S>
concept FieldScalar = Scalar<S> && requires(const S& a, const S& b) {
  { a / b } -> std::same_as<S>;
};

template <Scalar S>
using Bindings = std::map<std::string, S>;

// a / b when b divides a in the ring of S (always, in a field).
template <Scalar S>
S divide_exact(const S& a, const S& b) {
  if constexpr (FieldScalar<S>) {
    return a / b;
  } else {
    auto q = exact_quotient(a, b);
    if (!q) throw Error(b.to_string() + " does not divide " + a.to_string() + " in " + a.ring().name());
    return *q;
  }
}

template <Scalar S>
S power(const S& base, long e) {
  if (e < 0) return power(base.inverse(), -e);
  S result = base.ring().one();
  S b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

template <class Ring>
auto ring_variable(const Ring& ring, const std::string& name) {
  if constexpr (requires { ring.variable(name); }) {
    return ring.variable(name);
  } else {
    throw RingMismatch("variable '" + name + "' is unbound and " + ring.name() + " has no such indeterminate");
    return ring.zero();
  }
}

// Image of a polynomial under the substitution homomorphism sending each
// bound variable to its value and every other variable to the same-named
// indeterminate of the target ring.
template <Scalar Target, bool L>
Target substitute(const BasicPolynomial<L>& p, const Bindings<Target>& bindings,
                  const typename Target::ring_type& target) {
  const Variables& vars = p.variables();
  // Resolved on first use, so variables that do not occur need no binding.
  std::vector<std::optional<Target>> values(vars.size());
  std::vector<std::map<int, Target>> power_cache(vars.size());
  auto power_of = [&](std::size_t i, int e) -> const Target& {
    auto found = power_cache[i].find(e);
    if (found != power_cache[i].end()) return found->second;
    if (!values[i]) {
      auto it = bindings.find(vars[i]);
      values[i] = it != bindings.end() ? it->second : ring_variable(target, vars[i]);
    }
    if (e < 0 && values[i]->is_zero())
      throw OutsideDomain("parameter outside domain: " + vars[i] + " = 0 under a negative power");
    return power_cache[i].emplace(e, power(*values[i], e)).first->second;
  };
  Target sum = target.zero();
  for (const auto& [exps, coef] : p.terms()) {
    Target term = target.constant(coef);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) term = term * power_of(i, exps[i]);
    sum = sum + term;
  }
  return sum;
}

template <FieldScalar Target>
Target substitute(const RationalFunction& f, const Bindings<Target>& bindings,
                  const typename Target::ring_type& target) {
  Target den = substitute(f.denominator(), bindings, target);
  if (den.is_zero())
    throw OutsideDomain("parameter outside domain: denominator " + f.denominator().to_string() + " vanishes");
  return substitute(f.numerator(), bindings, target) / den;
}

template <Scalar Target>
Target substitute(const Rational& r, const Bindings<Target>&, const typename Target::ring_type& target) {
  return target.constant(r);
}

// Ring descriptors as they appear in serialized files: "Q", "Q[x,y]",
// "Q(x,y)" and "Q<t,q>" (Laurent).
enum class RingKind { rational, polynomial, rational_function, laurent };

struct RingDescriptor {
  RingKind kind = RingKind::rational;
  Variables vars;

  static RingDescriptor parse(std::string_view text) {
    if (text == "Q") return {RingKind::rational, Variables()};
    if (text.size() < 3 || text[0] != 'Q') throw ParseError("unknown ring descriptor '" + std::string(text) + "'");
    char open = text[1], close = text.back();
    RingKind kind;
    if (open == '[' && close == ']') kind = RingKind::polynomial;
    else if (open == '(' && close == ')') kind = RingKind::rational_function;
    else if (open == '<' && close == '>') kind = RingKind::laurent;
    else throw ParseError("unknown ring descriptor '" + std::string(text) + "'");
    std::vector<std::string> names;
    std::string_view body = text.substr(2, text.size() - 3);
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      names.emplace_back(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return {kind, Variables(std::move(names))};
  }

  std::string name() const {
    switch (kind) {
      case RingKind::rational: return "Q";
      case RingKind::polynomial: return "Q[" + vars.joined() + "]";
      case RingKind::rational_function: return "Q(" + vars.joined() + ")";
      case RingKind::laurent: return "Q<" + vars.joined() + ">";
    }
    return "?";
  }
};

namespace detail {

// Recursive descent over + - * / ^ and parentheses. Integers, variables of
// the ring and the canonical printed form ("2*t^-1+-1") all parse.
template <class Ring>
class ExpressionParser {
 public:
  using S = decltype(std::declval<Ring>().zero());

  ExpressionParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  S parse() {
    S v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' in " + ring_.name() + " at offset " +
                     std::to_string(pos_) + ": " + why);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  S sum() {
    S v = product();
    while (true) {
      if (eat('+')) v = v + product();
      else if (eat('-')) v = v - product();
      else return v;
    }
  }
  S product() {
    S v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        S d = unary();
        if (d.is_zero()) fail("division by zero");
        v = divide_exact(v, d);
      } else {
        return v;
      }
    }
  }
  S unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power_of();
  }
  S power_of() {
    S base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) fail("zero to a negative power");
    return power(base, negative ? -e : e);
  }
  S atom() {
    skip_space();
    if (eat('(')) {
      S v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.constant(Rational::parse(text_.substr(start, pos_ - start)));
    }
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end" : "unexpected '" + std::string(1, text_[pos_]) + "'");
    std::string name(text_.substr(start, pos_ - start));
    if constexpr (requires { ring_.variable(name); }) {
      if (ring_.vars.contains(name)) return ring_.variable(name);
    }
    fail("unknown variable '" + name + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Scalars as written in files and on the command line.
inline Rational parse_scalar(const RationalField& ring, std::string_view text) {
  return detail::ExpressionParser<RationalField>(ring, text).parse();
}
template <bool L>
BasicPolynomial<L> parse_scalar(const PolynomialRing<L>& ring, std::string_view text) {
  return detail::ExpressionParser<PolynomialRing<L>>(ring, text).parse();
}
inline RationalFunction parse_scalar(const RationalFunctionField& ring, std::string_view text) {
  return detail::ExpressionParser<RationalFunctionField>(ring, text).parse();
}

template <Scalar S>
typename S::ring_type ring_from_descriptor(const RingDescriptor& d) {
  typename S::ring_type ring{};
  if constexpr (std::is_same_v<S, Rational>) {
    if (d.kind != RingKind::rational) throw RingMismatch("expected ring Q, got " + d.name());
  } else if constexpr (std::is_same_v<S, RationalFunction>) {
    if (d.kind != RingKind::rational_function) throw RingMismatch("expected a rational function field, got " + d.name());
    ring.vars = d.vars;
  } else if constexpr (S::is_laurent) {
    if (d.kind != RingKind::laurent) throw RingMismatch("expected a Laurent ring, got " + d.name());
    ring.vars = d.vars;
  } else {
    if (d.kind != RingKind::polynomial) throw RingMismatch("expected a polynomial ring, got " + d.name());
    ring.vars = d.vars;
  }
  return ring;
}

}  // namespace tvbrep
