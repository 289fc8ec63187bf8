#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tvbrep/representation.hpp"

namespace tvbrep {

// A domain condition: satisfied when at least one alternative is nonzero.
struct Constraint {
  std::string text;
  std::vector<RationalFunction> alternatives;
};

// Where a free parameter can be read back from a concrete instance.
struct EntryLocator {
  Generator gen;
  std::size_t row = 0;
  std::size_t col = 0;
};

// One catalog family, stored symbolically over Q(params).
struct FamilyDefinition {
  std::string id;       // "zeta1", "zetap3", "eta7"
  std::string theorem;  // where the family is displayed, e.g. "3.1(1)"
  Structure structure = Structure::TVB;
  int n = 2;
  std::size_t dim = 3;
  Variables params;
  std::map<Generator, Matrix<RationalFunction>> images;
  std::vector<Constraint> constraints;
  std::map<std::string, EntryLocator> locators;

  RationalFunctionField ring() const { return {params}; }
  Presentation presentation() const { return build_presentation(structure, n); }
};

namespace detail {

// Builder for symbolic family matrices over Q(params).
struct SymbolicContext {
  RationalFunctionField ring;

  RationalFunction v(const std::string& name) const { return ring.variable(name); }
  RationalFunction k(long num, long den = 1) const { return ring.constant(Rational(num, den)); }

  // [[a, b], [c, d]] (+) 1, the n = 2 local shape at position `position`.
  Matrix<RationalFunction> local(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                                 const RationalFunction& d, std::size_t position = 1, std::size_t total = 3) const {
    return block_embed(mat2(ring, a, b, c, d), position, total);
  }
  Matrix<RationalFunction> identity(std::size_t total = 3) const {
    return Matrix<RationalFunction>::identity(ring, total);
  }
  Constraint nonzero(std::string text, RationalFunction e) const { return {std::move(text), {std::move(e)}}; }
};

inline FamilyDefinition start_family(std::string id, std::string theorem, Structure st, int n,
                                     std::vector<std::string> params) {
  FamilyDefinition def;
  def.id = std::move(id);
  def.theorem = std::move(theorem);
  def.structure = st;
  def.n = n;
  def.dim = static_cast<std::size_t>(n) + 1;
  def.params = Variables(std::move(params));
  return def;
}

inline void set_locators(FamilyDefinition& def, std::map<std::string, EntryLocator> locs) {
  def.locators = std::move(locs);
}

inline FamilyDefinition zeta_family(int k) {
  using detail::SymbolicContext;
  static const std::vector<std::vector<std::string>> params = {
      {"b", "d", "x"}, {"b", "d", "w", "x"}, {"a", "b", "c", "d"}, {"a", "b", "c", "d"},
      {"a", "c", "d"}, {"a", "c", "d"},      {"d", "y"},           {"d", "y"}};
  if (k < 1 || k > 8) throw Error("zeta families are numbered 1..8, got " + std::to_string(k));
  auto def = start_family("zeta" + std::to_string(k), "3.1(" + std::to_string(k) + ")", Structure::TVB, 2,
                          params[k - 1]);
  SymbolicContext s{def.ring()};
  auto zero = s.k(0), one = s.k(1), m1 = s.k(-1);
  auto& im = def.images;
  auto sig = sigma(1), r = rho(1), g1 = gamma(1), g2 = gamma(2);
  im.emplace(g1, s.identity());
  im.emplace(g2, s.identity());
  switch (k) {
    case 1: {
      auto b = s.v("b"), d = s.v("d"), x = s.v("x");
      im.emplace(sig, s.local(d, b, b / (x * x), d));
      im.emplace(r, s.local(zero, x, one / x, zero));
      im.at(g1) = s.local(m1, zero, zero, one);
      im.at(g2) = s.local(one, zero, zero, m1);
      def.constraints = {s.nonzero("b^2-d^2x^2 != 0", b * b - d * d * x * x), s.nonzero("x != 0", x)};
      set_locators(def, {{"b", {sig, 0, 1}}, {"d", {sig, 0, 0}}, {"x", {r, 0, 1}}});
      break;
    }
    case 2: {
      auto b = s.v("b"), d = s.v("d"), w = s.v("w"), x = s.v("x");
      im.emplace(sig, s.local((s.k(2) * b * w + d * x) / x, b, (b - b * w * w) / (x * x), d));
      im.emplace(r, s.local(w, x, (one - w * w) / x, -w));
      // Stated condition "d != 0 or dx != +-b-bw", read as d != 0 or
      // (dx != b-bw and dx != -b-bw); the determinant condition is checked on
      // its own because the sigma_1 block has det (dx+bw-b)(dx+bw+b)/x^2.
      auto det_factor = (d * x + b * w - b) * (d * x + b * w + b);
      def.constraints = {s.nonzero("x != 0", x),
                         {"d != 0 or dx != +-b-bw", {d, det_factor}},
                         s.nonzero("det sigma_1 block != 0, i.e. dx != b-bw and dx != -b-bw", det_factor)};
      set_locators(def, {{"b", {sig, 0, 1}}, {"d", {sig, 1, 1}}, {"w", {r, 0, 0}}, {"x", {r, 0, 1}}});
      break;
    }
    case 3:
    case 4: {
      auto a = s.v("a"), b = s.v("b"), c = s.v("c"), d = s.v("d");
      im.emplace(sig, s.local(a, b, c, d));
      im.emplace(r, k == 3 ? s.local(m1, zero, zero, m1) : s.identity());
      def.constraints = {s.nonzero("ad-bc != 0", a * d - b * c)};
      set_locators(def, {{"a", {sig, 0, 0}}, {"b", {sig, 0, 1}}, {"c", {sig, 1, 0}}, {"d", {sig, 1, 1}}});
      break;
    }
    case 5:
    case 6: {
      auto a = s.v("a"), c = s.v("c"), d = s.v("d");
      im.emplace(sig, s.local(a, zero, c, d));
      if (k == 5) im.emplace(r, s.local(m1, zero, s.k(2) * c / (d - a), one));
      else im.emplace(r, s.local(one, zero, s.k(2) * c / (a - d), m1));
      def.constraints = {s.nonzero("ad != 0", a * d), s.nonzero("a != d", a - d)};
      set_locators(def, {{"a", {sig, 0, 0}}, {"c", {sig, 1, 0}}, {"d", {sig, 1, 1}}});
      break;
    }
    default: {
      auto d = s.v("d"), y = s.v("y");
      im.emplace(sig, s.local(d, zero, zero, d));
      if (k == 7) im.emplace(r, s.local(one, zero, y, m1));
      else im.emplace(r, s.local(m1, zero, y, one));
      def.constraints = {s.nonzero("d != 0", d)};
      set_locators(def, {{"d", {sig, 0, 0}}, {"y", {r, 1, 0}}});
      break;
    }
  }
  return def;
}

// Families 1-4 carry sqrt(b/c); they are parameterized by (c, s) with
// b := s^2 c, so sqrt(b/c) = s. Both signs of s are allowed.
inline FamilyDefinition zeta_prime_family(int k, int n) {
  if (k < 1 || k > 7) throw Error("zeta' families are numbered 1..7, got " + std::to_string(k));
  if (n < 3) throw Error("zeta' families need n >= 3, got " + std::to_string(n));
  std::vector<std::string> params;
  if (k <= 4) params = {"c", "s"};
  else if (k <= 6) params = {"x"};
  auto def = start_family("zetap" + std::to_string(k), "3.4(" + std::to_string(k) + ")", Structure::TVB, n, params);
  SymbolicContext s{def.ring()};
  const std::size_t total = def.dim;
  auto zero = s.k(0), one = s.k(1), m1 = s.k(-1);
  auto block = [&](const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                   const RationalFunction& d, int position) {
    return block_embed(mat2(s.ring, a, b, c, d), static_cast<std::size_t>(position), total);
  };
  bool twist_gamma = k == 1 || k == 2 || k == 5;
  for (int i = 1; i <= n - 1; ++i) {
    if (k <= 4) {
      auto c = s.v("c"), sv = s.v("s");
      auto b = sv * sv * c;
      def.images.emplace(sigma(i), block(zero, b, c, zero, i));
      bool negative = k == 1 || k == 3;
      auto rs = negative ? -sv : sv;
      def.images.emplace(rho(i), block(zero, rs, one / rs, zero, i));
    } else if (k <= 6) {
      auto x = s.v("x");
      def.images.emplace(sigma(i), s.identity(total));
      def.images.emplace(rho(i), block(zero, x, one / x, zero, i));
    } else {
      def.images.emplace(sigma(i), s.identity(total));
      def.images.emplace(rho(i), s.identity(total));
    }
  }
  for (int j = 1; j <= n; ++j)
    def.images.emplace(gamma(j), twist_gamma ? block(m1, zero, zero, one, j) : s.identity(total));
  if (k <= 4) def.constraints = {s.nonzero("c != 0", s.v("c")), s.nonzero("s != 0", s.v("s"))};
  else if (k <= 6) def.constraints = {s.nonzero("x != 0", s.v("x"))};
  return def;
}

inline FamilyDefinition eta_family(int k) {
  static const std::vector<std::vector<std::string>> params = {
      {"a", "b", "x", "f", "g"}, {"a", "b", "x", "z", "f", "g"}, {"a", "b", "c", "d", "f", "g"},
      {"a", "b", "c", "d", "f", "g"}, {"a", "f", "g", "h", "k"}, {"a", "c", "d", "f", "h"},
      {"a", "c", "y", "f", "h"},  {"a", "c", "y", "f", "h"},      {"a", "f", "g", "h", "k"},
      {"a", "c", "d", "f", "h"},  {"a", "d", "f", "k"},           {"a", "d", "f", "k"},
      {"a", "d", "f", "k"}};
  if (k < 1 || k > 13) throw Error("eta families are numbered 1..13, got " + std::to_string(k));
  auto def = start_family("eta" + std::to_string(k), "4.1(" + std::to_string(k) + ")", Structure::STVB, 2,
                          params[k - 1]);
  SymbolicContext s{def.ring()};
  auto zero = s.k(0), one = s.k(1), m1 = s.k(-1), two = s.k(2);
  auto& im = def.images;
  auto sig = sigma(1), r = rho(1), t = tau(1);
  im.emplace(gamma(1), s.identity());
  im.emplace(gamma(2), s.identity());
  auto v = [&](const char* name) { return s.v(name); };
  auto loc = [&](std::initializer_list<std::pair<const std::string, EntryLocator>> l) { set_locators(def, l); };
  switch (k) {
    case 1: {
      auto a = v("a"), b = v("b"), x = v("x"), f = v("f"), g = v("g");
      im.emplace(sig, s.local(a, b, b / (x * x), a));
      im.emplace(r, s.local(zero, x, one / x, zero));
      im.emplace(t, s.local(f, g, g / (x * x), f));
      im.at(gamma(1)) = s.local(m1, zero, zero, one);
      im.at(gamma(2)) = s.local(one, zero, zero, m1);
      def.constraints = {s.nonzero("a^2x^2-b^2 != 0", a * a * x * x - b * b), s.nonzero("x != 0", x)};
      loc({{"a", {sig, 0, 0}}, {"b", {sig, 0, 1}}, {"x", {r, 0, 1}}, {"f", {t, 0, 0}}, {"g", {t, 0, 1}}});
      break;
    }
    case 2: {
      auto a = v("a"), b = v("b"), x = v("x"), z = v("z"), f = v("f"), g = v("g");
      im.emplace(sig, s.local(a, b, (b - b * z * z) / (x * x), (a * x + two * b * z) / x));
      im.emplace(r, s.local(-z, x, (one - z * z) / x, z));
      im.emplace(t, s.local(f, g, (g - g * z * z) / (x * x), (f * x + two * g * z) / x));
      def.constraints = {s.nonzero("x != 0", x), s.nonzero("a^2x^2+2abxz-b^2+b^2z^2 != 0",
                                                          a * a * x * x + two * a * b * x * z - b * b + b * b * z * z)};
      loc({{"a", {sig, 0, 0}}, {"b", {sig, 0, 1}}, {"x", {r, 0, 1}}, {"z", {r, 1, 1}}, {"f", {t, 0, 0}},
           {"g", {t, 0, 1}}});
      break;
    }
    case 3:
    case 4: {
      auto a = v("a"), b = v("b"), c = v("c"), d = v("d"), f = v("f"), g = v("g");
      im.emplace(sig, s.local(a, b, c, d));
      im.emplace(r, k == 3 ? s.local(m1, zero, zero, m1) : s.identity());
      im.emplace(t, s.local(f, g, c * g / b, (b * f - a * g + d * g) / b));
      def.constraints = {s.nonzero("b != 0", b), s.nonzero("ad-bc != 0", a * d - b * c)};
      loc({{"a", {sig, 0, 0}}, {"b", {sig, 0, 1}}, {"c", {sig, 1, 0}}, {"d", {sig, 1, 1}}, {"f", {t, 0, 0}},
           {"g", {t, 0, 1}}});
      break;
    }
    case 5:
    case 9: {
      auto a = v("a"), f = v("f"), g = v("g"), h = v("h"), kk = v("k");
      im.emplace(sig, s.local(a, zero, zero, a));
      im.emplace(r, k == 5 ? s.local(m1, zero, zero, m1) : s.identity());
      im.emplace(t, s.local(f, g, h, kk));
      def.constraints = {s.nonzero("a != 0", a)};
      loc({{"a", {sig, 0, 0}}, {"f", {t, 0, 0}}, {"g", {t, 0, 1}}, {"h", {t, 1, 0}}, {"k", {t, 1, 1}}});
      break;
    }
    case 6:
    case 10: {
      auto a = v("a"), c = v("c"), d = v("d"), f = v("f"), h = v("h");
      im.emplace(sig, s.local(a, zero, c, d));
      im.emplace(r, k == 6 ? s.local(m1, zero, zero, m1) : s.identity());
      im.emplace(t, s.local(f, zero, h, (c * f - a * h + d * h) / c));
      def.constraints = {s.nonzero("c != 0", c), s.nonzero("ad != 0", a * d)};
      loc({{"a", {sig, 0, 0}}, {"c", {sig, 1, 0}}, {"d", {sig, 1, 1}}, {"f", {t, 0, 0}}, {"h", {t, 1, 0}}});
      break;
    }
    case 7:
    case 8: {
      auto a = v("a"), c = v("c"), y = v("y"), f = v("f"), h = v("h");
      auto sign = k == 7 ? m1 : one;
      im.emplace(sig, s.local(a, zero, c, (two * sign * c + a * y) / y));
      im.emplace(r, k == 7 ? s.local(one, zero, y, m1) : s.local(m1, zero, y, one));
      im.emplace(t, s.local(f, zero, h, (two * sign * h + f * y) / y));
      def.constraints = {s.nonzero("y != 0", y),
                         s.nonzero(k == 7 ? "a(-2c+ay) != 0" : "a(2c+ay) != 0", a * (two * sign * c + a * y))};
      loc({{"a", {sig, 0, 0}}, {"c", {sig, 1, 0}}, {"y", {r, 1, 0}}, {"f", {t, 0, 0}}, {"h", {t, 1, 0}}});
      break;
    }
    default: {
      auto a = v("a"), d = v("d"), f = v("f"), kk = v("k");
      im.emplace(sig, s.local(a, zero, zero, d));
      if (k == 11) im.emplace(r, s.local(one, zero, zero, m1));
      else if (k == 12) im.emplace(r, s.local(m1, zero, zero, one));
      else im.emplace(r, s.identity());
      im.emplace(t, s.local(f, zero, zero, kk));
      def.constraints = {s.nonzero("ad != 0", a * d)};
      loc({{"a", {sig, 0, 0}}, {"d", {sig, 1, 1}}, {"f", {t, 0, 0}}, {"k", {t, 1, 1}}});
      break;
    }
  }
  return def;
}

inline int parse_family_number(const std::string& id, const std::string& prefix) {
  std::string rest = id.substr(prefix.size());
  if (rest.empty() || rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), ::isdigit))
    throw ParseError("unknown family '" + id + "'");
  return std::stoi(rest);
}

}  // namespace detail

inline FamilyDefinition family_definition(const std::string& id, int n = 2) {
  if (id.rfind("zetap", 0) == 0) return detail::zeta_prime_family(detail::parse_family_number(id, "zetap"), n);
  if (id.rfind("zeta", 0) == 0) return detail::zeta_family(detail::parse_family_number(id, "zeta"));
  if (id.rfind("eta", 0) == 0) return detail::eta_family(detail::parse_family_number(id, "eta"));
  throw ParseError("unknown family '" + id + "'");
}

inline std::vector<std::string> zeta_ids() {
  std::vector<std::string> ids;
  for (int k = 1; k <= 8; ++k) ids.push_back("zeta" + std::to_string(k));
  return ids;
}
inline std::vector<std::string> zeta_prime_ids() {
  std::vector<std::string> ids;
  for (int k = 1; k <= 7; ++k) ids.push_back("zetap" + std::to_string(k));
  return ids;
}
inline std::vector<std::string> eta_ids() {
  std::vector<std::string> ids;
  for (int k = 1; k <= 13; ++k) ids.push_back("eta" + std::to_string(k));
  return ids;
}

// First violated domain condition, if any.
template <FieldScalar S>
std::optional<std::string> violated_constraint(const FamilyDefinition& def, const Bindings<S>& bindings,
                                               const typename S::ring_type& ring) {
  for (const auto& c : def.constraints) {
    bool ok = false;
    for (const auto& alt : c.alternatives)
      if (!substitute(alt, bindings, ring).is_zero()) {
        ok = true;
        break;
      }
    if (!ok) return c.text;
  }
  return std::nullopt;
}

// The family at the given parameter values. Unbound parameters become the
// same-named indeterminates of `ring`, so a rational function field over the
// parameters gives the symbolic family.
template <FieldScalar S>
Representation<S> instantiate(const FamilyDefinition& def, const Bindings<S>& bindings,
                              const typename S::ring_type& ring) {
  for (const auto& [name, value] : bindings)
    if (!def.params.contains(name)) throw Error(def.id + " has no parameter '" + name + "'");
  if (auto bad = violated_constraint(def, bindings, ring))
    throw ConstraintViolation(def.id + ": parameters violate " + *bad);
  typename Representation<S>::Images images;
  for (const auto& [g, m] : def.images) {
    Matrix<S> out(ring, m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = substitute(m(i, j), bindings, ring);
    images.emplace(g, std::move(out));
  }
  return Representation<S>(def.presentation(), ring, def.dim, std::move(images), def.id);
}

inline Representation<RationalFunction> symbolic(const FamilyDefinition& def) {
  return instantiate<RationalFunction>(def, {}, def.ring());
}

template <FieldScalar S>
Representation<S> rep_zeta(int k, const Bindings<S>& bindings, const typename S::ring_type& ring) {
  return instantiate(detail::zeta_family(k), bindings, ring);
}
template <FieldScalar S>
Representation<S> rep_zeta_prime(int k, int n, const Bindings<S>& bindings, const typename S::ring_type& ring) {
  return instantiate(detail::zeta_prime_family(k, n), bindings, ring);
}
template <FieldScalar S>
Representation<S> rep_eta(int k, const Bindings<S>& bindings, const typename S::ring_type& ring) {
  return instantiate(detail::eta_family(k), bindings, ring);
}

inline Representation<Rational> rep_zeta(int k, const Bindings<Rational>& bindings) {
  return rep_zeta<Rational>(k, bindings, RationalField{});
}
inline Representation<Rational> rep_zeta_prime(int k, int n, const Bindings<Rational>& bindings) {
  return rep_zeta_prime<Rational>(k, n, bindings, RationalField{});
}
inline Representation<Rational> rep_eta(int k, const Bindings<Rational>& bindings) {
  return rep_eta<Rational>(k, bindings, RationalField{});
}

// Burau over Q<t>: sigma_i maps to I_{i-1} (+) [[1-t, t], [1, 0]] (+) I_{n-i-1}.
inline Representation<Laurent> rep_burau(int n) {
  if (n < 2) throw Error("Burau needs n >= 2, got " + std::to_string(n));
  PolynomialRing<true> ring{Variables({"t"})};
  auto t = ring.variable("t");
  auto block = mat2(ring, ring.one() - t, t, ring.one(), ring.zero());
  Representation<Laurent>::Images images;
  for (int i = 1; i <= n - 1; ++i)
    images.emplace(sigma(i), block_embed(block, static_cast<std::size_t>(i), static_cast<std::size_t>(n)));
  return Representation<Laurent>(build_presentation(Structure::B, n), ring, static_cast<std::size_t>(n),
                                 std::move(images), "burau");
}

// Lawrence-Krammer-Bigelow over Q<t,q>. Basis x_{i,j} (i < j) in
// lexicographic order; column idx(i,j) holds the image of x_{i,j}.
inline Representation<Laurent> rep_lkb(int n) {
  if (n < 3) throw Error("LKB needs n >= 3, got " + std::to_string(n));
  PolynomialRing<true> ring{Variables({"t", "q"})};
  auto t = ring.variable("t"), q = ring.variable("q"), one = ring.one();
  std::map<std::pair<int, int>, std::size_t> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) idx.emplace(std::pair{i, j}, idx.size());
  const std::size_t dim = idx.size();
  Representation<Laurent>::Images images;
  for (int k = 1; k <= n - 1; ++k) {
    Matrix<Laurent> m(ring, dim);
    auto put = [&](int i, int j, int ti, int tj, const Laurent& coef) {
      auto& e = m(idx.at({ti, tj}), idx.at({i, j}));
      e = e + coef;
    };
    for (const auto& [pair, col] : idx) {
      auto [i, j] = pair;
      if (i == k && j == k + 1) {
        put(i, j, k, k + 1, t * q * q);
      } else if (i < k && j == k) {
        put(i, j, i, k, one - q);
        put(i, j, i, k + 1, q);
      } else if (i < k && j == k + 1) {
        put(i, j, i, k, one);
        put(i, j, k, k + 1, t * q.pow(k - i + 1) * (q - one));
      } else if (i == k && j > k + 1) {
        put(i, j, k, k + 1, t * q * (q - one));
        put(i, j, k + 1, j, q);
      } else if (i == k + 1 && j > k + 1) {
        put(i, j, k, j, one);
        put(i, j, k + 1, j, one - q);
      } else if (j < k || i > k + 1) {
        put(i, j, i, j, one);
      } else {  // i < k, j > k + 1
        put(i, j, i, j, one);
        put(i, j, k, k + 1, t * q.pow(k - i) * (q - one) * (q - one));
      }
    }
    images.emplace(sigma(k), std::move(m));
  }
  return Representation<Laurent>(build_presentation(Structure::B, n), ring, dim, std::move(images), "lkb");
}

// Small nonzero rationals p/q with |p| <= 9 and q <= 4.
inline Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 4), sign(0, 1);
  long p = num(rng);
  return Rational(sign(rng) ? -p : p, den(rng));
}

// Random bindings satisfying the family's domain conditions. Free values are
// pairwise distinct nonzero small rationals; `fixed` values are kept as given.
inline Bindings<Rational> sample_bindings(const FamilyDefinition& def, std::mt19937_64& rng,
                                          const Bindings<Rational>& fixed = {}, int max_tries = 1000) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Bindings<Rational> b = fixed;
    std::set<Rational> used;
    for (const auto& [name, value] : fixed) used.insert(value);
    for (const auto& name : def.params.names()) {
      if (b.contains(name)) continue;
      Rational r = random_small_rational(rng);
      while (used.contains(r)) r = random_small_rational(rng);
      used.insert(r);
      b.emplace(name, r);
    }
    if (violated_constraint(def, b, RationalField{})) continue;
    try {
      instantiate(def, b, RationalField{});
      return b;
    } catch (const Error&) {
    }
  }
  throw Error("could not sample parameters for " + def.id);
}

}  // namespace tvbrep
