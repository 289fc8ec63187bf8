#pragma once

// Randomized property suites, shared by the Catch2 property tests and
// acceptance criterion 11. Each suite returns a pass flag, a case count and
// the first counterexample it met.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tvbrep/tvbrep.hpp"

namespace props {

using namespace tvbrep;

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  int cases = 0;
  std::string counterexample;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      counterexample = describe();
    }
  }
};

inline Rational random_rational(std::mt19937_64& rng, long range = 20, long den = 10) {
  std::uniform_int_distribution<long> num(-range, range), d(1, den);
  return Rational(num(rng), d(rng));
}

template <bool L>
BasicPolynomial<L> random_poly(std::mt19937_64& rng, const Variables& vars, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms), exp(L ? -2 : 0, 2);
  BasicPolynomial<L> p(vars);
  int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e(vars.size());
    for (auto& x : e) x = exp(rng);
    p = p + BasicPolynomial<L>::monomial(vars, e, random_rational(rng, 5, 3));
  }
  return p;
}

inline RationalFunction random_ratfunc(std::mt19937_64& rng, const Variables& vars) {
  MultiPoly den(vars);
  while (den.is_zero()) den = random_poly<false>(rng, vars, 2);
  return RationalFunction(random_poly<false>(rng, vars, 2), den);
}

template <Scalar S>
SuiteResult ring_axioms(const std::string& name, const std::function<S()>& gen, const S& zero, const S& one,
                        int cases) {
  SuiteResult r{"ring axioms over " + name};
  for (int i = 0; i < cases; ++i) {
    S a = gen(), b = gen(), c = gen();
    auto show = [&] { return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(); };
    r.check((a + b) + c == a + (b + c), show);
    r.check((a * b) * c == a * (b * c), show);
    r.check(a + b == b + a, show);
    r.check(a * b == b * a, show);
    r.check(a * (b + c) == a * b + a * c, show);
    r.check(a + zero == a && a * one == a && (a - a).is_zero(), show);
    r.check((a * zero).is_zero(), show);
  }
  return r;
}

inline std::vector<SuiteResult> scalar_suites(std::uint64_t seed, int cases = 1000) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;
  Variables abc({"a", "b", "c"}), tq({"t", "q"}), xy({"x", "y"});
  out.push_back(ring_axioms<Rational>("Q", [&] { return random_rational(rng); }, Rational(0), Rational(1), cases));
  PolynomialRing<false> P{abc};
  out.push_back(ring_axioms<MultiPoly>("Q[a,b,c]", [&] { return random_poly<false>(rng, abc); }, P.zero(), P.one(),
                                       cases));
  PolynomialRing<true> L{tq};
  out.push_back(ring_axioms<Laurent>("Q<t,q>", [&] { return random_poly<true>(rng, tq); }, L.zero(), L.one(), cases));
  RationalFunctionField F{xy};
  out.push_back(ring_axioms<RationalFunction>("Q(x,y)", [&] { return random_ratfunc(rng, xy); }, F.zero(), F.one(),
                                              cases));

  SuiteResult cong{"rational function equality is a congruence"};
  for (int i = 0; i < cases / 4; ++i) {
    auto a = random_ratfunc(rng, xy), c = random_ratfunc(rng, xy);
    auto k = random_ratfunc(rng, xy), m = random_ratfunc(rng, xy);
    if (k.is_zero() || m.is_zero()) continue;
    // b = a and d = c written with different numerator/denominator pairs.
    RationalFunction b(a.numerator() * k.numerator() * k.denominator(), a.denominator() * k.numerator() * k.denominator());
    RationalFunction d(c.numerator() * m.numerator(), c.denominator() * m.numerator());
    auto show = [&] { return a.to_string() + " / " + c.to_string(); };
    cong.check(a == b && c == d && a + c == b + d && a * c == b * d, show);
  }
  out.push_back(cong);

  SuiteResult inv{"unit inverses"};
  for (int i = 0; i < cases; ++i) {
    auto q = random_rational(rng);
    if (!q.is_zero()) inv.check((q * q.inverse()).is_one(), [&] { return q.to_string(); });
    auto f = random_ratfunc(rng, xy);
    if (!f.is_zero()) inv.check((f * f.inverse()).is_one(), [&] { return f.to_string(); });
    Exponents e{std::uniform_int_distribution<int>(-3, 3)(rng), std::uniform_int_distribution<int>(-3, 3)(rng)};
    auto u = Laurent::monomial(tq, e, q.is_zero() ? Rational(1) : q);
    inv.check((u * u.inverse()).is_one(), [&] { return u.to_string(); });
  }
  out.push_back(inv);

  SuiteResult hom{"substitution is a ring homomorphism"};
  for (int i = 0; i < cases / 4; ++i) {
    auto a = random_ratfunc(rng, xy), b = random_ratfunc(rng, xy);
    Bindings<Rational> at{{"x", random_rational(rng)}, {"y", random_rational(rng)}};
    try {
      auto sa = substitute(a, at, RationalField{}), sb = substitute(b, at, RationalField{});
      auto show = [&] { return a.to_string() + ", " + b.to_string(); };
      hom.check(substitute(a * b, at, RationalField{}) == sa * sb, show);
      hom.check(substitute(a + b, at, RationalField{}) == sa + sb, show);
    } catch (const OutsideDomain&) {
    }
  }
  out.push_back(hom);
  return out;
}

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix<Rational> m(RationalField{}, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, 9, 3);
  return m;
}

inline std::vector<SuiteResult> matrix_suites(std::uint64_t seed, int cases = 200) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;
  SuiteResult inv{"matrix inverse round trips"};
  for (int i = 0; i < cases; ++i) {
    auto n = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 5)(rng));
    auto m = random_matrix(rng, n);
    if (determinant(m).is_zero()) continue;
    auto mi = inverse(m);
    inv.check((m * mi).is_identity() && (mi * m).is_identity(), [&] { return m.to_string(); });
  }
  for (const auto& id : zeta_ids()) {
    auto rep = symbolic(family_definition(id));
    for (const auto& [g, m] : rep.images())
      inv.check((m * inverse(m)).is_identity(), [&] { return id + " " + g.to_string(); });
  }
  for (int n : {3, 4, 5}) {
    auto burau = rep_burau(n);
    for (const auto& [g, m] : burau.images())
      inv.check((m * inverse(m)).is_identity(), [&] { return "burau " + g.to_string(); });
  }
  out.push_back(inv);

  SuiteResult embed{"block embedding is a homomorphism"};
  for (int i = 0; i < cases; ++i) {
    auto k = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
    auto total = k + static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 3)(rng));
    auto pos = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, static_cast<int>(total - k + 1))(rng));
    auto a = random_matrix(rng, k), b = random_matrix(rng, k);
    embed.check(block_embed(a, pos, total) * block_embed(b, pos, total) == block_embed(a * b, pos, total),
                [&] { return a.to_string() + " at " + std::to_string(pos); });
  }
  out.push_back(embed);
  return out;
}

inline Word random_word(std::mt19937_64& rng, const Presentation& p, int max_len) {
  const auto& gens = p.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, max_len), coin(0, 1);
  Word w;
  int k = len(rng);
  for (int i = 0; i < k; ++i) {
    auto g = gens[pick(rng)];
    int e = p.invertible(g.family) && coin(rng) ? -1 : 1;
    w.push_back({g, e});
  }
  return w;
}

inline SuiteResult evaluate_homomorphism(std::uint64_t seed, int cases = 100) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"evaluate is a homomorphism"};
  std::vector<std::string> ids = zeta_ids();
  for (const auto& e : eta_ids()) ids.push_back(e);
  for (int i = 0; i < cases; ++i) {
    const auto& id = ids[static_cast<std::size_t>(i) % ids.size()];
    auto def = family_definition(id);
    auto rep = instantiate(def, sample_bindings(def, rng), RationalField{});
    auto a = random_word(rng, rep.presentation(), 5), b = random_word(rng, rep.presentation(), 5);
    auto show = [&] { return id + ": " + word_to_string(a) + " | " + word_to_string(b); };
    r.check(evaluate(rep, concat(a, b)) == evaluate(rep, a) * evaluate(rep, b), show);
    r.check(evaluate(rep, {}).is_identity(), show);
  }
  auto burau = rep_burau(4);
  for (int i = 0; i < cases / 4; ++i) {
    auto a = random_word(rng, burau.presentation(), 6);
    r.check(evaluate(burau, concat(a, word_invert(a, burau.presentation()))).is_identity(), [&] { return word_to_string(a); });
  }
  return r;
}

inline SuiteResult classifier_round_trips(std::uint64_t seed, int per_family = 50) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"classifier round trips"};
  std::vector<std::string> ids = zeta_ids();
  for (const auto& e : eta_ids()) ids.push_back(e);
  for (const auto& id : ids) {
    auto def = family_definition(id);
    for (int i = 0; i < per_family; ++i) {
      auto b = sample_bindings(def, rng);
      auto m = classify_solution(instantiate(def, b, RationalField{}));
      r.check(m && m->family == id && m->bindings == b && m->residual, [&] {
        return id + " at " + detail::bindings_text(b) + " classified as " + (m ? m->family : std::string("none"));
      });
    }
  }
  return r;
}

// A random entry of a random generator's block is shifted by a nonzero
// rational; the change must be caught by the relation check or by the
// classifier no longer reproducing the original family and parameters.
inline SuiteResult mutation_trials(std::uint64_t seed, int trials = 100, int* caught_by_relations = nullptr) {
  std::mt19937_64 rng(seed);
  SuiteResult r{"mutation trials"};
  std::vector<std::string> ids = zeta_ids();
  for (const auto& e : eta_ids()) ids.push_back(e);
  int by_relations = 0;
  for (int i = 0; i < trials; ++i) {
    const auto& id = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
    auto def = family_definition(id);
    auto b = sample_bindings(def, rng);
    auto rep = instantiate(def, b, RationalField{});
    auto images = rep.images();
    auto it = images.begin();
    std::advance(it, std::uniform_int_distribution<long>(0, static_cast<long>(images.size()) - 1)(rng));
    std::size_t row = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    std::size_t col = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    if (it->first == gamma(2)) ++row, ++col;  // gamma2's block sits at position 2
    Rational delta = random_small_rational(rng);
    it->second(row, col) = it->second(row, col) + delta;
    std::string what = id + " " + it->first.to_string() + "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    std::optional<Representation<Rational>> mutated;
    try {
      mutated.emplace(rep.presentation(), RationalField{}, rep.dim(), images, "mutant");
    } catch (const Error&) {
      r.check(true, [] { return ""; });  // the mutant is not even a valid assignment
      ++by_relations;
      continue;
    }
    bool relations_fail = !check_relations(*mutated).all_passed();
    by_relations += relations_fail;
    bool classifier_notices = true;
    try {
      auto m = classify_solution(*mutated);
      classifier_notices = !(m && m->family == id && m->bindings == b);
    } catch (const Error&) {
    }
    r.check(relations_fail || classifier_notices, [&] { return what; });
  }
  if (caught_by_relations) *caught_by_relations = by_relations;
  return r;
}

inline std::vector<SuiteResult> all_suites(std::uint64_t seed) {
  auto out = scalar_suites(seed);
  for (auto& s : matrix_suites(seed + 1)) out.push_back(s);
  out.push_back(evaluate_homomorphism(seed + 2));
  out.push_back(classifier_round_trips(seed + 3));
  out.push_back(mutation_trials(seed + 4));
  return out;
}

}  // namespace props
