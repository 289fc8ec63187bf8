#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tvbrep/error.hpp"

namespace tvbrep {

enum class Family { sigma, rho, gamma, tau, tau_bar };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::sigma: return "sigma";
    case Family::rho: return "rho";
    case Family::gamma: return "gamma";
    case Family::tau: return "tau";
    case Family::tau_bar: return "tau_bar";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "sigma") return Family::sigma;
  if (s == "rho") return Family::rho;
  if (s == "gamma") return Family::gamma;
  if (s == "tau") return Family::tau;
  if (s == "tau_bar") return Family::tau_bar;
  throw ParseError("unknown generator family '" + std::string(s) + "'");
}

struct Generator {
  Family family = Family::sigma;
  int index = 1;

  // "sigma:1"
  std::string to_string() const { return family_name(family) + ":" + std::to_string(index); }
  static Generator parse(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError("generator must look like 'sigma:1', got '" + std::string(s) + "'");
    std::string idx(s.substr(colon + 1));
    if (idx.empty() || idx.size() > 6 || !std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        std::stoi(idx) < 1)
      throw ParseError("bad generator index in '" + std::string(s) + "'");
    return {parse_family(s.substr(0, colon)), std::stoi(idx)};
  }
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator sigma(int i) { return {Family::sigma, i}; }
inline Generator rho(int i) { return {Family::rho, i}; }
inline Generator gamma(int i) { return {Family::gamma, i}; }
inline Generator tau(int i) { return {Family::tau, i}; }
inline Generator tau_bar(int i) { return {Family::tau_bar, i}; }

struct Letter {
  Generator gen;
  int exponent = 1;  // +1 or -1

  // "sigma:1^1" or "sigma:1^-1"
  std::string to_string() const { return gen.to_string() + "^" + std::to_string(exponent); }
  static Letter parse(std::string_view s) {
    auto caret = s.find('^');
    if (caret == std::string_view::npos) return {Generator::parse(s), 1};
    std::string_view e = s.substr(caret + 1);
    int exponent;
    if (e == "1" || e == "+1") exponent = 1;
    else if (e == "-1") exponent = -1;
    else throw ParseError("letter exponent must be 1 or -1 in '" + std::string(s) + "'");
    return {Generator::parse(s.substr(0, caret)), exponent};
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word word(std::initializer_list<Generator> gens) {
  Word w;
  for (const auto& g : gens) w.push_back({g, 1});
  return w;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w) out += (out.empty() ? "" : " ") + l.to_string();
  return out;
}

// Comma-separated letters ("sigma:1^1,rho:1^-1"); "" or "e" is the empty word.
inline Word parse_word(std::string_view s) {
  Word w;
  if (s.empty() || s == "e") return w;
  std::size_t pos = 0;
  while (true) {
    auto comma = s.find(',', pos);
    w.push_back(Letter::parse(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

// Cancels adjacent g g^-1 and g^-1 g until none remain.
inline Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exponent == -l.exponent) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

enum class Structure { B, VB, TVB, SM, SB, STVB, STVG };

inline std::string structure_name(Structure s) {
  switch (s) {
    case Structure::B: return "B";
    case Structure::VB: return "VB";
    case Structure::TVB: return "TVB";
    case Structure::SM: return "SM";
    case Structure::SB: return "SB";
    case Structure::STVB: return "STVB";
    case Structure::STVG: return "STVG";
  }
  return "?";
}

inline Structure parse_structure(std::string_view s) {
  for (auto st : {Structure::B, Structure::VB, Structure::TVB, Structure::SM, Structure::SB, Structure::STVB,
                  Structure::STVG})
    if (structure_name(st) == s) return st;
  throw ParseError("unknown structure '" + std::string(s) + "'");
}

struct Relation {
  std::string tag;  // defining-relation label, e.g. "2.13" or "2.16bar"
  Word lhs;
  Word rhs;
};

class Presentation {
 public:
  Structure structure() const { return structure_; }
  int strands() const { return n_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::set<Family>& monoid_families() const { return monoid_families_; }

  bool has_generator(const Generator& g) const {
    return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
  }
  bool invertible(Family f) const { return !monoid_families_.contains(f); }

  // Throws unless every letter is a declared generator with an allowed exponent.
  void validate(const Word& w) const {
    for (const auto& l : w) {
      if (!has_generator(l.gen))
        throw Error("generator " + l.gen.to_string() + " is not in " + name());
      if (l.exponent != 1 && l.exponent != -1) throw Error("letter exponent must be +-1");
      if (l.exponent == -1 && !invertible(l.gen.family))
        throw MonoidViolation("no inverse in monoid: " + l.gen.to_string() + " in " + name());
    }
  }

  std::string name() const { return structure_name(structure_) + "_" + std::to_string(n_); }

  friend Presentation build_presentation(Structure structure, int n);

 private:
  Structure structure_ = Structure::B;
  int n_ = 2;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::set<Family> monoid_families_;
};

// Reverse the word and flip exponents. `context` decides which families have
// inverses; letters from monoid families are rejected.
inline Word word_invert(const Word& w, const Presentation& context) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!context.invertible(it->gen.family))
      throw MonoidViolation("no inverse in monoid: " + it->gen.to_string() + " in " + context.name());
    out.push_back({it->gen, -it->exponent});
  }
  return out;
}

namespace detail {

inline bool far(int i, int j) { return std::abs(i - j) >= 2; }

inline void add(std::vector<Relation>& rels, std::string tag, Word l, Word r) {
  rels.push_back({std::move(tag), std::move(l), std::move(r)});
}

inline void braid_relations(std::vector<Relation>& rels, int n) {
  for (int i = 1; i <= n - 2; ++i)
    add(rels, "2.1", word({sigma(i), sigma(i + 1), sigma(i)}), word({sigma(i + 1), sigma(i), sigma(i + 1)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) add(rels, "2.2", word({sigma(i), sigma(j)}), word({sigma(j), sigma(i)}));
}

inline void virtual_relations(std::vector<Relation>& rels, int n) {
  for (int i = 1; i <= n - 1; ++i) add(rels, "2.3", word({rho(i), rho(i)}), {});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) add(rels, "2.4", word({rho(i), rho(j)}), word({rho(j), rho(i)}));
  for (int i = 1; i <= n - 2; ++i)
    add(rels, "2.5", word({rho(i), rho(i + 1), rho(i)}), word({rho(i + 1), rho(i), rho(i + 1)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (far(i, j)) add(rels, "2.6", word({sigma(i), rho(j)}), word({rho(j), sigma(i)}));
  for (int i = 1; i <= n - 2; ++i)
    add(rels, "2.7", word({rho(i), rho(i + 1), sigma(i)}), word({sigma(i + 1), rho(i), rho(i + 1)}));
}

inline void twisted_relations(std::vector<Relation>& rels, int n) {
  for (int i = 1; i <= n; ++i) add(rels, "2.8", word({gamma(i), gamma(i)}), {});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) add(rels, "2.9", word({gamma(i), gamma(j)}), word({gamma(j), gamma(i)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (far(i, j)) add(rels, "2.10", word({gamma(j), rho(i)}), word({rho(i), gamma(j)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (far(i, j)) add(rels, "2.11", word({gamma(j), sigma(i)}), word({sigma(i), gamma(j)}));
  for (int i = 1; i <= n - 1; ++i) add(rels, "2.12", word({rho(i), gamma(i)}), word({gamma(i + 1), rho(i)}));
  for (int i = 1; i <= n - 1; ++i)
    add(rels, "2.13", word({rho(i), sigma(i), rho(i)}),
        word({gamma(i + 1), gamma(i), sigma(i), gamma(i), gamma(i + 1)}));
}

inline void singular_relations(std::vector<Relation>& rels, int n) {
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) add(rels, "2.14", word({tau(i), tau(j)}), word({tau(j), tau(i)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (far(i, j)) add(rels, "2.15", word({tau(i), sigma(j)}), word({sigma(j), tau(i)}));
  for (int i = 1; i <= n - 1; ++i) add(rels, "2.16", word({tau(i), sigma(i)}), word({sigma(i), tau(i)}));
  for (int i = 1; i <= n - 2; ++i)
    add(rels, "2.17", word({sigma(i), sigma(i + 1), tau(i)}), word({tau(i + 1), sigma(i), sigma(i + 1)}));
  for (int i = 1; i <= n - 2; ++i)
    add(rels, "2.18", word({sigma(i + 1), sigma(i), tau(i + 1)}), word({tau(i), sigma(i + 1), sigma(i)}));
}

inline void singular_twisted_relations(std::vector<Relation>& rels, int n) {
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (far(i, j)) add(rels, "2.19", word({tau(i), rho(j)}), word({rho(j), tau(i)}));
  for (int i = 1; i <= n - 2; ++i)
    add(rels, "2.20", word({rho(i), tau(i + 1), rho(i)}), word({rho(i + 1), tau(i), rho(i + 1)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (far(i, j)) add(rels, "2.21", word({tau(i), gamma(j)}), word({gamma(j), tau(i)}));
  for (int i = 1; i <= n - 1; ++i)
    add(rels, "2.22", word({rho(i), tau(i), rho(i)}), word({gamma(i + 1), gamma(i), tau(i), gamma(i), gamma(i + 1)}));
}

// Copies of every relation mentioning tau with each tau_i replaced by tau_bar_i.
inline void bar_copies(std::vector<Relation>& rels) {
  std::vector<Relation> copies;
  for (const auto& r : rels) {
    auto has_tau = [](const Word& w) {
      return std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.gen.family == Family::tau; });
    };
    if (!has_tau(r.lhs) && !has_tau(r.rhs)) continue;
    auto swap = [](Word w) {
      for (auto& l : w)
        if (l.gen.family == Family::tau) l.gen.family = Family::tau_bar;
      return w;
    };
    copies.push_back({r.tag + "bar", swap(r.lhs), swap(r.rhs)});
  }
  rels.insert(rels.end(), copies.begin(), copies.end());
}

inline void inverse_pair_relations(std::vector<Relation>& rels, int n) {
  for (int i = 1; i <= n - 1; ++i) {
    add(rels, "inv", word({tau(i), tau_bar(i)}), {});
    add(rels, "inv", word({tau_bar(i), tau(i)}), {});
  }
}

}  // namespace detail

// Generators and defining relations of one of the seven structures on n
// strands, every relation tagged with its equation label.
inline Presentation build_presentation(Structure structure, int n) {
  if (n < 2) throw Error("presentations need n >= 2 strands, got " + std::to_string(n));
  Presentation p;
  p.structure_ = structure;
  p.n_ = n;
  const bool has_rho = structure == Structure::VB || structure == Structure::TVB || structure == Structure::STVB ||
                       structure == Structure::STVG;
  const bool has_gamma = structure == Structure::TVB || structure == Structure::STVB || structure == Structure::STVG;
  const bool has_tau = structure == Structure::SM || structure == Structure::SB || structure == Structure::STVB ||
                       structure == Structure::STVG;
  const bool has_tau_bar = structure == Structure::SB || structure == Structure::STVG;

  for (int i = 1; i <= n - 1; ++i) p.generators_.push_back(sigma(i));
  if (has_rho)
    for (int i = 1; i <= n - 1; ++i) p.generators_.push_back(rho(i));
  if (has_gamma)
    for (int j = 1; j <= n; ++j) p.generators_.push_back(gamma(j));
  if (has_tau)
    for (int i = 1; i <= n - 1; ++i) p.generators_.push_back(tau(i));
  if (has_tau_bar)
    for (int i = 1; i <= n - 1; ++i) p.generators_.push_back(tau_bar(i));

  auto& rels = p.relations_;
  detail::braid_relations(rels, n);
  if (has_rho) detail::virtual_relations(rels, n);
  if (has_gamma) detail::twisted_relations(rels, n);
  if (has_tau) detail::singular_relations(rels, n);
  if (has_tau && has_gamma) detail::singular_twisted_relations(rels, n);
  if (has_tau_bar) {
    detail::bar_copies(rels);
    detail::inverse_pair_relations(rels, n);
  }
  if (structure == Structure::STVG)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        if (detail::far(i, j)) detail::add(rels, "mixed", word({tau(j), tau_bar(i)}), word({tau_bar(i), tau(j)}));

  if (structure == Structure::SM || structure == Structure::STVB) p.monoid_families_.insert(Family::tau);
  return p;
}

}  // namespace tvbrep
