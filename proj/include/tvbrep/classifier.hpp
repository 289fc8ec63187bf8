#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvbrep/catalog.hpp"

namespace tvbrep {

struct Equation {
  MultiPoly polynomial;    // implicitly = 0
  std::string provenance;  // tag of the relation it came from
};

struct PolynomialSystem {
  Structure structure = Structure::TVB;
  Variables unknowns;
  std::vector<Equation> equations;
  std::size_t raw_entry_count = 0;  // nonzero entries before deduplication
};

inline Variables ansatz_unknowns(Structure st) {
  std::vector<std::string> names = {"a", "b", "c", "d", "w", "x", "y", "z", "p", "q", "r", "s"};
  if (st == Structure::STVB)
    for (const char* extra : {"f", "g", "h", "k"}) names.emplace_back(extra);
  return Variables(std::move(names));
}

// Generic local images at n = 2: sigma1 [[a,b],[c,d]], rho1 [[w,x],[y,z]],
// gamma1 [[p,q],[r,s]] at position 1 and the same block at position 2 for
// gamma2, tau1 [[f,g],[h,k]]; all over Q[unknowns].
inline Representation<MultiPoly> local_ansatz(Structure st) {
  if (st != Structure::TVB && st != Structure::STVB)
    throw Unsupported("the local ansatz is implemented for TVB_2 and STVB_2 only");
  PolynomialRing<false> ring{ansatz_unknowns(st)};
  auto v = [&](const char* n) { return ring.variable(n); };
  auto local = [&](const char* a, const char* b, const char* c, const char* d, std::size_t pos) {
    return block_embed(mat2(ring, v(a), v(b), v(c), v(d)), pos, 3);
  };
  Representation<MultiPoly>::Images images;
  images.emplace(sigma(1), local("a", "b", "c", "d", 1));
  images.emplace(rho(1), local("w", "x", "y", "z", 1));
  images.emplace(gamma(1), local("p", "q", "r", "s", 1));
  images.emplace(gamma(2), local("p", "q", "r", "s", 2));
  if (st == Structure::STVB) images.emplace(tau(1), local("f", "g", "h", "k", 1));
  // Invertibility of the ansatz is a side condition, not a ring unit.
  return Representation<MultiPoly>::unchecked(build_presentation(st, 2), std::move(ring), 3, std::move(images),
                                              "ansatz");
}

// Entrywise lhs - rhs of every relation under the local ansatz, zero entries
// dropped, exact duplicates removed (first provenance kept).
inline PolynomialSystem generate_system(Structure st) {
  auto ansatz = local_ansatz(st);
  PolynomialSystem sys;
  sys.structure = st;
  sys.unknowns = ansatz.ring().vars;
  for (const auto& rel : ansatz.presentation().relations()) {
    auto diff = evaluate(ansatz, rel.lhs) - evaluate(ansatz, rel.rhs);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto& e = diff(i, j);
        if (e.is_zero()) continue;
        ++sys.raw_entry_count;
        bool dup = std::any_of(sys.equations.begin(), sys.equations.end(),
                               [&](const Equation& q) { return q.polynomial == e; });
        if (!dup) sys.equations.push_back({e, rel.tag});
      }
  }
  return sys;
}

inline PolynomialSystem substitute_system(const PolynomialSystem& sys, const Bindings<MultiPoly>& bindings) {
  PolynomialSystem out;
  out.structure = sys.structure;
  out.unknowns = sys.unknowns;
  PolynomialRing<false> ring{sys.unknowns};
  for (const auto& eq : sys.equations) {
    auto e = substitute(eq.polynomial, bindings, ring);
    if (e.is_zero()) continue;
    ++out.raw_entry_count;
    bool dup = std::any_of(out.equations.begin(), out.equations.end(),
                           [&](const Equation& q) { return q.polynomial == e; });
    if (!dup) out.equations.push_back({e, eq.provenance});
  }
  return out;
}

// The reduced equations listed after q = r = 0, s = 1, in the ansatz ring.
inline std::vector<MultiPoly> stated_reduced_equations() {
  PolynomialRing<false> ring{ansatz_unknowns(Structure::TVB)};
  auto v = [&](const char* n) { return ring.variable(n); };
  auto a = v("a"), b = v("b"), c = v("c"), d = v("d"), w = v("w"), x = v("x"), y = v("y"), z = v("z"), p = v("p");
  auto one = ring.one();
  return {
      w * w + x * y - one,
      x * (w + z),
      y * (w + z),
      z * z + x * y - one,
      p * p - one,
      w * (one - p),
      z * (one - p),
      -(a * p * p) + w * (a * w + c * x) + (b * w + d * x) * y,
      -(b * p * p) + x * (a * w + c * x) + (b * w + d * x) * z,
      -(c * p * p) + w * (a * y + c * z) + y * (b * y + d * z),
      -(d * p * p) + x * (a * y + c * z) + z * (b * y + d * z),
  };
}

// Set equality of two polynomial lists, each element matched up to sign.
inline bool same_set_up_to_sign(const std::vector<MultiPoly>& xs, const std::vector<MultiPoly>& ys) {
  auto covered = [](const std::vector<MultiPoly>& from, const std::vector<MultiPoly>& in) {
    return std::all_of(from.begin(), from.end(), [&](const MultiPoly& p) {
      return std::any_of(in.begin(), in.end(), [&](const MultiPoly& q) { return p == q || p == -q; });
    });
  };
  return covered(xs, ys) && covered(ys, xs);
}

struct GammaNormalization {
  std::map<std::string, Rational> forced;         // values forced by the system
  std::map<std::string, std::string> forced_by;   // provenance per forced unknown
  bool derived = false;  // q = r = 0 and s = 1 all forced
};

// Propagates forced values for p, q, r, s: an equation that, after the values
// found so far are substituted, reduces to c*v^k forces v = 0, and one that
// reduces to c*(v - alpha) forces v = alpha.
inline GammaNormalization derive_gamma_normalization(const PolynomialSystem& sys) {
  GammaNormalization out;
  PolynomialRing<false> ring{sys.unknowns};
  const std::vector<std::string> targets = {"p", "q", "r", "s"};
  bool changed = true;
  while (changed) {
    changed = false;
    Bindings<MultiPoly> bind;
    for (const auto& [name, value] : out.forced) bind.emplace(name, ring.constant(value));
    for (const auto& eq : sys.equations) {
      auto e = substitute(eq.polynomial, bind, ring);
      if (e.is_zero()) continue;
      // Which unknowns remain?
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        if (e.degree_in(i) > 0) live.push_back(i);
      if (live.size() != 1) continue;
      const std::string& name = sys.unknowns[live[0]];
      if (std::find(targets.begin(), targets.end(), name) == targets.end() || out.forced.contains(name)) continue;
      if (e.is_monomial()) {
        out.forced.emplace(name, Rational(0));
      } else if (e.total_degree() == 1 && e.term_count() == 2) {
        Rational lead = e.leading_coefficient();
        out.forced.emplace(name, -(e.terms().begin()->second / lead));
      } else {
        continue;
      }
      out.forced_by.emplace(name, eq.provenance);
      changed = true;
      break;
    }
  }
  auto is = [&](const char* n, long v) { return out.forced.contains(n) && out.forced.at(n) == Rational(v); };
  out.derived = is("q", 0) && is("r", 0) && is("s", 1);
  return out;
}

// Assignment of the ansatz unknowns read off a representation of local shape.
template <Scalar S>
Bindings<S> ansatz_assignment(const Representation<S>& rep) {
  Bindings<S> b;
  auto read = [&](const Generator& g, const char* n00, const char* n01, const char* n10, const char* n11) {
    const auto& m = rep.image(g);
    b.emplace(n00, m(0, 0));
    b.emplace(n01, m(0, 1));
    b.emplace(n10, m(1, 0));
    b.emplace(n11, m(1, 1));
  };
  read(sigma(1), "a", "b", "c", "d");
  read(rho(1), "w", "x", "y", "z");
  read(gamma(1), "p", "q", "r", "s");
  if (rep.presentation().has_generator(tau(1))) read(tau(1), "f", "g", "h", "k");
  return b;
}

struct VerifyResult {
  bool all_vanish = false;
  std::vector<std::string> failing;  // provenance tags of nonvanishing equations
};

template <FieldScalar S>
VerifyResult verify_assignment(const PolynomialSystem& sys, const Bindings<S>& values,
                               const typename S::ring_type& ring) {
  VerifyResult out;
  for (const auto& eq : sys.equations) {
    if (!substitute(eq.polynomial, values, ring).is_zero()) {
      if (std::find(out.failing.begin(), out.failing.end(), eq.provenance) == out.failing.end())
        out.failing.push_back(eq.provenance);
    }
  }
  out.all_vanish = out.failing.empty();
  return out;
}

// Substitutes a representation's entries into the system. The gamma2 image
// must also be the ansatz's position-2 copy of the gamma1 block.
template <FieldScalar S>
VerifyResult verify_representation(const PolynomialSystem& sys, const Representation<S>& rep) {
  auto values = ansatz_assignment(rep);
  auto result = verify_assignment(sys, values, rep.ring());
  const auto& g1 = rep.image(gamma(1));
  auto expected = block_embed(g1.leading_block(2), 2, 3);
  if (!(expected == rep.image(gamma(2)))) {
    result.all_vanish = false;
    result.failing.push_back("gamma2-shape");
  }
  return result;
}

inline VerifyResult verify_family(const PolynomialSystem& sys, const std::string& family_id) {
  auto def = family_definition(family_id);
  if (def.structure != sys.structure)
    throw Error(family_id + " is a family for " + structure_name(def.structure) + "_2, not " +
                structure_name(sys.structure) + "_2");
  return verify_representation(sys, symbolic(def));
}

struct FamilyMatch {
  std::string family;
  Bindings<Rational> bindings;
  bool residual = false;  // reconstruction from the bindings reproduces the input
  std::vector<std::string> all_matches;
  std::vector<std::string> notes;
};

inline std::vector<std::string> classification_order(Structure st) {
  if (st == Structure::STVB) return eta_ids();
  return {"zeta1", "zeta4", "zeta3", "zeta2", "zeta5", "zeta6", "zeta7", "zeta8"};
}

// Local shape: 3x3, last row and column those of the identity, gamma2 the
// position-2 copy of the gamma1 block.
template <Scalar S>
void check_local_shape(const Representation<S>& rep) {
  if (rep.dim() != 3 || rep.presentation().strands() != 2)
    throw Error("non-local shape: classification needs 3x3 images of a 2-strand structure");
  for (const auto& g : rep.presentation().generators()) {
    if (g == gamma(2)) continue;
    const auto& m = rep.image(g);
    for (std::size_t i = 0; i < 2; ++i)
      if (!m(2, i).is_zero() || !m(i, 2).is_zero()) throw Error("non-local shape: image of " + g.to_string());
    if (!(m(2, 2) == rep.ring().one())) throw Error("non-local shape: image of " + g.to_string());
  }
  if (!(block_embed(rep.image(gamma(1)).leading_block(2), 2, 3) == rep.image(gamma(2))))
    throw Error("non-local shape: gamma2 is not the shifted gamma1 block");
}

// Literal form-matching against every family in proof order.
inline std::optional<FamilyMatch> classify_solution(const Representation<Rational>& rep) {
  const Structure st = rep.presentation().structure();
  if (st != Structure::TVB && st != Structure::STVB) throw Unsupported("classification covers TVB_2 and STVB_2");
  check_local_shape(rep);
  std::optional<FamilyMatch> first;
  std::vector<std::string> matches;
  std::vector<std::string> notes;
  for (const auto& id : classification_order(st)) {
    auto def = family_definition(id);
    Bindings<Rational> bind;
    for (const auto& [name, loc] : def.locators) bind.emplace(name, rep.image(loc.gen)(loc.row, loc.col));
    try {
      auto candidate = instantiate(def, bind, RationalField{});
      bool same = true;
      for (const auto& g : rep.presentation().generators())
        if (!(candidate.image(g) == rep.image(g))) {
          same = false;
          break;
        }
      if (!same) continue;
      matches.push_back(id);
      if (!first) first = FamilyMatch{id, bind, true, {}, {}};
    } catch (const ConstraintViolation& e) {
      if (id == "zeta2" && std::string(e.what()).find("det") != std::string::npos)
        notes.push_back("zeta2 boundary: stated condition holds, determinant condition fails");
    } catch (const Error&) {
    }
  }
  if (!first) return std::nullopt;
  first->all_matches = std::move(matches);
  first->notes = std::move(notes);
  return first;
}

}  // namespace tvbrep
