#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvbrep/catalog.hpp"

namespace tvbrep {

template <Scalar S>
struct PhiCoefficients {
  S t;
  S u;
  S v;
};

// tau_i -> t sigma_i + u sigma_i^{-1} + v I on top of a TVB_n representation;
// sigma, rho and gamma images are kept.
template <Scalar S>
Representation<S> phi_extend(const Representation<S>& base, const PhiCoefficients<S>& k) {
  if (base.presentation().structure() != Structure::TVB)
    throw Error("phi_extend expects a TVB_n representation, got " + base.presentation().name());
  const int n = base.presentation().strands();
  auto images = base.images();
  const auto id = Matrix<S>::identity(base.ring(), base.dim());
  for (int i = 1; i <= n - 1; ++i) {
    const auto& s = base.image(sigma(i));
    images.emplace(tau(i), k.t * s + k.u * inverse(s) + k.v * id);
  }
  return Representation<S>(build_presentation(Structure::STVB, n), base.ring(), base.dim(), std::move(images),
                           base.label().empty() ? "phi" : "phi(" + base.label() + ")");
}

// The closed-form Phi(tau_1) over zeta1, entry by entry as displayed.
template <FieldScalar S>
Matrix<S> phi_tau_zeta1(const S& b, const S& d, const S& x, const PhiCoefficients<S>& k,
                        const typename S::ring_type& ring) {
  if (x.is_zero()) throw ConstraintViolation("phi over zeta1: parameters violate x != 0");
  S q = d * d * x * x - b * b;
  if (q.is_zero()) throw ConstraintViolation("phi over zeta1: parameters violate d^2x^2-b^2 != 0");
  S x2 = x * x;
  S diag = d * (k.u * x2 / q + k.t) + k.v;
  S upper = b * (k.u * x2 / (-q) + k.t);
  S lower = b * (k.u / (-q) + k.t / x2);
  Matrix<S> m(ring, 3);
  m(0, 0) = diag;
  m(0, 1) = upper;
  m(1, 0) = lower;
  m(1, 1) = diag;
  m(2, 2) = k.t + k.u + k.v;
  return m;
}

enum class MatchStatus { unique, singular_consistent, inconsistent };

inline std::string match_status_name(MatchStatus s) {
  switch (s) {
    case MatchStatus::unique: return "unique";
    case MatchStatus::singular_consistent: return "singular_consistent";
    case MatchStatus::inconsistent: return "inconsistent";
  }
  return "?";
}

template <FieldScalar S>
struct PhiMatch {
  MatchStatus status = MatchStatus::inconsistent;
  int rank = 0;            // rank of the coefficient matrix
  int augmented_rank = 0;  // rank with the right-hand side appended
  std::optional<PhiCoefficients<S>> coefficients;
  bool round_trip = false;              // eta1(tau1) == Phi(tau1) exactly
  bool matches_closed_form = false;   // agrees with the displayed closed forms
};

namespace detail {

// Row reduction of an augmented system; returns (rank, augmented rank) and
// the solution when it is unique.
template <FieldScalar S>
std::tuple<int, int, std::optional<std::vector<S>>> solve_linear(std::vector<std::vector<S>> rows,
                                                                  std::size_t unknowns) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    S inv = rows[r][col].inverse();
    for (auto& e : rows[r]) e = e * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      S f = rows[i][col];
      for (std::size_t j = 0; j <= unknowns; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  int rank = static_cast<int>(r);
  int augmented = rank;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (!rows[i][unknowns].is_zero()) {
      augmented = rank + 1;
      break;
    }
  if (augmented != rank || r != unknowns) return {rank, augmented, std::nullopt};
  std::vector<S> x(unknowns);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rows[i][unknowns];
  return {rank, augmented, x};
}

}  // namespace detail

// The three closed forms for (t, u, v) as displayed, in eta1's f, g with the
// sigma diagonal written d.
template <FieldScalar S>
PhiCoefficients<S> closed_form_phi(const S& b, const S& d, const S& x, const S& f, const S& g,
                                      const typename S::ring_type& ring) {
  S one = ring.one();
  S x2 = x * x;
  S den = b * b * b - b * (d - one) * (d - one) * x2;
  if (den.is_zero()) throw OutsideDomain("parameter outside domain: denominator b^3-b(d-1)^2x^2 vanishes");
  S t = (b * b * g + x2 * (b * (f - one) - (d - one) * d * g)) / den;
  S u = -((b - d * x) * (b + d * x) * (b * (f - one) - d * g + g)) / den;
  S v = (b * b * b * f - b * b * d * g - b * x2 * (d * (d * f - ring.constant(Rational(2))) + f) +
         d * (d * d - one) * g * x2) /
        den;
  return {t, u, v};
}

// Solve eta1(tau1) = Phi_{t,u,v}(tau1) over the zeta1 base with the same
// b, d, x (eta1's sigma diagonal a is identified with zeta1's d). The
// equations are the diagonal entry, the upper off-diagonal entry and the
// corner; the lower off-diagonal entry is b/x^2 times the upper one on both
// sides and is checked by the round trip.
template <FieldScalar S>
PhiMatch<S> solve_phi_match(const S& b, const S& d, const S& x, const S& f, const S& g,
                            const typename S::ring_type& ring) {
  if (x.is_zero()) throw ConstraintViolation("eta1: parameters violate x != 0");
  if ((d * d * x * x - b * b).is_zero()) throw ConstraintViolation("eta1: parameters violate a^2x^2-b^2 != 0");
  S zero = ring.zero(), one = ring.one();
  S inv_det = one / (d * d - b * b / (x * x));  // sigma^{-1} block is inv_det * [[d, -b], [-b/x^2, d]]
  std::vector<std::vector<S>> rows = {
      {d, d * inv_det, one, f},
      {b, -(b * inv_det), zero, g},
      {one, one, one, one},
  };
  auto [rank, augmented, sol] = detail::solve_linear(rows, 3);
  PhiMatch<S> out;
  out.rank = rank;
  out.augmented_rank = augmented;
  if (augmented != rank) {
    out.status = MatchStatus::inconsistent;
    return out;
  }
  if (!sol) {
    out.status = MatchStatus::singular_consistent;
    return out;
  }
  out.status = MatchStatus::unique;
  PhiCoefficients<S> k{(*sol)[0], (*sol)[1], (*sol)[2]};
  out.coefficients = k;
  auto eta1 = family_definition("eta1");
  Bindings<S> bind{{"a", d}, {"b", b}, {"x", x}, {"f", f}, {"g", g}};
  auto eta = instantiate(eta1, bind, ring);
  auto zeta = rep_zeta<S>(1, Bindings<S>{{"b", b}, {"d", d}, {"x", x}}, ring);
  out.round_trip = eta.image(tau(1)) == phi_extend(zeta, k).image(tau(1));
  try {
    auto closed = closed_form_phi(b, d, x, f, g, ring);
    out.matches_closed_form = closed.t == k.t && closed.u == k.u && closed.v == k.v;
  } catch (const OutsideDomain&) {
    out.matches_closed_form = false;
  }
  return out;
}

// STVB_n -> STVG_n by tau_bar_i -> tau_i^{-1}.
template <Scalar S>
Representation<S> promote_to_group(const Representation<S>& rep) {
  if (rep.presentation().structure() != Structure::STVB)
    throw Error("promote_to_group expects an STVB_n representation, got " + rep.presentation().name());
  const int n = rep.presentation().strands();
  auto images = rep.images();
  for (int i = 1; i <= n - 1; ++i) images.emplace(tau_bar(i), inverse(rep.image(tau(i))));
  return Representation<S>(build_presentation(Structure::STVG, n), rep.ring(), rep.dim(), std::move(images),
                           rep.label().empty() ? "" : rep.label() + "+inv");
}

}  // namespace tvbrep
