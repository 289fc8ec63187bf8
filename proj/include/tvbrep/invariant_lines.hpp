#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvbrep/matrix.hpp"

namespace tvbrep {

// One-dimensional subspace, stored by a direction whose first nonzero
// coordinate is 1. Two Lines are equal iff they span the same subspace.
template <FieldScalar S>
class Line {
 public:
  static Line through(std::vector<S> direction) {
    std::size_t lead = 0;
    while (lead < direction.size() && direction[lead].is_zero()) ++lead;
    if (lead == direction.size()) throw Error("zero vector does not span a line");
    S scale = direction[lead].inverse();
    for (auto& x : direction) x = x * scale;
    return Line(std::move(direction));
  }

  std::size_t dim() const { return direction_.size(); }
  const std::vector<S>& direction() const { return direction_; }

  // M v is parallel to v: every 2x2 minor of [Mv | v] vanishes.
  bool invariant_under(const Matrix<S>& m) const {
    if (m.dim() != dim()) throw DimensionMismatch("line and matrix dimensions differ");
    std::vector<S> image(dim(), m.ring().zero());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) image[i] = image[i] + m(i, j) * direction_[j];
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!(image[i] * direction_[j] - image[j] * direction_[i]).is_zero()) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "span(";
    for (std::size_t i = 0; i < direction_.size(); ++i) out += (i ? ", " : "") + direction_[i].to_string();
    return out + ")";
  }

  friend bool operator==(const Line& a, const Line& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!(a.direction_[i] == b.direction_[i])) return false;
    return true;
  }

 private:
  explicit Line(std::vector<S> d) : direction_(std::move(d)) {}
  std::vector<S> direction_;
};

template <FieldScalar S>
struct InvariantLines {
  bool all_lines = false;  // the matrix is scalar
  std::vector<Line<S>> lines;
};

namespace detail {

inline std::optional<Rational> exact_sqrt(const Rational& r) {
  Rational out;
  if (r.try_sqrt(out)) return out;
  return std::nullopt;
}
inline std::optional<RationalFunction> exact_sqrt(const RationalFunction& f) { return f.try_sqrt(); }

template <FieldScalar S>
bool is_scalar_2x2(const Matrix<S>& m) {
  return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
}

}  // namespace detail

// Lines L with A L = L for a 2x2 matrix A = [[a, b], [c, d]] over a field.
// (v1, v2) spans an invariant line iff c v1^2 + (d - a) v1 v2 - b v2^2 = 0.
// Only lines with coordinates in the working field are returned; span(0, 1)
// comes first when present.
template <FieldScalar S>
InvariantLines<S> invariant_lines(const Matrix<S>& m) {
  if (m.dim() != 2) throw DimensionMismatch("invariant_lines expects a 2x2 matrix");
  const auto& ring = m.ring();
  const S& a = m(0, 0);
  const S& b = m(0, 1);
  const S& c = m(1, 0);
  const S& d = m(1, 1);
  InvariantLines<S> result;
  if (detail::is_scalar_2x2(m)) {
    result.all_lines = true;
    return result;
  }
  S diff = d - a;
  if (b.is_zero()) {
    result.lines.push_back(Line<S>::through({ring.zero(), ring.one()}));
    if (!diff.is_zero()) result.lines.push_back(Line<S>::through({ring.one(), -(c / diff)}));
    return result;
  }
  // Finite lines (1, m): b m^2 - (d - a) m - c = 0.
  S disc = diff * diff + ring.constant(Rational(4)) * b * c;
  S two_b = ring.constant(Rational(2)) * b;
  if (disc.is_zero()) {
    result.lines.push_back(Line<S>::through({ring.one(), diff / two_b}));
    return result;
  }
  auto root = detail::exact_sqrt(disc);
  if (!root) return result;
  result.lines.push_back(Line<S>::through({ring.one(), (diff + *root) / two_b}));
  result.lines.push_back(Line<S>::through({ring.one(), (diff - *root) / two_b}));
  return result;
}

// Every working-field line invariant under all the given 2x2 matrices. A
// common line is in particular invariant under the first non-scalar matrix,
// so its (at most two) lines are the only candidates. `all_lines` is set when
// the constraint is vacuous (no matrices, or only scalar ones).
template <FieldScalar S>
InvariantLines<S> common_invariant_lines(const std::vector<Matrix<S>>& matrices) {
  InvariantLines<S> result;
  const Matrix<S>* first = nullptr;
  for (const auto& m : matrices) {
    if (m.dim() != 2) throw DimensionMismatch("common_invariant_line expects 2x2 matrices");
    if (!first && !detail::is_scalar_2x2(m)) first = &m;
  }
  if (!first) {
    result.all_lines = true;
    return result;
  }
  for (const auto& candidate : invariant_lines(*first).lines) {
    bool ok = true;
    for (const auto& m : matrices)
      if (!candidate.invariant_under(m)) {
        ok = false;
        break;
      }
    if (ok) result.lines.push_back(candidate);
  }
  return result;
}

// A common invariant line, or nullopt. The vacuous case reports span(1, 0).
template <FieldScalar S>
std::optional<Line<S>> common_invariant_line(const std::vector<Matrix<S>>& matrices,
                                             const typename S::ring_type& ring) {
  auto all = common_invariant_lines(matrices);
  if (all.all_lines) return Line<S>::through({ring.one(), ring.zero()});
  if (all.lines.empty()) return std::nullopt;
  return all.lines.front();
}

}  // namespace tvbrep
