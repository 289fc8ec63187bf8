#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvbrep/matrix.hpp"
#include "tvbrep/presentation.hpp"

namespace tvbrep {

// A total map from the generators of a presentation to square matrices over
// one ring. Images of invertible generator families must be invertible; tau
// images in monoid structures may be singular.
template <Scalar S>
class Representation {
 public:
  using scalar_type = S;
  using ring_type = typename S::ring_type;
  using Images = std::map<Generator, Matrix<S>>;

  Representation(Presentation presentation, ring_type ring, std::size_t dim, Images images, std::string label = "")
      : Representation(std::move(presentation), std::move(ring), dim, std::move(images), std::move(label), true) {}

  // Skips the invertibility check, for generic ansatz matrices whose
  // determinants are side conditions rather than ring units.
  static Representation unchecked(Presentation presentation, ring_type ring, std::size_t dim, Images images,
                                  std::string label = "") {
    return Representation(std::move(presentation), std::move(ring), dim, std::move(images), std::move(label), false);
  }

  const Presentation& presentation() const { return presentation_; }
  const ring_type& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const Images& images() const { return images_; }
  const Matrix<S>& image(const Generator& g) const {
    auto it = images_.find(g);
    if (it == images_.end()) throw Error("representation has no image for " + g.to_string());
    return it->second;
  }
  const std::string& label() const { return label_; }

 private:
  Representation(Presentation presentation, ring_type ring, std::size_t dim, Images images, std::string label,
                 bool check_units)
      : presentation_(std::move(presentation)),
        ring_(std::move(ring)),
        dim_(dim),
        images_(std::move(images)),
        label_(std::move(label)) {
    for (const auto& g : presentation_.generators()) {
      auto it = images_.find(g);
      if (it == images_.end()) throw Error("representation has no image for " + g.to_string());
      if (it->second.dim() != dim_)
        throw DimensionMismatch("image of " + g.to_string() + " has dimension " + std::to_string(it->second.dim()) +
                                ", expected " + std::to_string(dim_));
      if (!(it->second.ring() == ring_))
        throw RingMismatch("image of " + g.to_string() + " is over " + it->second.ring().name() + ", expected " +
                           ring_.name());
      if (check_units && presentation_.invertible(g.family)) {
        S det = determinant(it->second);
        if (det.is_zero()) throw SingularMatrix("image of " + g.to_string() + " is singular");
        if (!det.is_unit())
          throw NotAUnit("determinant of the image of " + g.to_string() + " is " + det.to_string() +
                         ", not a unit in " + ring_.name());
      }
    }
    for (const auto& [g, m] : images_)
      if (!presentation_.has_generator(g)) throw Error(g.to_string() + " is not a generator of " + presentation_.name());
  }

  Presentation presentation_;
  ring_type ring_;
  std::size_t dim_;
  Images images_;
  std::string label_;
};

// Ordered product of letter images; the empty word maps to the identity.
template <Scalar S>
Matrix<S> evaluate(const Representation<S>& rep, const Word& w) {
  rep.presentation().validate(w);
  Matrix<S> result = Matrix<S>::identity(rep.ring(), rep.dim());
  for (const auto& l : w) {
    if (l.exponent == 1) result = result * rep.image(l.gen);
    else result = result * inverse(rep.image(l.gen));
  }
  return result;
}

template <Scalar S>
struct RelationResult {
  Relation relation;
  bool passed = false;
  std::optional<Matrix<S>> difference;  // lhs image minus rhs image, on failure
};

template <Scalar S>
struct RelationReport {
  std::vector<RelationResult<S>> results;

  std::size_t passed_count() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.passed;
    return n;
  }
  bool all_passed() const { return passed_count() == results.size(); }
  std::vector<std::string> failing_tags() const {
    std::vector<std::string> tags;
    for (const auto& r : results)
      if (!r.passed) tags.push_back(r.relation.tag);
    return tags;
  }
};

template <Scalar S>
RelationReport<S> check_relations(const Representation<S>& rep) {
  RelationReport<S> report;
  for (const auto& rel : rep.presentation().relations()) {
    Matrix<S> diff = evaluate(rep, rel.lhs) - evaluate(rep, rel.rhs);
    RelationResult<S> r{rel, diff.is_zero(), std::nullopt};
    if (!r.passed) r.difference = std::move(diff);
    report.results.push_back(std::move(r));
  }
  return report;
}

// Same images read as a representation of another presentation, e.g. after
// adding or dropping generators.
template <Scalar S>
Representation<S> with_presentation(const Representation<S>& rep, Presentation p,
                                    typename Representation<S>::Images images, std::string label) {
  return Representation<S>(std::move(p), rep.ring(), rep.dim(), std::move(images), std::move(label));
}

// Entrywise image of every generator under a scalar map into another ring.
template <Scalar T, Scalar S, class F>
Representation<T> map_entries(const Representation<S>& rep, const typename T::ring_type& target, F&& f) {
  typename Representation<T>::Images images;
  for (const auto& [g, m] : rep.images()) {
    Matrix<T> out(target, m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = f(m(i, j));
    images.emplace(g, std::move(out));
  }
  return Representation<T>(rep.presentation(), target, rep.dim(), std::move(images), rep.label());
}

}  // namespace tvbrep
