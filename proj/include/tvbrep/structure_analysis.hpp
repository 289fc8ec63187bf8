#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvbrep/catalog.hpp"
#include "tvbrep/invariant_lines.hpp"

namespace tvbrep {

// A catalog family under which two words have different images.
struct SeparatingRep {
  std::string family;
  Bindings<Rational> bindings;  // a concrete separating point, when one was found
};

template <Scalar S>
struct WitnessReport {
  Word word_a;
  Word word_b;
  bool images_equal = false;
  std::optional<Matrix<S>> image_a;
  std::optional<Matrix<S>> image_b;
  std::optional<SeparatingRep> separating_rep;  // set only by a successful catalog search
  std::vector<std::string> searched;            // families tried by the search
};

template <Scalar S>
WitnessReport<S> equal_image_witness(const Representation<S>& rep, const Word& a, const Word& b) {
  WitnessReport<S> r;
  r.word_a = a;
  r.word_b = b;
  r.image_a = evaluate(rep, a);
  r.image_b = evaluate(rep, b);
  r.images_equal = *r.image_a == *r.image_b;
  return r;
}

// Look for a catalog family whose symbolic images of `a` and `b` differ. A
// concrete rational point where they differ is recorded as the certificate.
template <Scalar S>
void search_separating(WitnessReport<S>& report, const std::vector<std::string>& families, int n = 2,
                       std::uint64_t seed = 1, int samples = 20) {
  std::mt19937_64 rng(seed);
  for (const auto& id : families) {
    report.searched.push_back(id);
    auto def = family_definition(id, n);
    auto rep = symbolic(def);
    auto presentation = rep.presentation();
    try {
      presentation.validate(report.word_a);
      presentation.validate(report.word_b);
    } catch (const Error&) {
      continue;
    }
    if (evaluate(rep, report.word_a) == evaluate(rep, report.word_b)) continue;
    for (int i = 0; i < samples; ++i) {
      auto bindings = sample_bindings(def, rng);
      auto concrete = instantiate(def, bindings, RationalField{});
      if (!(evaluate(concrete, report.word_a) == evaluate(concrete, report.word_b))) {
        report.separating_rep = SeparatingRep{id, bindings};
        return;
      }
    }
    report.separating_rep = SeparatingRep{id, {}};
    return;
  }
}

template <Scalar S>
std::vector<Generator> kernel_generators(const Representation<S>& rep) {
  std::vector<Generator> out;
  for (const auto& g : rep.presentation().generators())
    if (rep.image(g).is_identity()) out.push_back(g);
  return out;
}

// The designated witness pair for a catalog family: sigma1 rho1 / rho1 sigma1
// for zeta1 and eta1, gamma1 sigma1 gamma2 / gamma2 sigma1 gamma1 for zeta'1
// and zeta'2, otherwise a generator with identity image against the empty word
// (a gamma when one is available).
inline std::pair<Word, Word> designated_witness(const std::string& family_id,
                                                const std::vector<Generator>& kernel) {
  if (family_id == "zeta1" || family_id == "eta1") return {word({sigma(1), rho(1)}), word({rho(1), sigma(1)})};
  if (family_id == "zetap1" || family_id == "zetap2")
    return {word({gamma(1), sigma(1), gamma(2)}), word({gamma(2), sigma(1), gamma(1)})};
  for (const auto& g : kernel)
    if (g.family == Family::gamma) return {word({g}), {}};
  if (!kernel.empty()) return {word({kernel.front()}), {}};
  return {{}, {}};
}

template <Scalar S>
WitnessReport<S> unfaithfulness_audit(const std::string& family_id, const Representation<S>& rep) {
  auto [a, b] = designated_witness(family_id, kernel_generators(rep));
  if (a.empty() && b.empty()) {
    WitnessReport<S> r;
    r.images_equal = false;
    return r;
  }
  return equal_image_witness(rep, a, b);
}

template <FieldScalar S>
struct ReducibilityReport {
  bool preserved_last_axis = false;
  std::vector<Matrix<S>> block_factors;     // leading (dim-1) block of every generator image
  bool line_search_done = false;            // only for 2x2 factors
  bool all_lines = false;                   // every block factor is scalar
  std::vector<Line<S>> common_lines;        // working-field lines only
  std::optional<Line<S>> common_line() const {
    if (all_lines) return Line<S>::through({block_factors.front().ring().one(), block_factors.front().ring().zero()});
    if (common_lines.empty()) return std::nullopt;
    return common_lines.front();
  }
};

// M e_last is parallel to e_last.
template <Scalar S>
bool fixes_last_axis(const Matrix<S>& m) {
  const std::size_t last = m.dim() - 1;
  for (std::size_t i = 0; i < last; ++i)
    if (!m(i, last).is_zero()) return false;
  return true;
}

template <FieldScalar S>
ReducibilityReport<S> reducibility_audit(const Representation<S>& rep) {
  if (rep.dim() < 3) throw Unsupported("reducibility audit needs the local shape of dimension >= 3");
  ReducibilityReport<S> report;
  report.preserved_last_axis = true;
  for (const auto& g : rep.presentation().generators()) {
    const auto& m = rep.image(g);
    report.preserved_last_axis = report.preserved_last_axis && fixes_last_axis(m);
    report.block_factors.push_back(m.leading_block(rep.dim() - 1));
  }
  if (rep.dim() == 3 && report.preserved_last_axis) {
    report.line_search_done = true;
    auto lines = common_invariant_lines(report.block_factors);
    report.all_lines = lines.all_lines;
    report.common_lines = std::move(lines.lines);
  }
  return report;
}

// Keeps only the sigma images, as a representation of B_n.
template <Scalar S>
Representation<S> restriction_to_braid(const Representation<S>& rep) {
  const auto& p = rep.presentation();
  typename Representation<S>::Images images;
  for (int i = 1; i <= p.strands() - 1; ++i) images.emplace(sigma(i), rep.image(sigma(i)));
  return Representation<S>(build_presentation(Structure::B, p.strands()), rep.ring(), rep.dim(), std::move(images),
                           rep.label().empty() ? "" : rep.label() + "|B");
}

// For the sigma block [[0, b], [c, 0]] of zeta'1..4, the degree-n braid
// restriction is irreducible iff bc != 1. The criterion is quoted, not
// recomputed here.
template <Scalar S>
struct BraidCriterion {
  S b;
  S c;
  S bc;
  bool bc_is_one = false;
  bool irreducible_by_criterion = false;
};

template <Scalar S>
BraidCriterion<S> braid_irreducibility_criterion(const Representation<S>& rep) {
  const auto& m = rep.image(sigma(1));
  if (!m(0, 0).is_zero() || !m(1, 1).is_zero())
    throw Unsupported("braid criterion applies only to sigma blocks of the form [[0, b], [c, 0]]");
  BraidCriterion<S> out{m(0, 1), m(1, 0), m(0, 1) * m(1, 0)};
  out.bc_is_one = (out.bc - rep.ring().one()).is_zero();
  out.irreducible_by_criterion = !out.bc_is_one;
  return out;
}

}  // namespace tvbrep
