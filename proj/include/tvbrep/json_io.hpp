#pragma once

#include <json.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tvbrep/audit.hpp"
#include "tvbrep/classifier.hpp"
#include "tvbrep/phi_extensions.hpp"
#include "tvbrep/structure_analysis.hpp"

namespace tvbrep {

using json = nlohmann::json;

inline std::string ring_descriptor(const RationalField&) { return "Q"; }
template <bool L>
std::string ring_descriptor(const PolynomialRing<L>& r) {
  return r.name();
}
inline std::string ring_descriptor(const RationalFunctionField& r) { return r.name(); }

// Calls f(ring) with the ring named by a descriptor, typed by its scalar.
template <class F>
decltype(auto) with_ring(const std::string& descriptor, F&& f) {
  auto d = RingDescriptor::parse(descriptor);
  switch (d.kind) {
    case RingKind::rational: return f(RationalField{});
    case RingKind::polynomial: return f(PolynomialRing<false>{d.vars});
    case RingKind::laurent: return f(PolynomialRing<true>{d.vars});
    case RingKind::rational_function: return f(RationalFunctionField{d.vars});
  }
  throw ParseError("unknown ring descriptor '" + descriptor + "'");
}

template <Scalar S>
json entries_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar S>
json matrix_to_json(const Matrix<S>& m) {
  return {{"ring", ring_descriptor(m.ring())}, {"dim", m.dim()}, {"entries", entries_to_json(m)}};
}

template <Scalar S>
Matrix<S> entries_from_json(const json& rows, const typename S::ring_type& ring, std::size_t dim) {
  if (!rows.is_array() || rows.size() != dim) throw ParseError("matrix must have " + std::to_string(dim) + " rows");
  Matrix<S> m(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw ParseError("matrix row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) {
      if (!rows[i][j].is_string()) throw ParseError("matrix entries must be strings");
      m(i, j) = parse_scalar(ring, rows[i][j].get<std::string>());
    }
  }
  return m;
}

template <Scalar S>
Matrix<S> matrix_from_json(const json& j, const typename S::ring_type& ring) {
  if (j.at("ring").get<std::string>() != ring_descriptor(ring))
    throw RingMismatch("matrix ring " + j.at("ring").get<std::string>() + " differs from " + ring_descriptor(ring));
  return entries_from_json<S>(j.at("entries"), ring, j.at("dim").get<std::size_t>());
}

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back(l.to_string());
  return out;
}

inline Word word_from_json(const json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  if (!j.is_array()) throw ParseError("a word is an array of letters like \"sigma:1^1\"");
  Word w;
  for (const auto& l : j) w.push_back(Letter::parse(l.get<std::string>()));
  return w;
}

inline json presentation_to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators()) gens.push_back(g.to_string());
  json rels = json::array();
  for (const auto& r : p.relations())
    rels.push_back({{"tag", r.tag}, {"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}});
  json monoid = json::array();
  for (auto f : p.monoid_families()) monoid.push_back(family_name(f));
  return {{"structure", structure_name(p.structure())},
          {"n", p.strands()},
          {"generators", gens},
          {"relations", rels},
          {"monoid_families", monoid}};
}

// Accepts a bare descriptor {"structure", "n"} or a full serialization, whose
// relation list must agree with the built presentation.
inline Presentation presentation_from_json(const json& j) {
  auto p = build_presentation(parse_structure(j.at("structure").get<std::string>()), j.at("n").get<int>());
  if (j.contains("relations")) {
    const auto& rels = j.at("relations");
    bool same = rels.size() == p.relations().size();
    for (std::size_t i = 0; same && i < rels.size(); ++i) {
      const auto& r = p.relations()[i];
      same = rels[i].at("tag").get<std::string>() == r.tag && word_from_json(rels[i].at("lhs")) == r.lhs &&
             word_from_json(rels[i].at("rhs")) == r.rhs;
    }
    if (!same) throw ParseError("relation list does not match " + p.name());
  }
  return p;
}

template <Scalar S>
json representation_to_json(const Representation<S>& rep) {
  json images = json::object();
  for (const auto& [g, m] : rep.images()) images[g.to_string()] = entries_to_json(m);
  json out = {{"structure", structure_name(rep.presentation().structure())},
              {"n", rep.presentation().strands()},
              {"ring", ring_descriptor(rep.ring())},
              {"dim", rep.dim()},
              {"images", images}};
  if (!rep.label().empty()) out["label"] = rep.label();
  return out;
}

template <Scalar S>
Representation<S> representation_from_json(const json& j, const typename S::ring_type& ring) {
  auto p = build_presentation(parse_structure(j.at("structure").get<std::string>()), j.at("n").get<int>());
  auto dim = j.at("dim").get<std::size_t>();
  typename Representation<S>::Images images;
  for (const auto& [name, rows] : j.at("images").items())
    images.emplace(Generator::parse(name), entries_from_json<S>(rows, ring, dim));
  return Representation<S>(std::move(p), ring, dim, std::move(images), j.value("label", ""));
}

template <Scalar S>
json relation_report_to_json(const RelationReport<S>& report) {
  json out = json::array();
  for (const auto& r : report.results) {
    json e = {{"tag", r.relation.tag},
              {"lhs", word_to_json(r.relation.lhs)},
              {"rhs", word_to_json(r.relation.rhs)},
              {"status", r.passed ? "pass" : "fail"}};
    if (r.difference) e["difference"] = matrix_to_json(*r.difference);
    out.push_back(std::move(e));
  }
  return out;
}

template <Scalar S>
json bindings_to_json(const Bindings<S>& b) {
  json out = json::object();
  for (const auto& [k, v] : b) out[k] = v.to_string();
  return out;
}

template <Scalar S>
Bindings<S> bindings_from_json(const json& j, const typename S::ring_type& ring) {
  Bindings<S> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, parse_scalar(ring, v.template get<std::string>()));
  return out;
}

inline json system_to_json(const PolynomialSystem& sys) {
  json eqs = json::array();
  for (const auto& e : sys.equations) eqs.push_back({{"polynomial", e.polynomial.to_string()}, {"provenance", e.provenance}});
  return {{"structure", structure_name(sys.structure) + "_2"},
          {"unknowns", sys.unknowns.names()},
          {"raw_nonzero_entries", sys.raw_entry_count},
          {"equations", eqs}};
}

inline PolynomialSystem system_from_json(const json& j) {
  PolynomialSystem sys;
  std::string st = j.at("structure").get<std::string>();
  sys.structure = parse_structure(st.substr(0, st.find('_')));
  sys.unknowns = Variables(j.at("unknowns").get<std::vector<std::string>>());
  sys.raw_entry_count = j.value("raw_nonzero_entries", std::size_t{0});
  for (const auto& e : j.at("equations"))
    sys.equations.push_back(
        {MultiPoly::parse(sys.unknowns, e.at("polynomial").get<std::string>()), e.at("provenance").get<std::string>()});
  return sys;
}

inline json family_match_to_json(const std::optional<FamilyMatch>& m) {
  if (!m) return {{"family", nullptr}, {"bindings", json::object()}, {"all_matches", json::array()}};
  json out = {{"family", m->family},
              {"bindings", bindings_to_json(m->bindings)},
              {"residual", m->residual},
              {"all_matches", m->all_matches}};
  if (!m->notes.empty()) out["notes"] = m->notes;
  return out;
}

inline std::optional<FamilyMatch> family_match_from_json(const json& j) {
  if (j.at("family").is_null()) return std::nullopt;
  FamilyMatch m;
  m.family = j.at("family").get<std::string>();
  m.bindings = bindings_from_json<Rational>(j.at("bindings"), RationalField{});
  m.residual = j.value("residual", false);
  m.all_matches = j.at("all_matches").get<std::vector<std::string>>();
  if (j.contains("notes")) m.notes = j.at("notes").get<std::vector<std::string>>();
  return m;
}

template <Scalar S>
json witness_to_json(const WitnessReport<S>& w) {
  json out = {{"word_a", word_to_json(w.word_a)}, {"word_b", word_to_json(w.word_b)}, {"images_equal", w.images_equal}};
  if (w.image_a) out["image_a"] = matrix_to_json(*w.image_a);
  if (w.image_b) out["image_b"] = matrix_to_json(*w.image_b);
  if (w.separating_rep)
    out["separating_rep"] = {{"family", w.separating_rep->family},
                             {"bindings", bindings_to_json(w.separating_rep->bindings)}};
  else
    out["separating_rep"] = nullptr;
  out["searched"] = w.searched;
  return out;
}

template <FieldScalar S>
json line_to_json(const Line<S>& l) {
  json dir = json::array();
  for (const auto& x : l.direction()) dir.push_back(x.to_string());
  return {{"direction", dir}, {"text", l.to_string()}};
}

template <FieldScalar S>
json reducibility_to_json(const ReducibilityReport<S>& r, const std::string& theorem_tag = "") {
  json blocks = json::array();
  for (const auto& b : r.block_factors) blocks.push_back(matrix_to_json(b));
  json lines = json::array();
  for (const auto& l : r.common_lines) lines.push_back(line_to_json(l));
  json out = {{"preserved_last_axis", r.preserved_last_axis},
              {"block_factors", blocks},
              {"line_search_done", r.line_search_done},
              {"all_lines", r.all_lines},
              {"common_lines", lines}};
  auto line = r.common_line();
  out["common_line"] = line ? line_to_json(*line) : json(nullptr);
  if (!theorem_tag.empty()) out["theorem"] = theorem_tag;
  return out;
}

template <FieldScalar S>
json phi_match_to_json(const PhiMatch<S>& m) {
  json out = {{"status", match_status_name(m.status)},
              {"rank", m.rank},
              {"augmented_rank", m.augmented_rank},
              {"round_trip", m.round_trip},
              {"matches_closed_form", m.matches_closed_form}};
  if (m.coefficients)
    out["coefficients"] = {{"t", m.coefficients->t.to_string()},
                           {"u", m.coefficients->u.to_string()},
                           {"v", m.coefficients->v.to_string()}};
  else
    out["coefficients"] = nullptr;
  return out;
}

inline json audit_to_json(const AuditSummary& a) {
  json entries = json::array();
  for (const auto& e : a.entries)
    entries.push_back({{"theorem_tag", e.theorem_tag},
                       {"claim_summary", e.claim_summary},
                       {"verdict", verdict_name(e.verdict)},
                       {"details", e.details}});
  return {{"entries", entries}};
}

inline AuditSummary audit_from_json(const json& j) {
  AuditSummary a;
  for (const auto& e : j.at("entries"))
    a.entries.push_back({e.at("theorem_tag").get<std::string>(), e.at("claim_summary").get<std::string>(),
                         parse_verdict(e.at("verdict").get<std::string>()),
                         e.at("details").get<std::vector<std::string>>()});
  return a;
}

// Indented JSON text with arrays of plain values kept on one line, so matrix
// rows stay readable.
inline void write_json(std::ostream& os, const json& j, int indent = 0) {
  auto pad = [&](int k) { os << std::string(static_cast<std::size_t>(k), ' '); };
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& e) { return e.is_primitive(); });
  };
  if (j.is_array()) {
    if (j.empty() || flat(j)) {
      os << j.dump();
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      pad(indent + 2);
      write_json(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    pad(indent);
    os << "]";
  } else if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      pad(indent + 2);
      os << json(k).dump() << ": ";
      write_json(os, v, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    pad(indent);
    os << "}";
  } else {
    os << j.dump();
  }
}

inline std::string json_text(const json& j) {
  std::ostringstream os;
  write_json(os, j);
  return os.str();
}

}  // namespace tvbrep
