// tvbrep: JSON front end to the library. Exit codes: 0 all pass, 1 a check
// failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tvbrep/tvbrep.hpp"

using namespace tvbrep;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

bool pretty = false;

void emit(const json& j) {
  write_json(std::cout, j);
  std::cout << "\n";
}

template <class Ring>
using scalar_of = decltype(std::declval<Ring>().zero());

// Binding lists like "b=1/2,d=3".
template <Scalar S>
Bindings<S> parse_bindings(const std::string& text, const typename S::ring_type& ring) {
  Bindings<S> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("binding '" + item + "' is not name=value");
    out.emplace(item.substr(0, eq), parse_scalar(ring, item.substr(eq + 1)));
  }
  return out;
}

template <Scalar S>
void print_report_table(const RelationReport<S>& r) {
  for (const auto& res : r.results)
    std::cout << std::left << std::setw(8) << res.relation.tag << std::setw(6) << (res.passed ? "pass" : "FAIL")
              << word_to_string(res.relation.lhs) << " = " << word_to_string(res.relation.rhs) << "\n";
  std::cout << r.passed_count() << "/" << r.results.size() << " relations hold\n";
}

int cmd_check(const std::string& pres_file, const std::string& rep_file) {
  auto pj = read_json(pres_file);
  auto rj = read_json(rep_file);
  auto p = presentation_from_json(pj);
  auto rep_structure = rj.at("structure").get<std::string>();
  auto rep_n = rj.at("n").get<int>();
  if (parse_structure(rep_structure) != p.structure() || rep_n != p.strands())
    throw ParseError("representation is for " + rep_structure + "_" + std::to_string(rep_n) + ", presentation is " +
                     p.name());
  return with_ring(rj.at("ring").get<std::string>(), [&](const auto& ring) {
    using S = scalar_of<std::decay_t<decltype(ring)>>;
    auto rep = representation_from_json<S>(rj, ring);
    auto report = check_relations(rep);
    if (pretty) print_report_table(report);
    else emit(relation_report_to_json(report));
    return report.all_passed() ? 0 : 1;
  });
}

int cmd_classify(const std::string& file) {
  auto rj = read_json(file);
  auto rep = representation_from_json<Rational>(rj, RationalField{});
  auto match = classify_solution(rep);
  json out = family_match_to_json(match);
  if (!match) out["failing_relations"] = check_relations(rep).failing_tags();
  if (pretty) {
    std::cout << "family: " << (match ? match->family : "none") << "\n";
    if (match) {
      for (const auto& [k, v] : match->bindings) std::cout << "  " << k << " = " << v << "\n";
      std::cout << "all matches:";
      for (const auto& m : match->all_matches) std::cout << " " << m;
      std::cout << "\n";
      for (const auto& n : match->notes) std::cout << "note: " << n << "\n";
    } else {
      std::cout << "failing relations:";
      for (const auto& t : out["failing_relations"]) std::cout << " " << t.get<std::string>();
      std::cout << "\n";
    }
  } else {
    emit(out);
  }
  return match ? 0 : 1;
}

template <class F>
int with_field_rep(const json& rj, F&& f) {
  return with_ring(rj.at("ring").get<std::string>(), [&](const auto& ring) -> int {
    using S = scalar_of<std::decay_t<decltype(ring)>>;
    if constexpr (FieldScalar<S>) {
      return f(representation_from_json<S>(rj, ring));
    } else {
      throw Unsupported("this command needs entries in Q or a rational function field, got " + ring.name());
    }
  });
}

int cmd_reduce(const std::string& file, const std::string& theorem) {
  auto rj = read_json(file);
  return with_field_rep(rj, [&](const auto& rep) {
    auto r = reducibility_audit(rep);
    auto j = reducibility_to_json(r, theorem);
    if (pretty) {
      std::cout << "last axis preserved: " << (r.preserved_last_axis ? "yes" : "no") << "\n";
      std::cout << "common line: " << (j["common_line"].is_null() ? "none" : j["common_line"]["text"].template get<std::string>())
                << "\n";
    } else {
      emit(j);
    }
    return 0;
  });
}

int cmd_witness(const std::string& file, const std::string& a, const std::string& b, const std::string& family,
                bool search, std::uint64_t seed) {
  auto rj = read_json(file);
  return with_ring(rj.at("ring").get<std::string>(), [&](const auto& ring) {
    using S = scalar_of<std::decay_t<decltype(ring)>>;
    auto rep = representation_from_json<S>(rj, ring);
    WitnessReport<S> w;
    if (!family.empty()) w = unfaithfulness_audit(family, rep);
    else w = equal_image_witness(rep, parse_word(a), parse_word(b));
    if (search && w.images_equal) {
      auto ids = zeta_ids();
      if (rep.presentation().strands() >= 3) {
        auto p = zeta_prime_ids();
        ids.insert(ids.end(), p.begin(), p.end());
      }
      search_separating(w, ids, rep.presentation().strands(), seed);
    }
    if (pretty) {
      std::cout << word_to_string(w.word_a) << " vs " << word_to_string(w.word_b) << ": "
                << (w.images_equal ? "equal images" : "different images") << "\n";
      if (w.separating_rep) std::cout << "separated by " << w.separating_rep->family << "\n";
    } else {
      emit(witness_to_json(w));
    }
    return 0;
  });
}

int cmd_phi_extend(const std::string& file, const std::string& t, const std::string& u, const std::string& v) {
  auto rj = read_json(file);
  return with_ring(rj.at("ring").get<std::string>(), [&](const auto& ring) {
    using S = scalar_of<std::decay_t<decltype(ring)>>;
    auto rep = representation_from_json<S>(rj, ring);
    PhiCoefficients<S> k{parse_scalar(ring, t), parse_scalar(ring, u), parse_scalar(ring, v)};
    emit(representation_to_json(phi_extend(rep, k)));
    return 0;
  });
}

int cmd_phi_match(const std::string& ring_name, const std::string& bindings) {
  return with_ring(ring_name, [&](const auto& ring) -> int {
    using S = scalar_of<std::decay_t<decltype(ring)>>;
    if constexpr (!FieldScalar<S>) {
      throw Unsupported("phi-match needs Q or a rational function field, got " + ring.name());
    } else {
      auto b = parse_bindings<S>(bindings, ring);
      auto get = [&](const char* name) {
        auto it = b.find(name);
        if (it != b.end()) return it->second;
        return ring_variable(ring, name);
      };
      auto m = solve_phi_match(get("b"), get("d"), get("x"), get("f"), get("g"), ring);
      auto j = phi_match_to_json(m);
      if (pretty) {
        std::cout << "status: " << j["status"].template get<std::string>() << " (rank " << m.rank << ", augmented "
                  << m.augmented_rank << ")\n";
        if (m.coefficients)
          std::cout << "t = " << m.coefficients->t << "\nu = " << m.coefficients->u << "\nv = " << m.coefficients->v
                    << "\n";
      } else {
        emit(j);
      }
      return m.status == MatchStatus::unique && m.round_trip ? 0 : 1;
    }
  });
}

int cmd_promote(const std::string& file) {
  auto rj = read_json(file);
  return with_field_rep(rj, [&](const auto& rep) {
    auto g = promote_to_group(rep);
    emit(representation_to_json(g));
    return 0;
  });
}

int cmd_gen_system(const std::string& structure, const std::string& substitution, const std::string& verify) {
  auto st = parse_structure(structure);
  if (st != Structure::TVB && st != Structure::STVB) throw Unsupported("gen-system covers TVB and STVB");
  auto sys = generate_system(st);
  if (!verify.empty()) {
    auto r = verify_family(sys, verify);
    json j = {{"family", verify}, {"all_vanish", r.all_vanish}, {"failing", r.failing}};
    emit(j);
    return r.all_vanish ? 0 : 1;
  }
  if (!substitution.empty()) {
    PolynomialRing<false> ring{sys.unknowns};
    sys = substitute_system(sys, parse_bindings<MultiPoly>(substitution, ring));
  }
  if (pretty) {
    for (const auto& e : sys.equations) std::cout << std::left << std::setw(14) << e.provenance << e.polynomial << "\n";
    std::cout << sys.equations.size() << " equations\n";
  } else {
    emit(system_to_json(sys));
  }
  return 0;
}

int cmd_audit(const AuditOptions& o) {
  auto a = run_audit(o);
  if (pretty) {
    for (const auto& e : a.entries) {
      std::cout << std::left << std::setw(6) << e.theorem_tag << std::setw(9) << verdict_name(e.verdict)
                << e.claim_summary << "\n";
      for (const auto& d : e.details) std::cout << "        " << d << "\n";
    }
  } else {
    emit(audit_to_json(a));
  }
  for (const auto& e : a.entries)
    if (e.verdict == Verdict::fail) return 1;
  return 0;
}

int cmd_catalog(const std::string& id, int n, const std::string& bindings, bool list) {
  if (list) {
    json ids = json::array();
    for (const auto& group : {zeta_ids(), zeta_prime_ids(), eta_ids()})
      for (const auto& i : group) ids.push_back(i);
    ids.push_back("burau");
    ids.push_back("lkb");
    emit(ids);
    return 0;
  }
  if (id == "burau") return emit(representation_to_json(rep_burau(n))), 0;
  if (id == "lkb") return emit(representation_to_json(rep_lkb(n))), 0;
  auto def = family_definition(id, id.rfind("zetap", 0) == 0 ? n : 2);
  if (bindings == "symbolic") {
    emit(representation_to_json(symbolic(def)));
    return 0;
  }
  auto rep = instantiate(def, parse_bindings<Rational>(bindings, RationalField{}), RationalField{});
  emit(representation_to_json(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact representations of twisted virtual braid structures"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

  std::string pres_file, rep_file;
  auto* check = app.add_subcommand("check", "check every defining relation of a representation");
  check->add_option("presentation", pres_file, "presentation JSON")->required();
  check->add_option("representation", rep_file, "representation JSON")->required();

  auto* classify = app.add_subcommand("classify", "match 3x3 local matrices against the catalog");
  classify->add_option("representation", rep_file, "representation JSON over Q")->required();

  std::string theorem;
  auto* reduce = app.add_subcommand("reduce", "last-axis and common-invariant-line analysis");
  reduce->add_option("representation", rep_file)->required();
  reduce->add_option("--theorem", theorem, "tag recorded in the report, e.g. 3.3.ii");

  std::string word_a, word_b, family;
  bool search = false;
  std::uint64_t seed = 1;
  auto* witness = app.add_subcommand("witness", "compare the images of two words");
  witness->add_option("representation", rep_file)->required();
  witness->add_option("--a", word_a, "first word, e.g. sigma:1^1,rho:1^1");
  witness->add_option("--b", word_b, "second word");
  witness->add_option("--family", family, "use the designated witness of this catalog family");
  witness->add_flag("--search", search, "look for a separating catalog family");
  witness->add_option("--seed", seed);

  std::string t = "t", u = "u", v = "v";
  auto* phi_ext = app.add_subcommand("phi-extend", "tau_i -> t sigma_i + u sigma_i^-1 + v I");
  phi_ext->add_option("representation", rep_file)->required();
  phi_ext->add_option("--t", t)->required();
  phi_ext->add_option("--u", u)->required();
  phi_ext->add_option("--v", v)->required();

  std::string ring_name = "Q(b,d,x,f,g)", bindings;
  auto* phi_match = app.add_subcommand("phi-match", "solve eta1(tau_1) = Phi(tau_1) for t, u, v");
  phi_match->add_option("--ring", ring_name, "scalar ring; unbound b,d,x,f,g stay symbolic");
  phi_match->add_option("--bind", bindings, "values like b=1,d=2,x=3,f=1/2,g=5");

  auto* promote = app.add_subcommand("promote", "STVB_n -> STVG_n with tau_bar = tau^-1");
  promote->add_option("representation", rep_file)->required();

  std::string structure = "TVB", substitution, verify;
  auto* gen = app.add_subcommand("gen-system", "polynomial system of the generic local ansatz");
  gen->add_option("--structure", structure, "TVB or STVB");
  gen->add_option("--substitute", substitution, "e.g. q=0,r=0,s=1");
  gen->add_option("--verify", verify, "check that a catalog family solves the system");

  AuditOptions audit_opts;
  auto* audit = app.add_subcommand("audit", "theorem-by-theorem reproduction report");
  audit->add_option("--seed", audit_opts.seed);
  audit->add_option("--samples", audit_opts.samples)->check(CLI::PositiveNumber);
  audit->add_option("--only", audit_opts.only, "theorem tags, e.g. 5.2");

  std::string family_id;
  int n = 3;
  bool list = false;
  auto* catalog = app.add_subcommand("catalog", "emit a catalog representation as JSON");
  catalog->add_option("family", family_id, "zeta1..8, zetap1..7, eta1..13, burau, lkb");
  catalog->add_option("--n", n, "strands for zetap, burau, lkb");
  std::string catalog_bindings = "symbolic";
  catalog->add_option("--bind", catalog_bindings, "parameter values, or 'symbolic'");
  catalog->add_flag("--list", list);

  int pn = 2;
  auto* pres = app.add_subcommand("presentation", "emit a presentation as JSON");
  pres->add_option("structure", structure, "B VB TVB SM SB STVB STVG")->required();
  pres->add_option("n", pn)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(pres_file, rep_file);
    if (*classify) return cmd_classify(rep_file);
    if (*reduce) return cmd_reduce(rep_file, theorem);
    if (*witness) {
      if (family.empty() && (word_a.empty() && word_b.empty()))
        throw ParseError("witness needs --a/--b or --family");
      return cmd_witness(rep_file, word_a, word_b, family, search, seed);
    }
    if (*phi_ext) return cmd_phi_extend(rep_file, t, u, v);
    if (*phi_match) return cmd_phi_match(ring_name, bindings);
    if (*promote) return cmd_promote(rep_file);
    if (*gen) return cmd_gen_system(structure, substitution, verify);
    if (*audit) return cmd_audit(audit_opts);
    if (*catalog) {
      if (!list && family_id.empty()) throw ParseError("catalog needs a family id or --list");
      return cmd_catalog(family_id, n, catalog_bindings, list);
    }
    if (*pres) {
      emit(presentation_to_json(build_presentation(parse_structure(structure), pn)));
      return 0;
    }
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
