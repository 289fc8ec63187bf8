#include <catch_amalgamated.hpp>

#include "tvbrep/tvbrep.hpp"

using namespace tvbrep;

namespace {

std::vector<std::string> tags(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relations()) out.push_back(r.tag);
  return out;
}

bool has_relation(const Presentation& p, const std::string& tag, const Word& lhs, const Word& rhs) {
  for (const auto& r : p.relations())
    if (r.tag == tag && r.lhs == lhs && r.rhs == rhs) return true;
  return false;
}

}  // namespace

TEST_CASE("TVB_2 generators and relations", "[presentation]") {
  auto p = build_presentation(Structure::TVB, 2);
  CHECK(p.name() == "TVB_2");
  CHECK(p.generators() == std::vector<Generator>{sigma(1), rho(1), gamma(1), gamma(2)});
  REQUIRE(p.relations().size() == 6);
  CHECK(has_relation(p, "2.3", word({rho(1), rho(1)}), {}));
  CHECK(has_relation(p, "2.8", word({gamma(1), gamma(1)}), {}));
  CHECK(has_relation(p, "2.8", word({gamma(2), gamma(2)}), {}));
  CHECK(has_relation(p, "2.9", word({gamma(1), gamma(2)}), word({gamma(2), gamma(1)})));
  CHECK(has_relation(p, "2.12", word({rho(1), gamma(1)}), word({gamma(2), rho(1)})));
  CHECK(has_relation(p, "2.13", word({rho(1), sigma(1), rho(1)}),
                     word({gamma(2), gamma(1), sigma(1), gamma(1), gamma(2)})));
  CHECK(p.monoid_families().empty());
}

TEST_CASE("STVB_2 adds the two tau relations", "[presentation]") {
  auto p = build_presentation(Structure::STVB, 2);
  REQUIRE(p.relations().size() == 8);
  CHECK(has_relation(p, "2.16", word({tau(1), sigma(1)}), word({sigma(1), tau(1)})));
  CHECK(has_relation(p, "2.22", word({rho(1), tau(1), rho(1)}),
                     word({gamma(2), gamma(1), tau(1), gamma(1), gamma(2)})));
  CHECK_FALSE(p.invertible(Family::tau));
  CHECK(p.invertible(Family::sigma));
}

TEST_CASE("relation counts", "[presentation]") {
  // frozen from instantiating every relation schema by hand
  CHECK(build_presentation(Structure::B, 2).relations().empty());
  CHECK(build_presentation(Structure::B, 2).generators().size() == 1);
  CHECK(build_presentation(Structure::B, 3).relations().size() == 1);
  CHECK(build_presentation(Structure::B, 4).relations().size() == 3);
  CHECK(build_presentation(Structure::VB, 3).relations().size() == 5);
  CHECK(build_presentation(Structure::TVB, 3).relations().size() == 17);
  CHECK(build_presentation(Structure::SM, 2).relations().size() == 1);
  CHECK(build_presentation(Structure::SB, 2).relations().size() == 4);
  CHECK(build_presentation(Structure::STVB, 3).relations().size() == 25);
  CHECK(build_presentation(Structure::STVG, 2).relations().size() == 12);
  CHECK_THROWS(build_presentation(Structure::B, 1));
}

TEST_CASE("TVB_3 relation tags", "[presentation]") {
  auto t = tags(build_presentation(Structure::TVB, 3));
  auto count = [&](const std::string& tag) { return std::count(t.begin(), t.end(), tag); };
  CHECK(count("2.1") == 1);
  CHECK(count("2.2") == 0);
  CHECK(count("2.3") == 2);
  CHECK(count("2.5") == 1);
  CHECK(count("2.6") == 0);
  CHECK(count("2.7") == 1);
  CHECK(count("2.8") == 3);
  CHECK(count("2.9") == 3);
  CHECK(count("2.10") == 1);
  CHECK(count("2.11") == 1);
  CHECK(count("2.12") == 2);
  CHECK(count("2.13") == 2);
}

TEST_CASE("STVG_2 pairs tau with tau_bar", "[presentation]") {
  auto p = build_presentation(Structure::STVG, 2);
  CHECK(p.has_generator(tau_bar(1)));
  CHECK(p.monoid_families().empty());
  CHECK(has_relation(p, "inv", word({tau(1), tau_bar(1)}), {}));
  CHECK(has_relation(p, "inv", word({tau_bar(1), tau(1)}), {}));
  CHECK(has_relation(p, "2.16bar", word({tau_bar(1), sigma(1)}), word({sigma(1), tau_bar(1)})));
}

TEST_CASE("free reduction", "[presentation][words]") {
  Word s{{sigma(1), 1}, {sigma(1), -1}};
  CHECK(free_reduce(s).empty());
  Word r{{rho(1), 1}, {rho(1), -1}, {rho(1), 1}};
  CHECK(free_reduce(r) == word({rho(1)}));
  CHECK(free_reduce(word({sigma(1), rho(1)})) == word({sigma(1), rho(1)}));
  Word nested{{sigma(1), 1}, {rho(1), 1}, {rho(1), -1}, {sigma(1), -1}, {gamma(1), 1}};
  CHECK(free_reduce(nested) == word({gamma(1)}));
}

TEST_CASE("word inversion", "[presentation][words]") {
  auto tvb = build_presentation(Structure::TVB, 2);
  CHECK(word_invert(word({sigma(1), rho(1)}), tvb) == Word{{rho(1), -1}, {sigma(1), -1}});
  CHECK(word_invert({}, tvb).empty());
  auto stvb = build_presentation(Structure::STVB, 2);
  try {
    (void)word_invert(word({tau(1)}), stvb);
    FAIL("tau1 was inverted in a monoid");
  } catch (const MonoidViolation& e) {
    CHECK(std::string(e.what()).find("no inverse in monoid") != std::string::npos);
  }
  auto stvg = build_presentation(Structure::STVG, 2);
  CHECK(word_invert(word({tau(1)}), stvg) == Word{{tau(1), -1}});
}

TEST_CASE("word validation", "[presentation][words]") {
  auto tvb = build_presentation(Structure::TVB, 2);
  CHECK_NOTHROW(tvb.validate(Word{{sigma(1), -1}, {gamma(2), 1}}));
  CHECK_THROWS_AS(tvb.validate(word({sigma(2)})), Error);
  CHECK_THROWS_AS(tvb.validate(word({tau(1)})), Error);
  auto stvb = build_presentation(Structure::STVB, 2);
  CHECK_THROWS_AS(stvb.validate(Word{{tau(1), -1}}), MonoidViolation);
}

TEST_CASE("generator and word text forms", "[presentation][words]") {
  CHECK(sigma(1).to_string() == "sigma:1");
  CHECK(Generator::parse("tau_bar:2") == tau_bar(2));
  CHECK_THROWS_AS(Generator::parse("sigma"), ParseError);
  CHECK_THROWS_AS(Generator::parse("omega:1"), ParseError);
  CHECK_THROWS_AS(Generator::parse("sigma:0"), ParseError);
  Word w{{sigma(1), 1}, {rho(1), -1}};
  CHECK(parse_word("sigma:1^1,rho:1^-1") == w);
  CHECK(parse_word("e").empty());
  CHECK(word_to_string(w) == "sigma:1^1 rho:1^-1");
  CHECK_THROWS_AS(parse_word("sigma:1^2"), ParseError);
}

TEST_CASE("structure names", "[presentation]") {
  for (auto s : {Structure::B, Structure::VB, Structure::TVB, Structure::SM, Structure::SB, Structure::STVB,
                 Structure::STVG})
    CHECK(parse_structure(structure_name(s)) == s);
  CHECK_THROWS_AS(parse_structure("XYZ"), ParseError);
}

TEST_CASE("presentation JSON round trip", "[presentation][json]") {
  for (auto s : {Structure::B, Structure::TVB, Structure::STVB, Structure::STVG})
    for (int n : {2, 3}) {
      auto p = build_presentation(s, n);
      auto j = presentation_to_json(p);
      auto back = presentation_from_json(json::parse(json_text(j)));
      CHECK(back.name() == p.name());
      CHECK(back.generators() == p.generators());
      CHECK(tags(back) == tags(p));
    }
  auto j = presentation_to_json(build_presentation(Structure::TVB, 2));
  CHECK(j["relations"][5]["tag"] == "2.13");
  CHECK(j["generators"][0] == "sigma:1");
  j["relations"].erase(0);
  CHECK_THROWS_AS(presentation_from_json(j), ParseError);
}
