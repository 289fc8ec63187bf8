#include <catch_amalgamated.hpp>

#include "tvbrep/tvbrep.hpp"

using namespace tvbrep;

namespace {

RationalField Q;

Line<Rational> line(long a, long b, long c = 1) { return Line<Rational>::through({Rational(a), Rational(b, c)}); }

}  // namespace

TEST_CASE("zeta1 identifies sigma1 rho1 with rho1 sigma1", "[witness]") {
  auto def = family_definition("zeta1");
  auto rep = symbolic(def);
  auto w = equal_image_witness(rep, word({sigma(1), rho(1)}), word({rho(1), sigma(1)}));
  CHECK(w.images_equal);
  auto F = def.ring();
  auto b = F.variable("b"), d = F.variable("d"), x = F.variable("x");
  REQUIRE(w.image_a.has_value());
  CHECK(w.image_a->leading_block(2) == mat2(F, b / x, d * x, d / x, b / x));
  CHECK(*w.image_a == *w.image_b);
}

TEST_CASE("zeta2 images of sigma1 and rho1 commute", "[witness]") {
  // zeta2(sigma1) = (d + bw/x) I + (b/x) zeta2(rho1) on the block, so zeta2 cannot separate the zeta1 pair.
  auto def = family_definition("zeta2");
  auto F = def.ring();
  auto rep = symbolic(def);
  auto b = F.variable("b"), d = F.variable("d"), w = F.variable("w"), x = F.variable("x");
  auto s = rep.image(sigma(1)).leading_block(2);
  auto r = rep.image(rho(1)).leading_block(2);
  CHECK(s == (d + b * w / x) * Matrix<RationalFunction>::identity(F, 2) + (b / x) * r);
  CHECK(equal_image_witness(rep, word({sigma(1), rho(1)}), word({rho(1), sigma(1)})).images_equal);

  // The point w=0, x=1, b=1, d=1 makes the sigma1 block singular.
  try {
    (void)rep_zeta(2, {{"b", Rational(1)}, {"d", Rational(1)}, {"w", Rational(0)}, {"x", Rational(1)}});
    FAIL("singular zeta2 point accepted");
  } catch (const ConstraintViolation& e) {
    CHECK(std::string(e.what()).find("det sigma_1 block") != std::string::npos);
  }
}

TEST_CASE("separating search over the catalog", "[witness]") {
  auto w = equal_image_witness(symbolic(family_definition("zeta1")), word({sigma(1), rho(1)}), word({rho(1), sigma(1)}));
  search_separating(w, zeta_ids(), 2, 1, 20);
  CHECK_FALSE(w.separating_rep.has_value());
  CHECK(w.searched == zeta_ids());

  // gamma1 against the empty word: zeta3 identifies them, zeta1 separates them
  auto k = equal_image_witness(symbolic(family_definition("zeta3")), word({gamma(1)}), Word{});
  CHECK(k.images_equal);
  search_separating(k, {"zeta4", "zeta1"}, 2, 1, 20);
  REQUIRE(k.separating_rep.has_value());
  CHECK(k.separating_rep->family == "zeta1");
  CHECK_FALSE(k.separating_rep->bindings.empty());
  auto sep = rep_zeta(1, k.separating_rep->bindings);
  CHECK_FALSE(evaluate(sep, word({gamma(1)})).is_identity());
}

TEST_CASE("zeta'1 identifies the gamma-conjugated sigma1 words", "[witness]") {
  for (const char* id : {"zetap1", "zetap2"}) {
    auto rep = symbolic(family_definition(id, 3));
    auto w = equal_image_witness(rep, word({gamma(1), sigma(1), gamma(2)}), word({gamma(2), sigma(1), gamma(1)}));
    CHECK(w.images_equal);
  }
}

TEST_CASE("kernel generators", "[witness]") {
  CHECK(kernel_generators(symbolic(family_definition("zeta3"))) == std::vector<Generator>{gamma(1), gamma(2)});
  CHECK(kernel_generators(symbolic(family_definition("zetap5", 4))) ==
        std::vector<Generator>{sigma(1), sigma(2), sigma(3)});
  CHECK(kernel_generators(symbolic(family_definition("zeta1"))).empty());
  CHECK(kernel_generators(rep_zeta(1, {{"b", Rational(3)}, {"d", Rational(-1)}, {"x", Rational(2)}})).empty());
  CHECK(kernel_generators(symbolic(family_definition("eta7"))) == std::vector<Generator>{gamma(1), gamma(2)});
}

TEST_CASE("designated unfaithfulness witnesses", "[witness]") {
  auto z1 = unfaithfulness_audit("zeta1", symbolic(family_definition("zeta1")));
  CHECK(z1.word_a == word({sigma(1), rho(1)}));
  CHECK(z1.word_b == word({rho(1), sigma(1)}));
  CHECK(z1.images_equal);

  auto e7 = unfaithfulness_audit("eta7", symbolic(family_definition("eta7")));
  CHECK(e7.word_a == word({gamma(1)}));
  CHECK(e7.word_b.empty());
  CHECK(e7.images_equal);

  auto p2 = unfaithfulness_audit("zetap2", symbolic(family_definition("zetap2", 3)));
  CHECK(p2.word_a == word({gamma(1), sigma(1), gamma(2)}));
  CHECK(p2.images_equal);

  for (const auto& id : zeta_ids()) CHECK(unfaithfulness_audit(id, symbolic(family_definition(id))).images_equal);
  for (const auto& id : eta_ids()) CHECK(unfaithfulness_audit(id, symbolic(family_definition(id))).images_equal);
  for (const auto& id : zeta_prime_ids())
    CHECK(unfaithfulness_audit(id, symbolic(family_definition(id, 3))).images_equal);
}

TEST_CASE("reducibility at the documented points", "[reduce]") {
  auto z1 = reducibility_audit(rep_zeta(1, {{"b", Rational(1)}, {"d", Rational(2)}, {"x", Rational(1)}}));
  CHECK(z1.preserved_last_axis);
  CHECK(z1.line_search_done);
  CHECK_FALSE(z1.common_line().has_value());
  CHECK(z1.block_factors.size() == 4);

  auto z3 = reducibility_audit(rep_zeta(3, {{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(5)}, {"d", Rational(2)}}));
  REQUIRE(z3.common_line().has_value());
  CHECK(*z3.common_line() == line(0, 1));
  for (const auto& m : z3.block_factors) CHECK(z3.common_line()->invariant_under(m));

  auto z5 = reducibility_audit(rep_zeta(5, {{"a", Rational(1)}, {"c", Rational(3)}, {"d", Rational(2)}}));
  REQUIRE(z5.common_line().has_value());
  CHECK(*z5.common_line() == line(0, 1));
}

TEST_CASE("reducibility beyond the stated conditions", "[reduce]") {
  // zeta2 always fixes the line (x, 1 - w)
  auto z2 = reducibility_audit(rep_zeta(2, {{"b", Rational(1)}, {"d", Rational(2)}, {"w", Rational(1, 2)}, {"x", Rational(3)}}));
  REQUIRE(z2.common_line().has_value());
  CHECK(*z2.common_line() == line(1, 1, 6));

  // zeta4 with b != 0 but rational eigenvalues 7/3, -7/3
  auto z4 = reducibility_audit(
      rep_zeta(4, {{"a", Rational(1)}, {"b", Rational(4, 3)}, {"c", Rational(10, 3)}, {"d", Rational(-1)}}));
  REQUIRE(z4.common_lines.size() == 2);
  CHECK(std::find(z4.common_lines.begin(), z4.common_lines.end(), line(1, 1)) != z4.common_lines.end());
  CHECK(std::find(z4.common_lines.begin(), z4.common_lines.end(), line(1, -5, 2)) != z4.common_lines.end());

  // b = 0, a = d, c != 0: a Jordan block, still reducible
  auto edge = reducibility_audit(rep_zeta(3, {{"a", Rational(2)}, {"b", Rational(0)}, {"c", Rational(1)}, {"d", Rational(2)}}));
  REQUIRE(edge.common_line().has_value());
  CHECK(*edge.common_line() == line(0, 1));

  // irrational eigenvalues: no rational line
  auto irr = reducibility_audit(rep_zeta(3, {{"a", Rational(0)}, {"b", Rational(2)}, {"c", Rational(1)}, {"d", Rational(0)}}));
  CHECK_FALSE(irr.common_line().has_value());
}

TEST_CASE("the last axis is preserved by every family", "[reduce]") {
  for (const auto& id : zeta_ids()) CHECK(reducibility_audit(symbolic(family_definition(id))).preserved_last_axis);
  for (const auto& id : eta_ids()) CHECK(reducibility_audit(symbolic(family_definition(id))).preserved_last_axis);
  for (const auto& id : zeta_prime_ids()) {
    auto r = reducibility_audit(symbolic(family_definition(id, 4)));
    CHECK(r.preserved_last_axis);
    CHECK_FALSE(r.line_search_done);
    CHECK(r.block_factors.front().dim() == 4);
  }
  Representation<Rational> small(build_presentation(Structure::B, 2), Q, 2,
                                 {{sigma(1), mat2(Q, Rational(1), Rational(1), Rational(0), Rational(1))}});
  CHECK_THROWS_AS(reducibility_audit(small), Unsupported);
}

TEST_CASE("restriction to the braid group", "[reduce]") {
  auto r = restriction_to_braid(rep_zeta_prime(1, 3, {{"c", Rational(2)}, {"s", Rational(3)}}));
  CHECK(r.presentation().name() == "B_3");
  CHECK(r.dim() == 4);
  CHECK(r.image(sigma(1)).leading_block(2) == mat2(Q, Rational(0), Rational(18), Rational(2), Rational(0)));
  CHECK(check_relations(r).all_passed());

  auto trivial = restriction_to_braid(rep_zeta_prime(7, 4, {}));
  for (const auto& g : trivial.presentation().generators()) CHECK(trivial.image(g).is_identity());
}

TEST_CASE("braid irreducibility criterion", "[reduce]") {
  auto generic = braid_irreducibility_criterion(rep_zeta_prime(3, 3, {{"c", Rational(2)}, {"s", Rational(3)}}));
  CHECK(generic.bc == Rational(36));
  CHECK_FALSE(generic.bc_is_one);
  CHECK(generic.irreducible_by_criterion);

  auto boundary = braid_irreducibility_criterion(rep_zeta_prime(3, 3, {{"c", Rational(1, 2)}, {"s", Rational(2)}}));
  CHECK(boundary.bc == Rational(1));
  CHECK(boundary.bc_is_one);
  CHECK_FALSE(boundary.irreducible_by_criterion);

  CHECK_THROWS_AS(braid_irreducibility_criterion(rep_zeta_prime(5, 3, {{"x", Rational(2)}})), Unsupported);
}

TEST_CASE("witness and reducibility JSON", "[json]") {
  auto w = unfaithfulness_audit("zeta1", rep_zeta(1, {{"b", Rational(1)}, {"d", Rational(2)}, {"x", Rational(1)}}));
  auto j = json::parse(json_text(witness_to_json(w)));
  CHECK(j["images_equal"] == true);
  CHECK(word_from_json(j["word_a"]) == w.word_a);
  CHECK(word_from_json(j["word_b"]) == w.word_b);

  auto r = reducibility_audit(rep_zeta(3, {{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(5)}, {"d", Rational(2)}}));
  auto rj = json::parse(json_text(reducibility_to_json(r, "3.3.ii")));
  CHECK(rj["preserved_last_axis"] == true);
  CHECK(rj["theorem"] == "3.3.ii");
  CHECK(rj["common_line"]["direction"] == json::array({"0", "1"}));
}
