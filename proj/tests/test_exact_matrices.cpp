#include <catch_amalgamated.hpp>

#include "tvbrep/tvbrep.hpp"

using namespace tvbrep;

namespace {

RationalField Q;

Matrix<Rational> q2(long a, long b, long c, long d) {
  return mat2(Q, Rational(a), Rational(b), Rational(c), Rational(d));
}

RationalFunctionField bdx{Variables({"b", "d", "x"})};

}  // namespace

TEST_CASE("products of zeta1 images", "[matrix]") {
  auto rep = rep_zeta(1, {{"b", Rational(1)}, {"d", Rational(2)}, {"x", Rational(1)}});
  auto prod = rep.image(sigma(1)) * rep.image(rho(1));
  CHECK(prod.leading_block(2) == q2(1, 2, 2, 1));
  CHECK(prod(2, 2) == Rational(1));
  CHECK(prod(0, 2).is_zero());
  CHECK(prod(2, 0).is_zero());
  auto id = Matrix<Rational>::identity(Q, 3);
  CHECK(id * prod == prod);
  CHECK(prod * id == prod);
}

TEST_CASE("Burau block squared", "[matrix]") {
  PolynomialRing<true> L{Variables({"t"})};
  auto t = L.variable("t"), one = L.one();
  auto B = mat2(L, one - t, t, one, L.zero());
  auto expected = mat2(L, (one - t) * (one - t) + t, (one - t) * t, one - t, t);
  CHECK(B * B == expected);
  CHECK(determinant(B) == -t);
  CHECK(determinant(B).is_unit());
  CHECK(inverse(B) * B == Matrix<Laurent>::identity(L, 2));
}

TEST_CASE("determinants", "[matrix]") {
  auto b = bdx.variable("b"), d = bdx.variable("d"), x = bdx.variable("x");
  auto block = mat2(bdx, d, b, b / (x * x), d);
  CHECK(determinant(block) == d * d - b * b / (x * x));
  CHECK(determinant(Matrix<Rational>::identity(Q, 3)) == Rational(1));
  auto m = Matrix<Rational>::from_rows(Q, {{Rational(2), Rational(0), Rational(1)},
                                          {Rational(1), Rational(3), Rational(2)},
                                          {Rational(1), Rational(1), Rational(2)}});
  CHECK(determinant(m) == Rational(6));
  CHECK(determinant(q2(1, 2, 2, 4)).is_zero());
}

TEST_CASE("symbolic inverse of zeta1(sigma1)", "[matrix]") {
  auto b = bdx.variable("b"), d = bdx.variable("d"), x = bdx.variable("x");
  auto sigma1 = symbolic(family_definition("zeta1")).image(sigma(1));
  auto inv = inverse(sigma1);
  auto k = bdx.one() / (d * d - b * b / (x * x));
  CHECK(inv.leading_block(2) == k * mat2(bdx, d, -b, -(b / (x * x)), d));
  CHECK(inv(2, 2) == bdx.one());
  CHECK(inv * sigma1 == Matrix<RationalFunction>::identity(bdx, 3));
  CHECK(inverse(Matrix<Rational>::identity(Q, 4)) == Matrix<Rational>::identity(Q, 4));
}

TEST_CASE("singular matrices have no inverse", "[matrix]") {
  auto def = family_definition("eta5");
  // f=g=h=k=0 zeroes the tau block; only the corner 1 survives.
  auto rep = instantiate(def, Bindings<Rational>{{"a", Rational(2)}, {"f", Rational(0)}, {"g", Rational(0)},
                                                 {"h", Rational(0)}, {"k", Rational(0)}},
                         Q);
  try {
    (void)inverse(rep.image(tau(1)));
    FAIL("singular tau block was inverted");
  } catch (const SingularMatrix& e) {
    CHECK(std::string(e.what()).find("determinant") != std::string::npos);
  }
  PolynomialRing<false> R{Variables({"x"})};
  auto x = R.variable("x");
  CHECK_THROWS_AS(inverse(mat2(R, x, R.zero(), R.zero(), R.one())), NotAUnit);
}

TEST_CASE("block embedding", "[matrix]") {
  RationalFunctionField F{Variables({"x"})};
  auto x = F.variable("x");
  auto block = mat2(F, F.zero(), x, F.one() / x, F.zero());
  auto m = block_embed(block, 2, 4);
  CHECK(m(0, 0) == F.one());
  CHECK(m(1, 2) == x);
  CHECK(m(2, 1) == F.one() / x);
  CHECK(m(1, 1).is_zero());
  CHECK(m(3, 3) == F.one());
  // the rho2 image of zeta'5 at n = 3 has exactly this shape
  CHECK(symbolic(family_definition("zetap5", 3)).image(rho(2)) == m);

  for (std::size_t pos = 1; pos <= 3; ++pos)
    CHECK(block_embed(Matrix<Rational>::identity(Q, 2), pos, 4) == Matrix<Rational>::identity(Q, 4));
  CHECK_THROWS_AS(block_embed(q2(1, 2, 3, 4), 4, 4), DimensionMismatch);
  CHECK_THROWS_AS(block_embed(q2(1, 2, 3, 4), 0, 4), DimensionMismatch);
}

TEST_CASE("dimension and ring checks", "[matrix]") {
  auto a = Matrix<Rational>::identity(Q, 2);
  auto b = Matrix<Rational>::identity(Q, 3);
  CHECK_THROWS_AS(a * b, DimensionMismatch);
  CHECK_THROWS_AS(a + b, DimensionMismatch);
  PolynomialRing<false> R1{Variables({"x"})}, R2{Variables({"y"})};
  CHECK_THROWS_AS(Matrix<MultiPoly>::identity(R1, 2) * Matrix<MultiPoly>::identity(R2, 2), RingMismatch);
}

TEST_CASE("invariant lines of a single 2x2 matrix", "[matrix][lines]") {
  // zeta1's sigma block at b=1, d=2, x=1
  auto lines = invariant_lines(q2(2, 1, 1, 2));
  CHECK_FALSE(lines.all_lines);
  REQUIRE(lines.lines.size() == 2);
  auto p = Line<Rational>::through({Rational(1), Rational(1)});
  auto m = Line<Rational>::through({Rational(1), Rational(-1)});
  CHECK(((lines.lines[0] == p && lines.lines[1] == m) || (lines.lines[0] == m && lines.lines[1] == p)));

  CHECK(invariant_lines(Matrix<Rational>::identity(Q, 2)).all_lines);

  auto jordan = invariant_lines(q2(1, 1, 0, 1));
  REQUIRE(jordan.lines.size() == 1);
  CHECK(jordan.lines[0] == Line<Rational>::through({Rational(1), Rational(0)}));

  // irrational eigenvalues: no line over Q
  CHECK(invariant_lines(q2(0, 2, 1, 0)).lines.empty());
  // rotation: no real line at all
  CHECK(invariant_lines(q2(0, -1, 1, 0)).lines.empty());
}

TEST_CASE("lines are compared as subspaces", "[matrix][lines]") {
  CHECK(Line<Rational>::through({Rational(2), Rational(-2)}) == Line<Rational>::through({Rational(-1), Rational(1)}));
  CHECK_FALSE(Line<Rational>::through({Rational(1), Rational(2)}) == Line<Rational>::through({Rational(2), Rational(1)}));
  CHECK_THROWS(Line<Rational>::through({Rational(0), Rational(0)}));
}

TEST_CASE("common invariant lines", "[matrix][lines]") {
  // zeta3 blocks at a=1, b=0, c=5, d=2 with rho block -I
  auto sigma_block = q2(1, 0, 5, 2);
  auto rho_block = q2(-1, 0, 0, -1);
  auto line = common_invariant_line<Rational>({sigma_block, rho_block, Matrix<Rational>::identity(Q, 2)}, Q);
  REQUIRE(line.has_value());
  CHECK(*line == Line<Rational>::through({Rational(0), Rational(1)}));

  // zeta1 at b=1, d=2, x=1 with the gamma blocks
  auto none = common_invariant_line<Rational>({q2(2, 1, 1, 2), q2(0, 1, 1, 0), q2(-1, 0, 0, 1), q2(1, 0, 0, -1)}, Q);
  CHECK_FALSE(none.has_value());

  auto vacuous = common_invariant_line<Rational>({}, Q);
  REQUIRE(vacuous.has_value());
  CHECK(*vacuous == Line<Rational>::through({Rational(1), Rational(0)}));
}

TEST_CASE("symbolic invariant lines use exact square roots", "[matrix][lines]") {
  RationalFunctionField F{Variables({"x"})};
  auto x = F.variable("x");
  // [[0, x], [1/x, 0]] swaps (x, 1) and (-x, 1) up to sign
  auto lines = invariant_lines(mat2(F, F.zero(), x, F.one() / x, F.zero()));
  REQUIRE(lines.lines.size() == 2);
  for (const auto& l : lines.lines) CHECK(l.invariant_under(mat2(F, F.zero(), x, F.one() / x, F.zero())));
  CHECK(std::find(lines.lines.begin(), lines.lines.end(), Line<RationalFunction>::through({x, F.one()})) !=
        lines.lines.end());
}
