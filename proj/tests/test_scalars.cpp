#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace drasp4;
using drasp4::testing::rand_nonzero_ratfunc;
using drasp4::testing::rand_poly;
using drasp4::testing::rand_ratfunc;

namespace {
const RatFunc ha = RatFunc::va();
const RatFunc hb = RatFunc::vb();
}  // namespace

TEST_CASE("gaussian rationals") {
  const GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  CHECK((GaussRat(1) + i).inverse() == GaussRat(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(GaussRat(3) - GaussRat(3) == GaussRat(0));
  CHECK((i - i).is_real());
  CHECK_THROWS_AS(GaussRat(0).inverse(), ScalarError);
  CHECK(GaussRat(mpq_class(-3, 2)).to_string() == "-3/2");
  CHECK((GaussRat(1) + i * GaussRat(2)).to_string() == "(1+2*i)");
  CHECK((-i).to_string() == "-i");
}

TEST_CASE("rational functions are stored in lowest terms with monic denominator") {
  const RatFunc f = (ha * ha - RatFunc(1)) / (RatFunc(2) * ha + RatFunc(2));
  CHECK(f == (ha - RatFunc(1)) / RatFunc(2));
  CHECK(f.den().is_constant());

  const RatFunc g = RatFunc(Poly2(3), Poly2::affine(2, 0, 4));
  CHECK(g.den() == Poly2::affine(1, 0, 2));
  CHECK(g.num() == Poly2(GaussRat(mpq_class(3, 2))));
  CHECK(g.to_string() == "(3/2)/(Ha+2)");

  CHECK_THROWS_AS(RatFunc(Poly2(1), Poly2(0)), ScalarError);
  CHECK_THROWS_AS(RatFunc(0).inverse(), ScalarError);
}

TEST_CASE("shift is a ring automorphism") {
  const RatFunc f = (ha + RatFunc(2)) / (hb * ha + RatFunc(1));
  CHECK(f.shifted(1, -1) == (ha + RatFunc(3)) / ((hb - RatFunc(1)) * (ha + RatFunc(1)) + RatFunc(1)));
  CHECK(rf_shift(rf_shift(f, {2, 3}), {-2, -3}) == f);
}

TEST_CASE("evaluation and poles") {
  const RatFunc f = (ha + RatFunc(1)) / (hb - RatFunc(2));
  CHECK(rf_eval(f, {GaussRat(1), GaussRat(3)}) == GaussRat(2));
  CHECK_THROWS_AS(rf_eval(f, {GaussRat(1), GaussRat(2)}), ScalarError);
}

TEST_CASE("limit at infinity reads leading forms") {
  CHECK(rf_limit_inf((hb + RatFunc(2)) / (hb + RatFunc(1))) == Limit{GaussRat(1)});
  CHECK(rf_limit_inf(RatFunc(1) / (ha + hb)) == Limit{LimitZero{}});
  CHECK(rf_limit_inf(ha * hb / (ha + RatFunc(1))) == Limit{LimitDivergent{}});
  CHECK(rf_limit_inf(ha / (ha + hb)) == Limit{LimitUndefined{}});
  CHECK(rf_limit_inf(RatFunc(GaussRat::i())) == Limit{GaussRat::i()});
}

TEST_CASE("binop front end") {
  CHECK(rf_binop(BinOp::div, ha, ha) == RatFunc(1));
  CHECK(rf_binop(BinOp::sub, ha, ha).is_zero());
  CHECK_THROWS_AS(rf_binop(BinOp::div, ha, RatFunc(0)), ScalarError);
}

TEST_CASE("coroot factor recognition") {
  CHECK(factors_into_coroot_forms(Poly2::affine(1, 2, 5) * Poly2::affine(1, 0, -1)));
  CHECK(factors_into_coroot_forms(Poly2(7)));
  CHECK_FALSE(factors_into_coroot_forms(Poly2::affine(2, 1, 0)));
}

TEST_CASE("property: field axioms on random rational functions") {
  std::mt19937 rng(101);
  for (int n = 0; n < 60; ++n) {
    const RatFunc f = rand_ratfunc(rng), g = rand_ratfunc(rng), h = rand_ratfunc(rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    const RatFunc u = rand_nonzero_ratfunc(rng);
    CHECK(u * u.inverse() == RatFunc(1));
    CHECK((f / u) * u == f);
  }
}

TEST_CASE("property: canonical form is unique") {
  std::mt19937 rng(202);
  for (int n = 0; n < 40; ++n) {
    const RatFunc f = rand_ratfunc(rng);
    Poly2 k = rand_poly(rng, 1, 2);
    while (k.is_zero()) k = rand_poly(rng, 1, 2);
    // Multiplying numerator and denominator by a common factor changes nothing.
    CHECK(RatFunc(f.num() * k, f.den() * k) == f);
    CHECK(gcd(f.num(), f.den()).is_constant());
    CHECK(f.den().leading().coeff.is_one());
  }
}

TEST_CASE("property: gcd divides both arguments") {
  std::mt19937 rng(303);
  for (int n = 0; n < 40; ++n) {
    const Poly2 common = rand_poly(rng, 1, 2);
    const Poly2 a = rand_poly(rng, 2, 3) * common;
    const Poly2 b = rand_poly(rng, 2, 3) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const Poly2 g = gcd(a, b);
    CHECK(try_divide(a, g).has_value());
    CHECK(try_divide(b, g).has_value());
    if (!common.is_zero()) CHECK(try_divide(g, common).has_value());
  }
}

TEST_CASE("property: evaluation is a homomorphism away from poles") {
  std::mt19937 rng(404);
  const std::pair<GaussRat, GaussRat> pt{GaussRat(mpq_class(7, 3)), GaussRat(mpq_class(-11, 5))};
  for (int n = 0; n < 40; ++n) {
    const RatFunc f = rand_ratfunc(rng), g = rand_ratfunc(rng);
    try {
      CHECK(rf_eval(f * g, pt) == rf_eval(f, pt) * rf_eval(g, pt));
      CHECK(rf_eval(f + g, pt) == rf_eval(f, pt) + rf_eval(g, pt));
    } catch (const ScalarError&) {
      // the sample point hit a pole; nothing to compare
    }
  }
}
