#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drasp4/projector.hpp"
#include "test_support.hpp"

using namespace drasp4;
using drasp4::testing::rand_base;
using drasp4::testing::small;

namespace {

BasePoly t(int i) { return BasePoly::t(2, i); }
GwaElem X(int i) { return GwaElem::x(2, i); }
GwaElem Y(int i) { return GwaElem::y(2, i); }
GwaElem B(const BasePoly& b) { return GwaElem(b); }

// Constant coefficients with exponents up to 2, or small rational
// coefficients with exponents up to 1 (products grow quickly otherwise).
GwaElem rand_gwa(std::mt19937& rng, bool constant_coeffs) {
  GwaElem u(2);
  const int n = static_cast<int>(small(rng, 1, constant_coeffs ? 3 : 2));
  const int e = constant_coeffs ? 2 : 1;
  for (int k = 0; k < n; ++k) {
    const GwaElem::Exps m{static_cast<int>(small(rng, -e, e)), static_cast<int>(small(rng, -e, e))};
    BasePoly b(2);
    if (constant_coeffs)
      b.add_term({static_cast<int>(small(rng, 0, 1)), static_cast<int>(small(rng, 0, 1))}, RatFunc(small(rng, -3, 3)));
    else
      b = BasePoly(2, RatFunc(Poly2::affine(small(rng, -2, 2), small(rng, -2, 2), small(rng, 1, 3))));
    u += GwaElem::monomial(m, b);
  }
  return u;
}

}  // namespace

TEST_CASE("defining relations of the generalized Weyl algebra") {
  for (const SkewAffineSigma& s : {weyl_example_sigma(2), dra_sigma()}) {
    for (int i = 1; i <= 2; ++i) {
      CHECK(gwa_mul(s, Y(i), X(i)) == B(t(i)));
      CHECK(gwa_mul(s, X(i), Y(i)) == B(s.apply(i, t(i))));
      for (const BasePoly& b : {t(1), t(2), BasePoly(2, RatFunc::va()), BasePoly(2, RatFunc::vb())})
        CHECK(gwa_mul(s, X(i), B(b)) == gwa_mul(s, B(s.apply(i, b)), X(i)));
    }
    CHECK(gwa_mul(s, X(1), X(2)) == gwa_mul(s, X(2), X(1)));
    CHECK(gwa_mul(s, Y(1), X(2)) == gwa_mul(s, X(2), Y(1)));
  }
}

TEST_CASE("property: sigma is an invertible ring map") {
  std::mt19937 rng(41);
  const SkewAffineSigma& s = dra_sigma();
  for (int n = 0; n < 20; ++n) {
    const BasePoly a = rand_base(rng), b = rand_base(rng);
    for (int i = 1; i <= 2; ++i) {
      CHECK(s.apply(i, a * b) == s.apply(i, a) * s.apply(i, b));
      CHECK(s.apply(i, a + b) == s.apply(i, a) + s.apply(i, b));
      CHECK(s.apply(i, s.apply(i, a), -1) == a);
    }
    CHECK(s.apply(1, s.apply(2, a)) == s.apply(2, s.apply(1, a)));
  }
}

TEST_CASE("property: the product is associative") {
  std::mt19937 rng(42);
  const SkewAffineSigma w = weyl_example_sigma(2);
  for (int n = 0; n < 20; ++n) {
    const GwaElem u = rand_gwa(rng, true), v = rand_gwa(rng, true), x = rand_gwa(rng, true);
    CHECK(gwa_mul(w, gwa_mul(w, u, v), x) == gwa_mul(w, u, gwa_mul(w, v, x)));
  }
  for (int n = 0; n < 5; ++n) {
    const GwaElem u = rand_gwa(rng, false), v = rand_gwa(rng, false), x = rand_gwa(rng, false);
    CHECK(gwa_mul(dra_sigma(), gwa_mul(dra_sigma(), u, v), x) == gwa_mul(dra_sigma(), u, gwa_mul(dra_sigma(), v, x)));
  }
}

TEST_CASE("property: the Weyl example map is multiplicative") {
  std::mt19937 rng(43);
  const SkewAffineSigma w = weyl_example_sigma(2);
  for (int n = 0; n < 20; ++n) {
    const GwaElem u = rand_gwa(rng, true), v = rand_gwa(rng, true);
    CHECK(weyl_example_map(gwa_mul(w, u, v)) == weyl_example_map(u) * weyl_example_map(v));
  }
  CHECK(weyl_example_map(X(1)) == WeylElem::x(1));
  CHECK(weyl_example_map(B(t(2))) == WeylElem::d(2) * WeylElem::x(2));
}

TEST_CASE("phi on generators and a product") {
  const NormalizedGens& n = normalized_gens();
  CHECK(phi(X(1)) == n.x1);
  CHECK(phi(Y(2)) == n.d2);
  CHECK(phi(t(1)) == diamond(n.d1, n.x1));
  CHECK(phi(gwa_mul(dra_sigma(), X(2), Y(1))) == diamond(n.x2, n.d1));
  CHECK(phi(gwa_mul(dra_sigma(), X(1), Y(1))) == phi(dra_sigma().apply(1, t(1))));
}

TEST_CASE("canonical monomials") {
  CHECK(gwa_monomials(0).size() == 1);
  CHECK(gwa_monomials(3).size() == 35);
  for (const auto& m : gwa_monomials(2)) CHECK(m.size() == 4);
}

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(SkewAffineSigma(dra_sigma_data(CoeffSource::stated)), GwaError);
  CHECK_NOTHROW(SkewAffineSigma(dra_sigma_data(CoeffSource::stated), SkewAffineSigma::Check::skip));
  AffineSigmaData bad = dra_sigma_data(CoeffSource::derived);
  bad.g[0][0] = RatFunc(0);
  CHECK_THROWS_AS(SkewAffineSigma{bad}, GwaError);
  CHECK_THROWS_AS(weyl_example_sigma(3), GwaError);
  CHECK_THROWS_AS(dra_sigma().apply(3, t(1)), GwaError);
}
