#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "drasp4/projector.hpp"
#include "drasp4/verify.hpp"
#include "test_support.hpp"

using namespace drasp4;

namespace {

const RatFunc ha = RatFunc::va();
AmbientElem g(Gen x) { return AmbientElem::gen(x); }
DraElem dg(WeylGen x) { return dra_gen(x); }

struct EnvGuard {
  explicit EnvGuard(const char* v) {
    if (v)
      setenv("DRASP4_MAX_PROJECTOR_K", v, 1);
    else
      unsetenv("DRASP4_MAX_PROJECTOR_K");
  }
  ~EnvGuard() { unsetenv("DRASP4_MAX_PROJECTOR_K"); }
};

}  // namespace

TEST_CASE("phi coefficients") {
  CHECK(phi_coeff(Root::alpha, 1) == -(RatFunc(1) / (ha + RatFunc(2))));
  const RatFunc h = coroot_scalar(Root::beta);
  CHECK(phi_coeff(Root::beta, 2) == RatFunc(1) / (RatFunc(2) * (h + RatFunc(2)) * (h + RatFunc(3))));
}

TEST_CASE("one factor of the projector on x2") {
  const CosetElem p = apply_P_gamma(Root::alpha, CosetElem(g(Gen::x2)));
  CHECK(p.elem() == g(Gen::x2) - (g(Gen::Fa) * g(Gen::x1)).scaled_left(RatFunc(1) / (ha + RatFunc(2))));
}

TEST_CASE("projected cosets are annihilated by every E") {
  std::mt19937 rng(31);
  std::vector<AmbientElem> samples{AmbientElem(1), g(Gen::x1), g(Gen::d2) * g(Gen::x2), g(Gen::d1) * g(Gen::x2)};
  for (int n = 0; n < 4; ++n) samples.push_back(random_dra_elem(rng, 2).elem());
  for (const auto& v : samples) {
    const CosetElem pv = apply_P(CosetElem(v));
    for (Root r : kConvexOrder) CHECK(red(g(e_gen(r)) * pv.elem(), Side::I).is_zero());
  }
}

TEST_CASE("the projector fixes E-invariants and agrees in both convex orders") {
  CHECK(apply_P(CosetElem(AmbientElem(ha))).elem() == AmbientElem(ha));
  const CosetElem v(g(Gen::Fb) * g(Gen::d1) * g(Gen::x1));
  CHECK(apply_P(v) == apply_P(v, kReverseConvexOrder));
}

TEST_CASE("diamond products of generators") {
  CHECK(to_string(diamond(dg(WeylGen::x1), dg(WeylGen::x2))) == "((Ha+2)/(Ha+1)) x2 x1");
  // scalars act by left and right multiplication
  const DraElem x1 = dg(WeylGen::x1);
  CHECK(diamond(DraElem(ha), x1) == x1.scaled_left(ha));
  CHECK(diamond(x1, DraElem(ha)) == x1.scaled_right(ha));
}

TEST_CASE("normalized generators commute") {
  const NormalizedGens& n = normalized_gens();
  CHECK(diamond_bracket(n.x1, n.x2).is_zero());
  CHECK(diamond_bracket(n.d1, n.d2).is_zero());
  CHECK(diamond_bracket(n.x1, n.d2).is_zero());
  CHECK(diamond_bracket(n.x2, n.d1).is_zero());
}

TEST_CASE("property: diamond product is associative on samples") {
  std::mt19937 rng(32);
  for (int k = 0; k < 6; ++k) {
    const DraElem u = random_dra_elem(rng, 1), v = random_dra_elem(rng, 1), w = random_dra_elem(rng, 1);
    CHECK(diamond(diamond(u, v), w) == diamond(u, diamond(v, w)));
  }
}

TEST_CASE("property: theta reverses diamond products") {
  std::mt19937 rng(33);
  for (int k = 0; k < 6; ++k) {
    const DraElem u = random_dra_elem(rng, 1), v = random_dra_elem(rng, 1);
    CHECK(dra_theta(diamond(u, v)) == diamond(dra_theta(v), dra_theta(u)));
    CHECK(dra_theta(dra_theta(u)) == u);
  }
}

TEST_CASE("property: diamond basis coordinates reconstruct the element") {
  std::mt19937 rng(34);
  for (int k = 0; k < 10; ++k) {
    const DraElem u = random_dra_elem(rng, 2);
    DraElem back;
    for (const auto& [m, c] : to_diamond_basis(u)) back += diamond_basis(m).scaled_left(c);
    CHECK(back == u);
  }
}

TEST_CASE("truncation bound configuration") {
  {
    EnvGuard e(nullptr);
    CHECK(projector_slack() == kDefaultProjectorSlack);
  }
  {
    EnvGuard e("40");
    CHECK(projector_slack() == 40);
    CHECK(apply_P(CosetElem(g(Gen::x1))).elem() == g(Gen::x1));
  }
  for (const char* bad : {"7", "abc", "12x", "-3", "100000"}) {
    EnvGuard e(bad);
    CHECK_THROWS_AS(projector_slack(), ConfigError);
  }
}

TEST_CASE("presentation tables differ only in f12") {
  const PresentationTable& s = presentation_table(CoeffSource::stated);
  const PresentationTable& d = presentation_table(CoeffSource::derived);
  CHECK(s.f11 == d.f11);
  CHECK(s.f21 == d.f21);
  CHECK(s.f22 == d.f22);
  CHECK(s.c_hat1 == d.c_hat1);
  CHECK_FALSE(s.f12 == d.f12);
  CHECK(d.f12 == -(RatFunc(2) * (d.d + RatFunc(1))) / (d.a * d.c));
}
