#include "drasp4/projector.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

namespace drasp4 {

namespace {

int read_slack() {
  const char* env = std::getenv("DRASP4_MAX_PROJECTOR_K");
  if (env == nullptr || *env == '\0') return kDefaultProjectorSlack;
  const std::string s(env);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("DRASP4_MAX_PROJECTOR_K must be an integer >= 8, got '" + s + "'");
  }
  if (pos != s.size() || v < kDefaultProjectorSlack || v > 10000)
    throw ConfigError("DRASP4_MAX_PROJECTOR_K must be an integer >= 8, got '" + s + "'");
  return static_cast<int>(v);
}

// Weyl degree plus a weight of 4 per F-factor: each F can feed several E-steps.
int truncation_measure(const AmbientElem& u) {
  int m = 0;
  for (const auto& [mono, c] : u.terms()) {
    int f = 0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(Gen::Fa); ++k) f += mono.e[k];
    m = std::max(m, mono.weyl_part().degree() + 4 * f);
  }
  return m;
}

}  // namespace

int projector_slack() { return read_slack(); }

RatFunc coroot_scalar(Root r) { return RatFunc(coroot_form(r).poly()); }

RatFunc phi_coeff(Root r, int k) {
  const Poly2 h = coroot_form(r).poly();
  Poly2 den(1);
  long fact = 1;
  for (int j = 2; j <= k + 1; ++j) den = den * (h + Poly2(j));
  for (int j = 2; j <= k; ++j) fact *= j;
  const RatFunc v(Poly2(k % 2 == 0 ? 1 : -1), den.scaled(GaussRat(fact)));
  return v;
}

CosetElem apply_P_gamma(Root r, const CosetElem& v) {
  const int bound = truncation_measure(v.elem()) + projector_slack();
  const AmbientElem e = AmbientElem::gen(e_gen(r));
  const AmbientElem f = AmbientElem::gen(f_gen(r));
  AmbientElem out = v.elem();
  AmbientElem cur = v.elem();
  AmbientElem fk(1);
  for (int k = 1;; ++k) {
    cur = red(amb_mul(e, cur), Side::I);
    if (cur.is_zero()) break;
    if (k > bound) throw ProjectorError("projector truncation bound exceeded");
    fk = amb_mul(f, fk);
    out += amb_mul(fk, cur).scaled_left(phi_coeff(r, k));
  }
  return CosetElem(red(out, Side::I));
}

CosetElem apply_P(const CosetElem& v, std::span<const Root, 4> order) {
  CosetElem cur = v;
  for (Root r : order) cur = apply_P_gamma(r, cur);
  return cur;
}

DraElem diamond(const DraElem& u, const DraElem& v) {
  const CosetElem pv = apply_P(CosetElem(v.elem()));
  return DraElem(red(amb_mul(u.elem(), pv.elem()), Side::II));
}

DraElem diamond_power(const DraElem& u, unsigned k) {
  DraElem out(1);
  for (unsigned j = 0; j < k; ++j) out = diamond(out, u);
  return out;
}

DraElem diamond_bracket(const DraElem& u, const DraElem& v) { return diamond(u, v) - diamond(v, u); }

DraElem dra_theta(const DraElem& u) { return DraElem(red(amb_theta(u.elem()), Side::II)); }

DraElem dra_gen(WeylGen g) { return DraElem::gen(g); }

const NormalizedGens& normalized_gens() {
  static const NormalizedGens n = [] {
    const RatFunc ha = RatFunc::va();
    const RatFunc hba = coroot_scalar(Root::beta_alpha);
    NormalizedGens g;
    g.x1 = dra_gen(WeylGen::x1);
    g.x2 = dra_gen(WeylGen::x2).scaled_left(ha + RatFunc(2));
    g.d1 = dra_gen(WeylGen::d1).scaled_right((ha + RatFunc(1)) * (hba + RatFunc(1)));
    g.d2 = dra_gen(WeylGen::d2).scaled_right(hba + RatFunc(1));
    return g;
  }();
  return n;
}

namespace {

PresentationTable build_table(CoeffSource src) {
    const RatFunc ha = RatFunc::va();
    const RatFunc hb = RatFunc::vb();
    const RatFunc hba = coroot_scalar(Root::beta_alpha);
    const RatFunc hb2a = coroot_scalar(Root::beta_2alpha);
    const RatFunc one(1);
    PresentationTable p;
    p.a = ha + one;
    p.b = hb2a + one;
    p.c = hba + one;
    p.d = hb + one;
    p.f11 = (p.a + one) * (p.a - one) * (p.b + one) / (p.a * p.a * p.b);
    p.f12 = src == CoeffSource::stated ? -(p.d + RatFunc(2)) / (p.a * p.c)
                                       : -(RatFunc(2) * (p.d + one)) / (p.a * p.c);
    p.f21 = (p.a * (p.d - one) + p.c * (p.d + one)) / (p.a * p.c * p.d);
    p.f22 = (p.d + one) / p.d;
    p.c_hat1 = -ha * (hba + one);
    p.c_hat2 = -(ha + RatFunc(2)) * (hba + one);
    auto col1 = [&](int i) { return (ha + RatFunc(i)) * (hba + one) / ((ha + RatFunc(2)) * (hba + RatFunc(2))); };
    auto col2 = [&](int i) { return (ha + RatFunc(i)) * (hba + one) / ((ha + one) * (hba + RatFunc(2))); };
    p.f_hat11 = p.f11 * col1(1);
    p.f_hat12 = p.f12 * col2(1);
    p.f_hat21 = p.f21 * col1(2);
    p.f_hat22 = p.f22 * col2(2);
    return p;
}

}  // namespace

const PresentationTable& presentation_table(CoeffSource src) {
  static const PresentationTable stated = build_table(CoeffSource::stated);
  static const PresentationTable derived = build_table(CoeffSource::derived);
  return src == CoeffSource::stated ? stated : derived;
}

const DraElem& diamond_basis(const WeylMono& m) {
  thread_local std::map<WeylMono, DraElem> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  DraElem out(1);
  if (m.degree() > 0) {
    // peel the last factor: x1, else x2, else d2, else d1
    std::size_t last = 3;
    while (m.e[last] == 0) --last;
    WeylMono rest = m;
    rest.e[last] -= 1;
    out = diamond(diamond_basis(rest), dra_gen(static_cast<WeylGen>(last)));
  }
  return cache.emplace(m, std::move(out)).first->second;
}

std::map<WeylMono, RatFunc, DraMonoLess> to_diamond_basis(const DraElem& u) {
  std::map<WeylMono, RatFunc, DraMonoLess> out;
  DraElem rest = u;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.elem().terms().rbegin();
    const WeylMono m = lead.weyl_part();
    const RatFunc coef = c;
    const DraElem& b = diamond_basis(m);
    if (!b.coeff(m).is_one() || b.elem().leading_mono() != lead)
      throw std::logic_error("internal: diamond basis is not unitriangular at " + to_string(m));
    out.emplace(m, coef);
    rest -= b.scaled_left(coef);
  }
  return out;
}

}  // namespace drasp4
