#include "drasp4/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "drasp4/projector.hpp"
#include "drasp4/sp4.hpp"

namespace drasp4 {

bool Report::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

std::size_t Report::num_failed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.pass; }));
}

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

Report Report::suite(std::string_view name) const {
  Report out;
  for (const auto& e : entries)
    if (e.suite == name) out.entries.push_back(e);
  return out;
}

const ReportEntry* Report::find(std::string_view suite, std::string_view id) const {
  for (const auto& e : entries)
    if (e.suite == suite && e.id == id) return &e;
  return nullptr;
}

namespace {

std::string str(const DraElem& u) { return to_string(u); }
std::string str(const AmbientElem& u) { return to_string(u); }
std::string str(const RatFunc& f) { return f.to_string(); }
std::string str(const BasePoly& b) { return b.to_string(); }
std::string str(const WeylElem& w) { return to_string(w); }

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  template <class T>
  void eq(std::string id, const T& lhs, const T& rhs) {
    ReportEntry e{name_, std::move(id), lhs == rhs, str(lhs), str(rhs), {}};
    if (!e.pass) e.residual = str(T(lhs - rhs));
    report_.entries.push_back(std::move(e));
  }

  void flag(std::string id, bool pass, std::string detail, std::string lhs = {}, std::string rhs = {}) {
    report_.entries.push_back({name_, std::move(id), pass, std::move(lhs), std::move(rhs),
                               pass ? std::string{} : std::move(detail)});
  }

  Report take() { return std::move(report_); }

 private:
  std::string name_;
  Report report_;
};

struct Scalars {
  RatFunc ha = RatFunc::va();
  RatFunc hb = RatFunc::vb();
  RatFunc hba = coroot_scalar(Root::beta_alpha);
  RatFunc hb2a = coroot_scalar(Root::beta_2alpha);
  RatFunc one{1};
};

struct Gens {
  DraElem x1 = dra_gen(WeylGen::x1);
  DraElem x2 = dra_gen(WeylGen::x2);
  DraElem d1 = dra_gen(WeylGen::d1);
  DraElem d2 = dra_gen(WeylGen::d2);
};

const WeylMono kOne{{0, 0, 0, 0}};
const WeylMono kD1X1{{1, 0, 0, 1}};
const WeylMono kD2X2{{0, 1, 1, 0}};

AmbientElem weyl_term(const WeylMono& m, const RatFunc& c) { return AmbientElem::monomial(AmbMono::from_weyl(m), c); }

AmbientElem congruence(const DraElem& y, const DraElem& v) {
  return red(amb_mul(y.elem(), apply_P(CosetElem(v.elem())).elem()), Side::II);
}

std::string exps_id(const std::vector<int>& e) {
  std::string s;
  for (int v : e) s += std::to_string(v);
  return s;
}

std::string mono_id(const WeylMono& m) { return exps_id({m.e[0], m.e[1], m.e[2], m.e[3]}); }

std::vector<AmbMono> ambient_monomials(int maxdeg) {
  std::vector<AmbMono> out{AmbMono{}};
  std::vector<AmbMono> layer{AmbMono{}};
  for (int d = 1; d <= maxdeg; ++d) {
    std::set<std::array<int, kNumGens>> seen;
    std::vector<AmbMono> next;
    for (const auto& m : layer) {
      for (std::size_t g = 0; g < kNumGens; ++g) {
        AmbMono n = m;
        n.e[g] += 1;
        if (seen.insert(n.e).second) next.push_back(n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

bool is_coroot_product(const RatFunc& f) {
  return !f.is_zero() && factors_into_coroot_forms(f.num()) && factors_into_coroot_forms(f.den());
}

const char* source_suffix(CoeffSource src) { return src == CoeffSource::stated ? "" : "/derived"; }

const SkewAffineSigma& sigma_for(CoeffSource src) {
  return src == CoeffSource::stated ? dra_sigma_stated_unchecked() : dra_sigma();
}

}  // namespace

std::vector<WeylMono> weyl_monomials(int maxdeg) {
  std::vector<WeylMono> out;
  for (int total = 0; total <= maxdeg; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = total - a; b >= 0; --b)
        for (int c = total - a - b; c >= 0; --c) out.push_back(WeylMono{{a, b, c, total - a - b - c}});
  return out;
}

DraElem random_dra_elem(std::mt19937& rng, int maxdeg) {
  const std::vector<WeylMono> monos = weyl_monomials(maxdeg);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  auto affine = [&] {
    for (;;) {
      const Poly2 p = Poly2::affine(pick(-3, 3), pick(-3, 3), pick(-3, 3));
      if (!p.is_zero()) return p;
    }
  };
  for (;;) {
    DraElem out;
    const int terms = pick(1, 3);
    for (int k = 0; k < terms; ++k) {
      const WeylMono& m = monos[static_cast<std::size_t>(pick(0, static_cast<int>(monos.size()) - 1))];
      const Poly2 num = affine();
      const Poly2 den = affine();
      out += DraElem::monomial(m, RatFunc(num, den));
    }
    if (!out.is_zero()) return out;
  }
}

Report verify_bootstrap() {
  Suite s("bootstrap");
  const WeylElem x1 = WeylElem::x(1), x2 = WeylElem::x(2), d1 = WeylElem::d(1), d2 = WeylElem::d(2);
  const GaussRat half = GaussRat::frac(1, 2);
  const GaussRat ihalf = GaussRat::i() * half;
  struct Triple {
    Root r;
    WeylElem e, f, h;
  };
  const std::vector<Triple> expected{
      {Root::alpha, x1 * d2, x2 * d1, x1 * d1 - x2 * d2},
      {Root::beta, ihalf * (x2 * x2), ihalf * (d2 * d2), x2 * d2 + WeylElem(half)},
      {Root::beta_alpha, GaussRat::i() * (x1 * x2), GaussRat::i() * (d1 * d2), x1 * d1 + x2 * d2 + WeylElem(1)},
      {Root::beta_2alpha, ihalf * (x1 * x1), ihalf * (d1 * d1), x1 * d1 + WeylElem(half)},
  };
  for (const auto& t : expected) {
    const std::string rn(root_name(t.r));
    const WeylElem& e = osc(e_of(t.r));
    const WeylElem& f = osc(f_of(t.r));
    s.eq("e_" + rn, e, t.e);
    s.eq("f_" + rn, f, t.f);
    s.eq("h_" + rn, weyl_bracket(e, f), t.h);
  }
  return s.take();
}

Report verify_presentation() {
  Suite s("presentation");
  const Scalars h;
  const Gens g;
  const PresentationTable& p = presentation_table(CoeffSource::stated);
  struct Shift {
    const char* name;
    const DraElem* gen;
    int da, db;
  };
  const std::vector<Shift> shifts{{"x1", &g.x1, -1, 0}, {"d1", &g.d1, 1, 0}, {"x2", &g.x2, 1, -1}, {"d2", &g.d2, -1, 1}};
  for (const auto& sh : shifts) {
    s.eq(std::string(sh.name) + "-Ha", diamond(*sh.gen, DraElem(h.ha)), sh.gen->scaled_left(h.ha + RatFunc(sh.da)));
    s.eq(std::string(sh.name) + "-Hb", diamond(*sh.gen, DraElem(h.hb)), sh.gen->scaled_left(h.hb + RatFunc(sh.db)));
  }
  const RatFunc ca = h.one + h.one / (h.ha + h.one);
  const RatFunc cba = h.one + h.one / (h.hba + h.one);
  s.eq("x1-x2", diamond(g.x1, g.x2), diamond(g.x2, g.x1).scaled_left(ca));
  s.eq("d2-d1", diamond(g.d2, g.d1), diamond(g.d1, g.d2).scaled_right(ca));
  s.eq("x1-d2", diamond(g.x1, g.d2), diamond(g.d2, g.x1).scaled_left(cba));
  s.eq("x2-d1", diamond(g.x2, g.d1), diamond(g.d1, g.x2).scaled_right(cba));
  const DraElem d1x1 = diamond(g.d1, g.x1);
  const DraElem d2x2 = diamond(g.d2, g.x2);
  s.eq("x1-d1", diamond(g.x1, g.d1),
       DraElem(-h.one + h.one / (h.ha + h.one)) + d1x1.scaled_left(p.f11) + d2x2.scaled_left(p.f12));
  s.eq("x2-d2", diamond(g.x2, g.d2), DraElem(-h.one) + d1x1.scaled_left(p.f21) + d2x2.scaled_left(p.f22));
  return s.take();
}

Report verify_lemma32() {
  Suite s("lemma32");
  const Scalars h;
  const Gens g;
  {
    std::size_t bad = 0;
    std::string first;
    const auto monos = ambient_monomials(2);
    for (const auto& m : monos) {
      const AmbientElem y = AmbientElem::monomial(m);
      const AmbientElem lhs = red(amb_mul(y, apply_P(CosetElem(g.x1.elem())).elem()), Side::II);
      const AmbientElem rhs = red(amb_mul(y, g.x1.elem()), Side::II);
      if (lhs != rhs && bad++ == 0) first = to_string(m) + ": " + to_string(lhs - rhs);
    }
    s.flag("yPx1", bad == 0,
           std::to_string(bad) + " of " + std::to_string(monos.size()) + " ambient monomials differ, first " + first,
           "y P x1 for " + std::to_string(monos.size()) + " ambient monomials y of degree <= 2", "y x1");
  }
  s.eq("d2Px2", congruence(g.d2, g.x2), weyl_term(kD2X2, h.one) + weyl_term(kD1X1, -h.one / (h.ha + h.one)));
  s.eq("x2Pd2", congruence(g.x2, g.d2),
       AmbientElem(-h.one) + weyl_term(kD1X1, h.hb / ((h.hb + h.one) * (h.hba + h.one))) +
           weyl_term(kD2X2, h.one + h.one / (h.hb + h.one)));
  const RatFunc c11 =
      h.one + (h.ha * h.hba + h.hb2a + h.one) / ((h.ha + h.one) * (h.hba + h.one) * (h.hb2a + h.one));
  const RatFunc c22 = (h.ha - h.hba - RatFunc(2)) / ((h.ha + h.one) * (h.hba + h.one));
  s.eq("x1Pd1", congruence(g.x1, g.d1),
       AmbientElem(-h.one + h.one / (h.ha + h.one)) + weyl_term(kD1X1, c11) + weyl_term(kD2X2, c22));
  return s.take();
}

Report verify_coefficients() {
  Suite s("coefficients");
  const Scalars h;
  const Gens g;
  const PresentationTable& p = presentation_table(CoeffSource::stated);
  auto coords = [](const DraElem& u) { return to_diamond_basis(u); };
  auto get = [](const auto& m, const WeylMono& k) {
    auto it = m.find(k);
    return it == m.end() ? RatFunc(0) : it->second;
  };
  auto support = [&](const std::string& id, const auto& m) {
    std::string keys;
    bool ok = true;
    for (const auto& [k, c] : m) {
      if (!(k == kOne || k == kD1X1 || k == kD2X2)) ok = false;
      keys += (keys.empty() ? "" : ",") + mono_id(k);
    }
    s.flag(id, ok, "coordinates outside {1, d1<>x1, d2<>x2}: " + keys, keys, "0000,1001,0110");
  };
  const auto c1 = coords(diamond(g.x1, g.d1));
  s.eq("const-x1-d1", get(c1, kOne), -h.one + h.one / (h.ha + h.one));
  s.eq("f11", get(c1, kD1X1), p.f11);
  s.eq("f12", get(c1, kD2X2), p.f12);
  support("support-x1-d1", c1);
  const auto c2 = coords(diamond(g.x2, g.d2));
  s.eq("const-x2-d2", get(c2, kOne), -h.one);
  s.eq("f21", get(c2, kD1X1), p.f21);
  s.eq("f22", get(c2, kD2X2), p.f22);
  support("support-x2-d2", c2);
  s.eq("f12/derived", get(c1, kD2X2), presentation_table(CoeffSource::derived).f12);
  return s.take();
}

Report verify_normalized() {
  Suite s("normalized");
  const NormalizedGens& n = normalized_gens();
  const DraElem zero;
  s.eq("x1h-x2h", diamond_bracket(n.x1, n.x2), zero);
  s.eq("d1h-d2h", diamond_bracket(n.d1, n.d2), zero);
  s.eq("x1h-d2h", diamond_bracket(n.x1, n.d2), zero);
  s.eq("x2h-d1h", diamond_bracket(n.x2, n.d1), zero);
  return s.take();
}

Report verify_appendix() {
  Suite s("appendix");
  const Scalars h;
  const Gens g;
  const NormalizedGens& n = normalized_gens();
  s.eq("x1h.x2h=x2h.x1h", diamond(n.x1, n.x2), diamond(n.x2, n.x1));
  s.eq("d2h.d1h=d1h.d2h", diamond(n.d2, n.d1), diamond(n.d1, n.d2));
  s.eq("x1h.d2h=d2h.x1h", diamond(n.x1, n.d2), diamond(n.d2, n.x1));
  s.eq("x2h.d1h=d1h.x2h", diamond(n.x2, n.d1), diamond(n.d1, n.x2));
  const DraElem d1x1 = diamond(g.d1, g.x1);
  const DraElem d2x2 = diamond(g.d2, g.x2);
  for (CoeffSource src : {CoeffSource::stated, CoeffSource::derived}) {
    const PresentationTable& p = presentation_table(src);
    const SkewAffineSigma& sigma = sigma_for(src);
    for (int i = 1; i <= 2; ++i) {
      const std::string si = std::to_string(i);
      const DraElem& xi = i == 1 ? n.x1 : n.x2;
      const DraElem& di = i == 1 ? n.d1 : n.d2;
      const DraElem lhs = phi(sigma.image_of_t(i));
      s.eq("phi-sigma-t" + si + source_suffix(src), lhs, diamond(xi, di));
      const RatFunc scale = (h.ha + RatFunc(i)) * (h.hba + h.one);
      const RatFunc c = i == 1 ? p.c_hat1 : p.c_hat2;
      const RatFunc fi1 = i == 1 ? p.f11 : p.f21;
      const RatFunc fi2 = i == 1 ? p.f12 : p.f22;
      s.eq("A2-" + si + source_suffix(src), lhs,
           DraElem(c) + (d1x1.scaled_left(fi1) + d2x2.scaled_left(fi2)).scaled_left(scale));
      if (src == CoeffSource::stated) {
        const DraElem& xb = i == 1 ? g.x1 : g.x2;
        const DraElem& db = i == 1 ? g.d1 : g.d2;
        s.eq("A2-" + si + "-rhs", diamond(xi, di), diamond(xb, db).scaled_left(scale));
      }
    }
  }
  return s.take();
}

Report verify_sigma_commute() {
  Suite s("sigma");
  auto s1 = [](const RatFunc& f) { return rf_shift(f, {-1, 0}); };
  auto s2 = [](const RatFunc& f) { return rf_shift(f, {1, -1}); };
  for (CoeffSource src : {CoeffSource::stated, CoeffSource::derived}) {
    const PresentationTable& p = presentation_table(src);
    const std::string suf = source_suffix(src);
    s.eq("s1s2(t2):t1" + suf, s1(p.f_hat21) * p.f_hat11, p.f_hat21);
    s.eq("s1s2(t2):t2" + suf, s1(p.f_hat21) * p.f_hat12 + s1(p.f_hat22), p.f_hat22);
    s.eq("s1s2(t2):1" + suf, s1(p.c_hat2) + s1(p.f_hat21) * p.c_hat1, p.c_hat2);
    s.eq("s2s1(t1):t2" + suf, s2(p.f_hat12) * p.f_hat22, p.f_hat12);
    s.eq("s2s1(t1):t1" + suf, s2(p.f_hat12) * p.f_hat21 + s2(p.f_hat11), p.f_hat11);
    s.eq("s2s1(t1):1" + suf, s2(p.c_hat1) + s2(p.f_hat12) * p.c_hat2, p.c_hat1);
    const SkewAffineSigma& sigma = sigma_for(src);
    for (int k = 1; k <= 2; ++k) {
      const BasePoly t = BasePoly::t(2, k);
      s.eq("direct(t" + std::to_string(k) + ")" + suf, sigma.apply(1, sigma.apply(2, t)),
           sigma.apply(2, sigma.apply(1, t)));
    }
  }
  return s.take();
}

Report verify_gwa_iso(int maxdeg) {
  Suite s("gwa");
  const NormalizedGens& n = normalized_gens();
  const BasePoly ha(2, RatFunc::va()), hb(2, RatFunc::vb());
  const std::vector<std::pair<std::string, BasePoly>> bases{
      {"Ha", ha}, {"Hb", hb}, {"t1", BasePoly::t(2, 1)}, {"t2", BasePoly::t(2, 2)}};

  for (CoeffSource src : {CoeffSource::stated, CoeffSource::derived}) {
    const std::string suf = source_suffix(src);
    try {
      SkewAffineSigma checked(dra_sigma_data(src));
      s.flag("instance-commutes" + suf, true, {});
    } catch (const GwaError& e) {
      s.flag("instance-commutes" + suf, false, e.what());
    }
    const SkewAffineSigma& sigma = sigma_for(src);
    for (int i = 1; i <= 2; ++i) {
      const std::string si = std::to_string(i);
      const DraElem& xi = i == 1 ? n.x1 : n.x2;
      const DraElem& yi = i == 1 ? n.d1 : n.d2;
      for (const auto& [bn, b] : bases) {
        const DraElem pb = phi(b);
        const DraElem psb = phi(sigma.apply(i, b));
        s.eq("X" + si + "*" + bn + suf, diamond(xi, pb), diamond(psb, xi));
        s.eq(bn + "*Y" + si + suf, diamond(pb, yi), diamond(yi, psb));
      }
      s.eq("X" + si + "Y" + si + "=s" + si + "(t" + si + ")" + suf, diamond(xi, yi), phi(sigma.image_of_t(i)));
    }
  }
  s.eq("X1X2=X2X1", diamond(n.x1, n.x2), diamond(n.x2, n.x1));
  s.eq("Y1Y2=Y2Y1", diamond(n.d1, n.d2), diamond(n.d2, n.d1));
  s.eq("X1Y2=Y2X1", diamond(n.x1, n.d2), diamond(n.d2, n.x1));
  s.eq("X2Y1=Y1X2", diamond(n.x2, n.d1), diamond(n.d1, n.x2));
  s.eq("Y1X1=t1", diamond(n.d1, n.x1), phi(BasePoly::t(2, 1)));
  s.eq("Y2X2=t2", diamond(n.d2, n.x2), phi(BasePoly::t(2, 2)));

  // Y1^a Y2^b X1^c X2^d -> d1^a d2^b x2^d x1^c, invertible leading coefficient
  for (const auto& e : gwa_monomials(maxdeg)) {
    DraElem img(1);
    for (int k = 0; k < e[0]; ++k) img = diamond(img, n.d1);
    for (int k = 0; k < e[1]; ++k) img = diamond(img, n.d2);
    for (int k = 0; k < e[2]; ++k) img = diamond(img, n.x1);
    for (int k = 0; k < e[3]; ++k) img = diamond(img, n.x2);
    const WeylMono want{{e[0], e[1], e[3], e[2]}};
    const AmbMono& lead = img.elem().leading_mono();
    const RatFunc lc = img.elem().coeff(lead);
    const bool ok = lead == AmbMono::from_weyl(want) && is_coroot_product(lc);
    s.flag("basis-" + exps_id(e), ok, "leading term " + to_string(lead) + " with coefficient " + lc.to_string(),
           "(" + lc.to_string() + ") " + to_string(lead), to_string(want));
  }

  for (int rank = 1; rank <= 2; ++rank) {
    const SkewAffineSigma w = weyl_example_sigma(rank);
    std::vector<GwaElem> elems;
    std::vector<int> degs;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        if (rank == 1 && b != 0) continue;
        if (std::abs(a) + std::abs(b) > 3) continue;
        GwaElem::Exps m = rank == 1 ? GwaElem::Exps{a} : GwaElem::Exps{a, b};
        elems.push_back(GwaElem::monomial(m, BasePoly(rank, RatFunc(1))));
        degs.push_back(std::abs(a) + std::abs(b));
        if (std::abs(a) + std::abs(b) <= 1) {
          for (int i = 1; i <= rank; ++i) {
            elems.push_back(GwaElem::monomial(m, BasePoly::t(rank, i)));
            degs.push_back(std::abs(a) + std::abs(b) + 2);
          }
        }
      }
    std::size_t bad = 0, total = 0;
    std::string first;
    for (std::size_t u = 0; u < elems.size(); ++u)
      for (std::size_t v = 0; v < elems.size(); ++v) {
        if (degs[u] + degs[v] > 3) continue;
        ++total;
        const WeylElem lhs = weyl_example_map(gwa_mul(w, elems[u], elems[v]));
        const WeylElem rhs = weyl_example_map(elems[u]) * weyl_example_map(elems[v]);
        if (lhs != rhs && bad++ == 0) first = elems[u].to_string() + " * " + elems[v].to_string();
      }
    s.flag("weyl-example-n" + std::to_string(rank), bad == 0,
           std::to_string(bad) + " of " + std::to_string(total) + " products differ, first " + first,
           std::to_string(total) + " products", "A_" + std::to_string(rank));
  }

  {
    std::mt19937 rng(kDomainSampleSeed);
    const SkewAffineSigma& sigma = dra_sigma();
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    auto elem = [&] {
      const GwaElem::Exps m{pick(-1, 1), pick(-1, 1)};
      const int kind = pick(0, 2);
      const BasePoly c = kind == 0 ? BasePoly(2, RatFunc(1)) : kind == 1 ? BasePoly::t(2, pick(1, 2)) : ha + BasePoly(2, RatFunc(pick(1, 3)));
      return GwaElem::monomial(m, c);
    };
    std::size_t bad = 0;
    std::string first;
    const int samples = 12;
    for (int k = 0; k < samples; ++k) {
      const GwaElem u = elem(), v = elem();
      if (phi(gwa_mul(sigma, u, v)) != diamond(phi(u), phi(v)) && bad++ == 0)
        first = u.to_string() + " * " + v.to_string();
    }
    s.flag("phi-multiplicative-sample", bad == 0,
           std::to_string(bad) + " of " + std::to_string(samples) + " pairs differ, first " + first,
           "phi(u v)", "phi(u) <> phi(v)");
  }
  return s.take();
}

Report verify_projector() {
  Suite s("projector");
  std::size_t bad_e = 0;
  std::string first_e;
  const auto monos = weyl_monomials(3);
  for (const auto& m : monos) {
    const CosetElem v(AmbientElem::monomial(AmbMono::from_weyl(m)));
    const CosetElem a = apply_P(v, kConvexOrder);
    const CosetElem b = apply_P(v, kReverseConvexOrder);
    s.eq("orders-" + mono_id(m), a.elem(), b.elem());
    for (Root r : {Root::alpha, Root::beta}) {
      const AmbientElem e = red(amb_mul(AmbientElem::gen(e_gen(r)), a.elem()), Side::I);
      if (!e.is_zero() && bad_e++ == 0) first_e = std::string(root_name(r)) + " on " + mono_id(m) + ": " + to_string(e);
    }
  }
  s.flag("simple-E-annihilate", bad_e == 0, std::to_string(bad_e) + " nonzero, first " + first_e,
         "E_a P v, E_b P v mod I for " + std::to_string(monos.size()) + " monomials", "0");
  for (Root r : kConvexOrder)
    s.eq("phi1-" + std::string(root_name(r)), phi_coeff(r, 1), -RatFunc(1) / (coroot_scalar(r) + RatFunc(2)));
  return s.take();
}

Report verify_limit() {
  Suite s("limit");
  const Scalars h;
  const PresentationTable& p = presentation_table(CoeffSource::stated);
  auto check = [&](const std::string& id, const RatFunc& f, const Limit& want) {
    const Limit got = rf_limit_inf(f);
    s.flag(id, got == want, "limit " + to_string(got) + ", expected " + to_string(want), f.to_string(), to_string(want));
  };
  const Limit one = GaussRat(1);
  const Limit zero = LimitZero{};
  check("f11", p.f11, one);
  check("f12", p.f12, zero);
  check("f21", p.f21, zero);
  check("f22", p.f22, one);
  check("f12/derived", presentation_table(CoeffSource::derived).f12, zero);
  check("x1-x2-coeff", h.one + h.one / (h.ha + h.one), one);
  check("x1-d2-coeff", h.one + h.one / (h.hba + h.one), one);
  check("const-x1-d1", -h.one + h.one / (h.ha + h.one), GaussRat(-1));
  check("const-x2-d2", -h.one, GaussRat(-1));
  return s.take();
}

Report verify_domain_sample(std::uint32_t seed, int pairs) {
  Suite s("domain_sample");
  std::mt19937 rng(seed);
  int bad = 0;
  std::string first;
  for (int k = 0; k < pairs; ++k) {
    const DraElem u = random_dra_elem(rng);
    const DraElem v = random_dra_elem(rng);
    if ((diamond(u, v).is_zero() || diamond(v, u).is_zero()) && bad++ == 0)
      first = to_string(u) + " , " + to_string(v);
  }
  s.flag("nonzero-products", bad == 0, std::to_string(bad) + " zero products, first pair " + first,
         std::to_string(pairs) + " pairs, seed " + std::to_string(seed), "u<>v != 0 and v<>u != 0");
  return s.take();
}

Report verify_triangular(int maxdeg) {
  Suite s("triangular");
  for (const auto& m : weyl_monomials(maxdeg)) {
    const DraElem& b = diamond_basis(m);
    const AmbMono& lead = b.elem().leading_mono();
    const bool ok = lead == AmbMono::from_weyl(m) && b.coeff(m).is_one();
    s.flag("tri-" + mono_id(m), ok, "leading term " + to_string(lead) + " coefficient " + b.elem().coeff(lead).to_string(),
           to_string(b), to_string(m) + " + lower");
  }
  return s.take();
}

Report verify_theta() {
  Suite s("theta");
  const Scalars h;
  const Gens g;
  s.eq("x1->d1", dra_theta(g.x1), g.d1);
  s.eq("x2->d2", dra_theta(g.x2), g.d2);
  const RatFunc ca = h.one + h.one / (h.ha + h.one);
  const RatFunc cba = h.one + h.one / (h.hba + h.one);
  s.eq("mirror-x1-x2:lhs", dra_theta(diamond(g.x1, g.x2)), diamond(g.d2, g.d1));
  s.eq("mirror-x1-x2:rhs", dra_theta(diamond(g.x2, g.x1).scaled_left(ca)), diamond(g.d1, g.d2).scaled_right(ca));
  s.eq("mirror-x1-d2:lhs", dra_theta(diamond(g.x1, g.d2)), diamond(g.x2, g.d1));
  s.eq("mirror-x1-d2:rhs", dra_theta(diamond(g.d2, g.x1).scaled_left(cba)), diamond(g.d1, g.x2).scaled_right(cba));
  s.eq("self-x1-d1", dra_theta(diamond(g.x1, g.d1)), diamond(g.x1, g.d1));
  s.eq("self-x2-d2", dra_theta(diamond(g.x2, g.d2)), diamond(g.x2, g.d2));
  std::mt19937 rng(kDomainSampleSeed + 1);
  int bad_anti = 0, bad_inv = 0;
  const int samples = 20;
  for (int k = 0; k < samples; ++k) {
    const DraElem u = random_dra_elem(rng);
    const DraElem v = random_dra_elem(rng);
    if (dra_theta(diamond(u, v)) != diamond(dra_theta(v), dra_theta(u))) ++bad_anti;
    if (dra_theta(dra_theta(u)) != u) ++bad_inv;
  }
  s.flag("anti-hom-sample", bad_anti == 0, std::to_string(bad_anti) + " of 20 pairs differ", "Theta(u<>v)",
         "Theta(v)<>Theta(u)");
  s.flag("involution-sample", bad_inv == 0, std::to_string(bad_inv) + " of 20 elements differ", "Theta(Theta(u))", "u");
  return s.take();
}

Report verify_ansatz(const AffineSigmaData& data) {
  Suite s("ansatz");
  try {
    SkewAffineSigma checked(data);
    s.flag("construct", true, {});
  } catch (const GwaError& e) {
    s.flag("construct", false, e.what());
  }
  try {
    const SkewAffineSigma sigma(data, SkewAffineSigma::Check::skip);
    for (const auto& [name, d] : sigma.commutator_defects()) s.eq("commute-" + name, d, BasePoly(sigma.rank()));
  } catch (const GwaError&) {
    // shape errors are already reported by `construct`
  }
  return s.take();
}

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& e : r.entries) {
    out += e.pass ? "[PASS] " : "[FAIL] ";
    out += e.suite + ":" + e.id;
    if (!e.pass) out += " " + e.residual;
    out += "\n";
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bootstrap", "presentation", "lemma32", "coefficients", "normalized",
                                              "appendix",  "sigma",        "gwa",     "projector",    "limit",
                                              "domain_sample", "triangular", "theta"};
  return names;
}

Report run_suite(std::string_view name) {
  static const std::vector<std::pair<std::string_view, std::function<Report()>>> table{
      {"bootstrap", [] { return verify_bootstrap(); }},
      {"presentation", [] { return verify_presentation(); }},
      {"lemma32", [] { return verify_lemma32(); }},
      {"coefficients", [] { return verify_coefficients(); }},
      {"normalized", [] { return verify_normalized(); }},
      {"appendix", [] { return verify_appendix(); }},
      {"sigma", [] { return verify_sigma_commute(); }},
      {"gwa", [] { return verify_gwa_iso(); }},
      {"projector", [] { return verify_projector(); }},
      {"limit", [] { return verify_limit(); }},
      {"domain_sample", [] { return verify_domain_sample(); }},
      {"triangular", [] { return verify_triangular(); }},
      {"theta", [] { return verify_theta(); }},
  };
  if (name == "all") {
    Report r;
    for (const auto& [n, f] : table) r.append(f());
    return r;
  }
  for (const auto& [n, f] : table)
    if (n == name) return f();
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace drasp4
