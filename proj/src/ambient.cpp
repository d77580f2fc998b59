#include "drasp4/ambient.hpp"

#include <stdexcept>
#include <unordered_map>

namespace drasp4 {

namespace {

constexpr std::array<std::string_view, kNumGens> kGenNames{"Fb", "Fba", "Fb2a", "Fa", "d1", "d2",
                                                           "x2", "x1",  "Ea",   "Eb2a", "Eba", "Eb"};

std::size_t gi(Gen g) { return static_cast<std::size_t>(g); }
Gen gen_at(std::size_t k) { return static_cast<Gen>(k); }

bool is_e(Gen g) { return gi(g) >= gi(Gen::Ea); }

std::optional<Root> root_of(Gen g) {
  switch (g) {
    case Gen::Ea:
    case Gen::Fa: return Root::alpha;
    case Gen::Eb:
    case Gen::Fb: return Root::beta;
    case Gen::Eba:
    case Gen::Fba: return Root::beta_alpha;
    case Gen::Eb2a:
    case Gen::Fb2a: return Root::beta_2alpha;
    default: return std::nullopt;
  }
}

// Sum of the two tensor components: A in A_2 and X in sp(4).
struct GenParts {
  WeylElem weyl;
  LieElem lie;
};

GenParts parts_of(Gen g) {
  if (auto r = root_of(g)) {
    const Sym s = is_e(g) ? e_of(*r) : f_of(*r);
    return {osc(s), LieElem::basis(s)};
  }
  return {WeylElem::gen(static_cast<WeylGen>(gi(g) - gi(Gen::d1))), LieElem{}};
}

struct GenTables {
  std::array<Weight, kNumGens> weights;
  std::array<std::array<AmbientElem, kNumGens>, kNumGens> brackets;
};

GenTables build_gen_tables() {
  GenTables t;
  for (std::size_t k = 0; k < kNumGens; ++k) {
    const Gen g = gen_at(k);
    if (auto r = root_of(g)) {
      const Weight w = root_weight(*r);
      t.weights[k] = is_e(g) ? w : Weight{-w.first, -w.second};
    } else {
      t.weights[k] = weyl_gen_weight(static_cast<WeylGen>(k - gi(Gen::d1)));
    }
  }
  // [a (x) 1 + 1 (x) A, b (x) 1 + 1 (x) B] = zeta(L) + ([a,b] - omega(L)) (x) 1, L = [A,B]
  for (std::size_t p = 0; p < kNumGens; ++p) {
    const GenParts u = parts_of(gen_at(p));
    for (std::size_t q = 0; q < kNumGens; ++q) {
      const GenParts v = parts_of(gen_at(q));
      LieElem l = lie_bracket(u.lie, v.lie);
      if (!l.constant.is_zero()) throw std::logic_error("internal: basis bracket has a scalar part");
      const WeylElem rem = weyl_bracket(u.weyl, v.weyl) - osc(l);
      if (rem.degree() > 1) throw std::logic_error("internal: generator bracket is not linear");
      t.brackets[p][q] = zeta(l) + AmbientElem::from_weyl(rem);
    }
  }
  return t;
}

const GenTables& gen_tables() {
  static const GenTables t = build_gen_tables();
  return t;
}

RatFunc shift_past(const RatFunc& c, const Weight& w) { return c.shifted(-w.first, -w.second); }

struct MonoHash {
  std::size_t operator()(const std::array<int, 2 * kNumGens>& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : k) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ULL;
    return h;
  }
};

using Cache = std::unordered_map<std::array<int, 2 * kNumGens>, AmbientElem, MonoHash>;

std::array<int, 2 * kNumGens> pack(const AmbMono& a, const AmbMono& b) {
  std::array<int, 2 * kNumGens> k{};
  for (std::size_t j = 0; j < kNumGens; ++j) {
    k[j] = a.e[j];
    k[kNumGens + j] = b.e[j];
  }
  return k;
}

const AmbientElem& gen_times_mono(Gen g, const AmbMono& m);

// y * u, for u in normal form.
AmbientElem gen_times_elem(Gen y, const AmbientElem& u) {
  AmbientElem out;
  const Weight w = gen_tables().weights[gi(y)];
  for (const auto& [n, c] : u.terms()) {
    const RatFunc cs = shift_past(c, w);
    for (const auto& [n2, c2] : gen_times_mono(y, n).terms()) out.add_term(n2, cs * c2);
  }
  return out;
}

const AmbientElem& gen_times_mono(Gen g, const AmbMono& m) {
  thread_local Cache cache;
  AmbMono key_gen;
  key_gen[g] = 1;
  const auto key = pack(key_gen, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::size_t first = kNumGens;
  for (std::size_t k = 0; k < kNumGens; ++k) {
    if (m.e[k] > 0) {
      first = k;
      break;
    }
  }
  AmbientElem out;
  if (first == kNumGens || gi(g) <= first) {
    AmbMono r = m;
    r[g] += 1;
    out = AmbientElem::monomial(r);
  } else {
    // g y m' = y (g m') + [g, y] m'
    const Gen y = gen_at(first);
    AmbMono rest = m;
    rest[y] -= 1;
    const AmbientElem gm = gen_times_mono(g, rest);
    out = gen_times_elem(y, gm);
    for (const auto& [b, c] : gen_tables().brackets[gi(g)][first].terms()) {
      if (b.is_one()) {
        out.add_term(rest, c);
        continue;
      }
      std::size_t bg = 0;
      while (b.e[bg] == 0) ++bg;
      for (const auto& [n, c2] : gen_times_mono(gen_at(bg), rest).terms()) out.add_term(n, c * c2);
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

const AmbientElem& mono_times_mono(const AmbMono& a, const AmbMono& b) {
  thread_local Cache cache;
  const auto key = pack(a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  AmbientElem out = AmbientElem::monomial(b);
  for (std::size_t k = kNumGens; k-- > 0;)
    for (int j = 0; j < a.e[k]; ++j) out = gen_times_elem(gen_at(k), out);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::string_view gen_name(Gen g) { return kGenNames[gi(g)]; }

std::optional<Gen> gen_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kGenNames.size(); ++k)
    if (kGenNames[k] == name) return gen_at(k);
  return std::nullopt;
}

Gen e_gen(Root r) {
  switch (r) {
    case Root::alpha: return Gen::Ea;
    case Root::beta: return Gen::Eb;
    case Root::beta_alpha: return Gen::Eba;
    case Root::beta_2alpha: return Gen::Eb2a;
  }
  return Gen::Ea;
}

Gen f_gen(Root r) {
  switch (r) {
    case Root::alpha: return Gen::Fa;
    case Root::beta: return Gen::Fb;
    case Root::beta_alpha: return Gen::Fba;
    case Root::beta_2alpha: return Gen::Fb2a;
  }
  return Gen::Fa;
}

Gen weyl_to_gen(WeylGen g) { return gen_at(gi(Gen::d1) + static_cast<std::size_t>(g)); }

Gen theta_gen(Gen g) {
  if (auto r = root_of(g)) return is_e(g) ? f_gen(*r) : e_gen(*r);
  switch (g) {
    case Gen::d1: return Gen::x1;
    case Gen::x1: return Gen::d1;
    case Gen::d2: return Gen::x2;
    case Gen::x2: return Gen::d2;
    default: return g;
  }
}

Weight gen_weight(Gen g) { return gen_tables().weights[gi(g)]; }

AmbMono AmbMono::of(Gen g, int k) {
  AmbMono m;
  m[g] = k;
  return m;
}

AmbMono AmbMono::from_weyl(const WeylMono& w) {
  AmbMono m;
  for (std::size_t k = 0; k < 4; ++k) m.e[gi(Gen::d1) + k] = w.e[k];
  return m;
}

int AmbMono::degree() const {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

bool AmbMono::has_f() const {
  for (std::size_t k = 0; k <= gi(Gen::Fa); ++k)
    if (e[k] != 0) return true;
  return false;
}

bool AmbMono::has_e() const {
  for (std::size_t k = gi(Gen::Ea); k < kNumGens; ++k)
    if (e[k] != 0) return true;
  return false;
}

WeylMono AmbMono::weyl_part() const {
  WeylMono w;
  for (std::size_t k = 0; k < 4; ++k) w.e[k] = e[gi(Gen::d1) + k];
  return w;
}

Weight AmbMono::weight() const {
  Weight w{0, 0};
  const auto& ws = gen_tables().weights;
  for (std::size_t k = 0; k < kNumGens; ++k) {
    w.first += e[k] * ws[k].first;
    w.second += e[k] * ws[k].second;
  }
  return w;
}

bool AmbMonoLess::operator()(const AmbMono& a, const AmbMono& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (std::size_t k = 0; k < kNumGens; ++k)
    if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
  return false;
}

AmbientElem::AmbientElem(const RatFunc& c) {
  if (!c.is_zero()) terms_.emplace(AmbMono{}, c);
}

AmbientElem AmbientElem::monomial(const AmbMono& m, RatFunc c) {
  AmbientElem u;
  u.add_term(m, c);
  return u;
}

AmbientElem AmbientElem::gen(Gen g) { return monomial(AmbMono::of(g)); }

AmbientElem AmbientElem::from_weyl(const WeylElem& w) {
  AmbientElem u;
  for (const auto& [m, c] : w.terms()) u.add_term(AmbMono::from_weyl(m), RatFunc(c));
  return u;
}

RatFunc AmbientElem::coeff(const AmbMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::optional<RatFunc> AmbientElem::as_scalar() const {
  if (terms_.empty()) return RatFunc();
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

bool AmbientElem::has_e() const {
  for (const auto& [m, c] : terms_)
    if (m.has_e()) return true;
  return false;
}

bool AmbientElem::has_f() const {
  for (const auto& [m, c] : terms_)
    if (m.has_f()) return true;
  return false;
}

int AmbientElem::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void AmbientElem::add_term(const AmbMono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AmbientElem AmbientElem::operator-() const {
  AmbientElem u = *this;
  for (auto& [m, c] : u.terms_) c = -c;
  return u;
}

AmbientElem& AmbientElem::operator+=(const AmbientElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AmbientElem& AmbientElem::operator-=(const AmbientElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AmbientElem AmbientElem::scaled_left(const RatFunc& c) const {
  AmbientElem u;
  if (c.is_zero()) return u;
  u = *this;
  for (auto& [m, v] : u.terms_) v = c * v;
  return u;
}

AmbientElem AmbientElem::scaled_right(const RatFunc& c) const {
  AmbientElem u;
  if (c.is_zero()) return u;
  u = *this;
  for (auto& [m, v] : u.terms_) v *= shift_past(c, m.weight());
  return u;
}

AmbientElem amb_mul(const AmbientElem& u, const AmbientElem& v) {
  AmbientElem out;
  for (const auto& [m1, c1] : u.terms()) {
    const Weight w = m1.weight();
    for (const auto& [m2, c2] : v.terms()) {
      const RatFunc c = c1 * shift_past(c2, w);
      for (const auto& [m, c3] : mono_times_mono(m1, m2).terms()) out.add_term(m, c * c3);
    }
  }
  return out;
}

AmbientElem amb_pow(const AmbientElem& u, unsigned k) {
  AmbientElem out(1);
  for (unsigned j = 0; j < k; ++j) out = amb_mul(out, u);
  return out;
}

AmbientElem amb_bracket(const AmbientElem& u, const AmbientElem& v) { return amb_mul(u, v) - amb_mul(v, u); }

const AmbientElem& gen_bracket(Gen g, Gen h) { return gen_tables().brackets[gi(g)][gi(h)]; }

AmbientElem zeta(const LieElem& x) {
  AmbientElem out;
  for (Root r : kConvexOrder) {
    out.add_term(AmbMono::of(e_gen(r)), RatFunc(x[e_of(r)]));
    out.add_term(AmbMono::of(f_gen(r)), RatFunc(x[f_of(r)]));
  }
  const RatFunc h = RatFunc(x[Sym::h_alpha]) * RatFunc::va() + RatFunc(x[Sym::h_beta]) * RatFunc::vb() +
                    RatFunc(x.constant);
  out.add_term(AmbMono{}, h);
  return out;
}

AmbientElem ad_E(Root r, const AmbientElem& u) {
  const AmbientElem e = AmbientElem::gen(e_gen(r));
  return amb_mul(e, u) - amb_mul(u, e);
}

AmbientElem red(const AmbientElem& u, Side side) {
  AmbientElem out;
  for (const auto& [m, c] : u.terms()) {
    const bool drop = (side != Side::J && m.has_e()) || (side != Side::I && m.has_f());
    if (!drop) out.add_term(m, c);
  }
  return out;
}

AmbientElem amb_theta(const AmbientElem& u) {
  AmbientElem out;
  for (const auto& [m, c] : u.terms()) {
    // theta(y_1 ... y_k) = theta(y_k) ... theta(y_1), built by left multiplication
    AmbientElem img(1);
    for (std::size_t k = 0; k < kNumGens; ++k)
      for (int j = 0; j < m.e[k]; ++j) img = gen_times_elem(theta_gen(gen_at(k)), img);
    out += img.scaled_right(c);
  }
  return out;
}

std::string to_string(const AmbMono& m) {
  std::string out;
  for (std::size_t k = 0; k < kNumGens; ++k) {
    if (m.e[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += kGenNames[k];
    if (m.e[k] > 1) out += "^" + std::to_string(m.e[k]);
  }
  return out;
}

std::string to_string(const AmbientElem& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string mono = to_string(m);
    std::string term;
    if (mono.empty()) {
      term = "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      term = mono;
    } else {
      term = "(" + c.to_string() + ") " + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

CosetElem::CosetElem(AmbientElem u) : u_(std::move(u)) {
  if (u_.has_e()) throw std::invalid_argument("coset representative has an E-part");
}

DraElem::DraElem(AmbientElem u) : u_(std::move(u)) {
  if (!u_.is_weyl()) throw std::invalid_argument("reduction algebra element has an E- or F-part");
}

}  // namespace drasp4
