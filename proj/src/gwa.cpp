#include "drasp4/gwa.hpp"

namespace drasp4 {

namespace {

BasePoly::Exps zero_exps(int rank) { return BasePoly::Exps(static_cast<std::size_t>(rank), 0); }

std::string exps_to_string(const BasePoly::Exps& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += "t" + std::to_string(k + 1);
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

}  // namespace

BasePoly::BasePoly(int rank, const RatFunc& c) : rank_(rank) { add_term(zero_exps(rank), c); }

BasePoly BasePoly::t(int rank, int i) {
  BasePoly b(rank);
  Exps e = zero_exps(rank);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  b.add_term(e, RatFunc(1));
  return b;
}

int BasePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

std::optional<RatFunc> BasePoly::as_scalar() const {
  if (terms_.empty()) return RatFunc();
  if (terms_.size() == 1 && terms_.begin()->first == zero_exps(rank_)) return terms_.begin()->second;
  return std::nullopt;
}

RatFunc BasePoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFunc() : it->second;
}

void BasePoly::add_term(const Exps& e, const RatFunc& c) {
  if (static_cast<int>(e.size()) != rank_) throw GwaError("base polynomial rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BasePoly::check_rank(const BasePoly& o) const {
  if (o.rank_ != rank_) throw GwaError("base polynomial rank mismatch");
}

BasePoly BasePoly::operator-() const {
  BasePoly b = *this;
  for (auto& [e, c] : b.terms_) c = -c;
  return b;
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  a.check_rank(b);
  BasePoly out(a.rank_);
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) {
      BasePoly::Exps e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

BasePoly BasePoly::scaled(const RatFunc& c) const {
  BasePoly b(rank_);
  if (c.is_zero()) return b;
  b = *this;
  for (auto& [e, v] : b.terms_) v = c * v;
  return b;
}

BasePoly BasePoly::shifted_coeffs(std::pair<int, int> delta) const {
  BasePoly b = *this;
  for (auto& [e, v] : b.terms_) v = rf_shift(v, delta);
  return b;
}

std::string BasePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = exps_to_string(e);
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

BasePoly pow(const BasePoly& b, unsigned k) {
  BasePoly out(b.rank(), RatFunc(1));
  for (unsigned j = 0; j < k; ++j) out = out * b;
  return out;
}

SkewAffineSigma::SkewAffineSigma(AffineSigmaData data, Check check) : data_(std::move(data)) {
  const std::size_t n = data_.c.size();
  if (n == 0 || data_.shift.size() != n || data_.g.size() != n)
    throw GwaError("skew-affine data: shift, c and g must all have one entry per index");
  for (const auto& row : data_.g)
    if (row.size() != n) throw GwaError("skew-affine data: g must be a square matrix");
  const int r = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    BasePoly f(r, data_.c[i]);
    for (std::size_t j = 0; j < n; ++j) f += BasePoly::t(r, static_cast<int>(j) + 1).scaled(data_.g[i][j]);
    fwd_.push_back(f);

    const std::pair<int, int> back{-data_.shift[i].first, -data_.shift[i].second};
    const RatFunc gii = rf_shift(data_.g[i][i], back);
    if (gii.is_zero()) throw GwaError("sigma_" + std::to_string(i + 1) + " is not invertible: g_ii = 0");
    BasePoly v = BasePoly::t(r, static_cast<int>(i) + 1) - BasePoly(r, rf_shift(data_.c[i], back));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) v -= BasePoly::t(r, static_cast<int>(j) + 1).scaled(rf_shift(data_.g[i][j], back));
    inv_.push_back(v.scaled(gii.inverse()));
  }
  if (check == Check::skip) return;
  const auto defects = commutator_defects();
  for (const auto& [name, d] : defects)
    if (!d.is_zero()) throw GwaError("automorphisms do not commute on " + name + ": defect " + d.to_string());
}

BasePoly SkewAffineSigma::apply_once(int i, const BasePoly& b, bool inverse) const {
  const std::size_t k = static_cast<std::size_t>(i - 1);
  std::pair<int, int> sh = data_.shift.at(k);
  if (inverse) sh = {-sh.first, -sh.second};
  const BasePoly& img = inverse ? inv_[k] : fwd_[k];
  BasePoly out(rank());
  for (const auto& [e, c] : b.terms()) {
    BasePoly::Exps rest = e;
    rest[k] = 0;
    BasePoly term(rank());
    term.add_term(rest, rf_shift(c, sh));
    out += term * pow(img, static_cast<unsigned>(e[k]));
  }
  return out;
}

BasePoly SkewAffineSigma::apply(int i, const BasePoly& b, int k) const {
  if (i < 1 || i > rank()) throw GwaError("sigma index out of range");
  BasePoly out = b;
  for (int j = 0; j < std::abs(k); ++j) out = apply_once(i, out, k < 0);
  return out;
}

BasePoly SkewAffineSigma::image_of_t(int i) const { return fwd_.at(static_cast<std::size_t>(i - 1)); }

std::vector<std::pair<std::string, BasePoly>> SkewAffineSigma::commutator_defects() const {
  std::vector<std::pair<std::string, BasePoly>> out;
  const int n = rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        const BasePoly t = BasePoly::t(n, k);
        const BasePoly d = apply(i, apply(j, t)) - apply(j, apply(i, t));
        out.emplace_back("s" + std::to_string(i) + "s" + std::to_string(j) + "(t" + std::to_string(k) + ")", d);
      }
    }
  }
  return out;
}

GwaElem::GwaElem(const BasePoly& b) : rank_(b.rank()) { add_term(zero_exps(rank_), b); }

GwaElem GwaElem::monomial(const Exps& m, const BasePoly& b) {
  GwaElem u(b.rank());
  u.add_term(m, b);
  return u;
}

GwaElem GwaElem::x(int rank, int i) {
  Exps m = zero_exps(rank);
  m.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(m, BasePoly(rank, RatFunc(1)));
}

GwaElem GwaElem::y(int rank, int i) {
  Exps m = zero_exps(rank);
  m.at(static_cast<std::size_t>(i - 1)) = -1;
  return monomial(m, BasePoly(rank, RatFunc(1)));
}

void GwaElem::add_term(const Exps& m, const BasePoly& b) {
  if (static_cast<int>(m.size()) != rank_ || b.rank() != rank_) throw GwaError("GWA element rank mismatch");
  if (b.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, b);
  if (!inserted) {
    it->second += b;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GwaElem GwaElem::operator-() const {
  GwaElem u = *this;
  for (auto& [m, b] : u.terms_) b = -b;
  return u;
}

GwaElem& GwaElem::operator+=(const GwaElem& o) {
  for (const auto& [m, b] : o.terms_) add_term(m, b);
  return *this;
}

GwaElem& GwaElem::operator-=(const GwaElem& o) {
  for (const auto& [m, b] : o.terms_) add_term(m, -b);
  return *this;
}

std::string GwaElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, b] = *it;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += (m[k] > 0 ? "X" : "Y") + std::to_string(k + 1);
      if (std::abs(m[k]) > 1) mono += "^" + std::to_string(std::abs(m[k]));
    }
    std::string term;
    const auto sc = b.as_scalar();
    if (mono.empty()) {
      term = "(" + b.to_string() + ")";
    } else if (sc && sc->is_one()) {
      term = mono;
    } else {
      term = "(" + b.to_string() + ") " + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

GwaElem gwa_mul(const SkewAffineSigma& sigma, const GwaElem& u, const GwaElem& v) {
  const int n = sigma.rank();
  if (u.rank() != n || v.rank() != n) throw GwaError("GWA element rank mismatch");
  GwaElem out(n);
  for (const auto& [m1, b1] : u.terms()) {
    for (const auto& [m2, b2] : v.terms()) {
      // b1 Z^m1 b2 Z^m2 = b1 sigma^m1(b2) Z^m1 Z^m2
      BasePoly moved = b2;
      for (int i = 1; i <= n; ++i) moved = sigma.apply(i, moved, m1[static_cast<std::size_t>(i - 1)]);
      BasePoly coeff = b1 * moved;
      GwaElem::Exps s(static_cast<std::size_t>(n), 0);
      for (int i = 1; i <= n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i - 1);
        int p = m1[k];
        int q = m2[k];
        BasePoly beta(n, RatFunc(1));
        const BasePoly t = BasePoly::t(n, i);
        // X^p Y^q = sigma^p(t) X^(p-1) Y^(q-1),  Y^p X^q = sigma^(1-p)(t) Y^(p-1) X^(q-1)
        while (p > 0 && q < 0) {
          beta = beta * sigma.apply(i, t, p);
          --p;
          ++q;
        }
        while (p < 0 && q > 0) {
          beta = beta * sigma.apply(i, t, p + 1);
          ++p;
          --q;
        }
        // move beta_i left past Z_1^s1 ... Z_{i-1}^s(i-1)
        for (int j = i - 1; j >= 1; --j) beta = sigma.apply(j, beta, s[static_cast<std::size_t>(j - 1)]);
        coeff = coeff * beta;
        s[k] = m1[k] + m2[k];
      }
      out.add_term(s, coeff);
    }
  }
  return out;
}

AffineSigmaData dra_sigma_data(CoeffSource src) {
  const PresentationTable& p = presentation_table(src);
  AffineSigmaData d;
  d.shift = {{-1, 0}, {1, -1}};
  d.c = {p.c_hat1, p.c_hat2};
  d.g = {{p.f_hat11, p.f_hat12}, {p.f_hat21, p.f_hat22}};
  return d;
}

const SkewAffineSigma& dra_sigma() {
  static const SkewAffineSigma s(dra_sigma_data(CoeffSource::derived));
  return s;
}

const SkewAffineSigma& dra_sigma_stated_unchecked() {
  static const SkewAffineSigma s(dra_sigma_data(CoeffSource::stated), SkewAffineSigma::Check::skip);
  return s;
}

BasePoly sigma_apply(int i, const BasePoly& b) { return dra_sigma().apply(i, b); }

SkewAffineSigma weyl_example_sigma(int n) {
  if (n < 1 || n > 2) throw GwaError("the Weyl example is available for n = 1, 2");
  AffineSigmaData d;
  for (int i = 0; i < n; ++i) {
    d.shift.emplace_back(0, 0);
    d.c.emplace_back(-1);
    std::vector<RatFunc> row(static_cast<std::size_t>(n), RatFunc(0));
    row[static_cast<std::size_t>(i)] = RatFunc(1);
    d.g.push_back(row);
  }
  return SkewAffineSigma(std::move(d));
}

WeylElem weyl_example_map(const GwaElem& u) {
  const int n = u.rank();
  WeylElem out;
  for (const auto& [m, b] : u.terms()) {
    WeylElem base;
    for (const auto& [e, c] : b.terms()) {
      if (!c.is_constant()) throw GwaError("Weyl example coefficients must be constants");
      WeylElem term(c.constant_value());
      for (int i = 1; i <= n; ++i)
        term = term * weyl_pow(WeylElem::d(i) * WeylElem::x(i), static_cast<unsigned>(e[static_cast<std::size_t>(i - 1)]));
      base += term;
    }
    WeylElem z(1);
    for (int i = 1; i <= n; ++i) {
      const int k = m[static_cast<std::size_t>(i - 1)];
      z = z * weyl_pow(k > 0 ? WeylElem::x(i) : WeylElem::d(i), static_cast<unsigned>(std::abs(k)));
    }
    out += base * z;
  }
  return out;
}

namespace {

const DraElem& t_power(int i, int k) {
  thread_local std::map<std::pair<int, int>, DraElem> cache;
  if (auto it = cache.find({i, k}); it != cache.end()) return it->second;
  const NormalizedGens& g = normalized_gens();
  DraElem out(1);
  if (k > 0) {
    const DraElem ti = i == 1 ? diamond(g.d1, g.x1) : diamond(g.d2, g.x2);
    out = diamond(t_power(i, k - 1), ti);
  }
  return cache.emplace(std::make_pair(i, k), std::move(out)).first->second;
}

const DraElem& z_image(const GwaElem::Exps& m) {
  thread_local std::map<GwaElem::Exps, DraElem> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  const NormalizedGens& g = normalized_gens();
  // Y1, Y2, X1, X2 order
  DraElem out(1);
  for (int j = 0; j < -m[0]; ++j) out = diamond(out, g.d1);
  for (int j = 0; j < -m[1]; ++j) out = diamond(out, g.d2);
  for (int j = 0; j < m[0]; ++j) out = diamond(out, g.x1);
  for (int j = 0; j < m[1]; ++j) out = diamond(out, g.x2);
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

DraElem phi(const BasePoly& b) {
  if (b.rank() != 2) throw GwaError("phi is defined on rank-two elements");
  DraElem out;
  for (const auto& [e, c] : b.terms()) out += diamond(t_power(1, e[0]), t_power(2, e[1])).scaled_left(c);
  return out;
}

DraElem phi(const GwaElem& u) {
  if (u.rank() != 2) throw GwaError("phi is defined on rank-two elements");
  DraElem out;
  for (const auto& [m, b] : u.terms()) out += diamond(phi(b), z_image(m));
  return out;
}

std::vector<GwaElem::Exps> gwa_monomials(int maxdeg) {
  std::vector<GwaElem::Exps> out;
  for (int total = 0; total <= maxdeg; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = total - a; b >= 0; --b)
        for (int c = total - a - b; c >= 0; --c) out.push_back({a, b, c, total - a - b - c});
  return out;
}

}  // namespace drasp4
