#include "drasp4/scalars.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace drasp4 {

// ---------------------------------------------------------------- GaussRat

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)) {
  re_.canonicalize();
  if (sgn(im) != 0) {
    im.canonicalize();
    im_ = std::move(im);
  }
}

const mpq_class& GaussRat::im() const {
  static const mpq_class zero(0);
  return im_ ? *im_ : zero;
}

GaussRat GaussRat::frac(long num, long den) {
  if (den == 0) throw ScalarError("zero divisor in scalar field");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRat(q, 0);
}

GaussRat GaussRat::operator-() const {
  GaussRat r;
  r.re_ = -re_;
  if (im_) r.im_ = -*im_;
  return r;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (o.im_) {
    if (im_) {
      *im_ += *o.im_;
      settle();
    } else {
      im_ = *o.im_;
    }
  }
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (o.im_) {
    if (im_) {
      *im_ -= *o.im_;
      settle();
    } else {
      im_ = -*o.im_;
    }
  }
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (!im_ && !o.im_) {
    re_ *= o.re_;
    return *this;
  }
  const mpq_class& ai = im();
  const mpq_class& bi = o.im();
  mpq_class r = re_ * o.re_ - ai * bi;
  mpq_class m = re_ * bi + ai * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  settle();
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw ScalarError("zero divisor in scalar field");
  if (!im_) return GaussRat(1 / re_, 0);
  mpq_class n = re_ * re_ + *im_ * *im_;
  return GaussRat(re_ / n, -*im_ / n);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string GaussRat::to_string() const {
  if (!im_) return re_.get_str();
  const mpq_class& m = *im_;
  std::string imag;
  if (m == 1) {
    imag = "i";
  } else if (m == -1) {
    imag = "-i";
  } else {
    imag = m.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (sgn(m) > 0) out += "+";
  out += imag + ")";
  return out;
}

GaussRat pow(const GaussRat& base, unsigned exp) {
  GaussRat out(1);
  for (unsigned k = 0; k < exp; ++k) out *= base;
  return out;
}

// ---------------------------------------------------------------- Poly2

namespace {

struct GrlexGreater {
  bool operator()(const Exp2& x, const Exp2& y) const { return grlex_less(y, x); }
};
using TermMap = std::map<Exp2, GaussRat, GrlexGreater>;

std::vector<Poly2::Term> flatten(const TermMap& m) {
  std::vector<Poly2::Term> out;
  out.reserve(m.size());
  for (const auto& [e, c] : m)
    if (!c.is_zero()) out.push_back({e, c});
  return out;
}

}  // namespace

Poly2::Poly2(const GaussRat& c) {
  if (!c.is_zero()) terms_.push_back({{0, 0}, c});
}

Poly2 Poly2::monomial(Exp2 e, GaussRat c) {
  Poly2 p;
  if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

Poly2 Poly2::affine(long ca, long cb, long c0) {
  return monomial({1, 0}, ca) + monomial({0, 1}, cb) + Poly2(c0);
}

Poly2 Poly2::from_terms(std::vector<Term> terms) {
  Poly2 p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly2::normalize() {
  TermMap m;
  for (auto& t : terms_) m[t.exp] += t.coeff;
  terms_ = flatten(m);
}

GaussRat Poly2::constant_value() const {
  if (!is_constant()) throw ScalarError("polynomial is not constant");
  return terms_.empty() ? GaussRat(0) : terms_[0].coeff;
}

int Poly2::degree_a() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exp.a);
  return d;
}

int Poly2::degree_b() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exp.b);
  return d;
}

Poly2 Poly2::leading_form() const {
  Poly2 p;
  if (terms_.empty()) return p;
  const int top = terms_.front().exp.total();
  for (const auto& t : terms_)
    if (t.exp.total() == top) p.terms_.push_back(t);
  return p;
}

Poly2 Poly2::operator-() const {
  Poly2 p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && grlex_less(j->exp, i->exp))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_less(i->exp, j->exp)) {
      out.push_back(*j++);
    } else {
      GaussRat c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  TermMap m;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) m[{s.exp.a + t.exp.a, s.exp.b + t.exp.b}] += s.coeff * t.coeff;
  Poly2 p;
  p.terms_ = flatten(m);
  return p;
}

Poly2 Poly2::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  Poly2 p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly2 pow(const Poly2& base, unsigned exp) {
  Poly2 out(1);
  for (unsigned k = 0; k < exp; ++k) out = out * base;
  return out;
}

namespace {

// Coefficients of (v + d)^n: binomial(n, k) d^(n-k) for k = 0..n.
std::vector<GaussRat> shifted_power(int n, int d) {
  std::vector<GaussRat> out(static_cast<std::size_t>(n) + 1);
  mpz_class binom = 1;
  for (int k = 0; k <= n; ++k) {
    mpz_class dp;
    mpz_pow_ui(dp.get_mpz_t(), mpz_class(d).get_mpz_t(), static_cast<unsigned long>(n - k));
    out[static_cast<std::size_t>(k)] = GaussRat(mpq_class(binom * dp), 0);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

}  // namespace

Poly2 Poly2::shifted(int da, int db) const {
  if ((da == 0 && db == 0) || is_constant()) return *this;
  TermMap m;
  for (const auto& t : terms_) {
    const auto pa = shifted_power(t.exp.a, da);
    const auto pb = shifted_power(t.exp.b, db);
    for (int i = 0; i <= t.exp.a; ++i) {
      if (pa[static_cast<std::size_t>(i)].is_zero()) continue;
      GaussRat ci = t.coeff * pa[static_cast<std::size_t>(i)];
      for (int j = 0; j <= t.exp.b; ++j) {
        if (pb[static_cast<std::size_t>(j)].is_zero()) continue;
        m[{i, j}] += ci * pb[static_cast<std::size_t>(j)];
      }
    }
  }
  Poly2 p;
  p.terms_ = flatten(m);
  return p;
}

GaussRat Poly2::eval(const GaussRat& a, const GaussRat& b) const {
  GaussRat s;
  for (const auto& t : terms_) s += t.coeff * pow(a, static_cast<unsigned>(t.exp.a)) * pow(b, static_cast<unsigned>(t.exp.b));
  return s;
}

std::string Poly2::to_string(const char* va_name, const char* vb_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono;
    auto add_var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add_var(va_name, t.exp.a);
    add_var(vb_name, t.exp.b);
    std::string term;
    if (mono.empty()) {
      term = t.coeff.to_string();
    } else if (t.coeff.is_one()) {
      term = mono;
    } else if (t.coeff == GaussRat(-1)) {
      term = "-" + mono;
    } else {
      term = t.coeff.to_string() + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

// ------------------------------------------------- univariate helpers

namespace {

// Dense polynomial in va, index = degree, no trailing zeros.
using UPoly = std::vector<GaussRat>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  trim(out);
  return out;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly uscale(const UPoly& a, const GaussRat& c) {
  if (c.is_zero()) return {};
  UPoly out = a;
  for (auto& x : out) x *= c;
  return out;
}

// Returns (quotient, remainder).
std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ScalarError("zero divisor in scalar field");
  UPoly r = a;
  UPoly q;
  const GaussRat lead_inv = b.back().inverse();
  if (udeg(r) >= udeg(b)) q.assign(static_cast<std::size_t>(udeg(r) - udeg(b) + 1), GaussRat());
  while (!r.empty() && udeg(r) >= udeg(b)) {
    const int shift = udeg(r) - udeg(b);
    const GaussRat c = r.back() * lead_inv;
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t k = 0; k < b.size(); ++k) r[k + static_cast<std::size_t>(shift)] -= c * b[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly umonic(const UPoly& a) {
  if (a.empty()) return a;
  return uscale(a, a.back().inverse());
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a);
}

bool uis_one(const UPoly& a) { return a.size() == 1 && a[0].is_one(); }

// Polynomial in vb with coefficients in K[va]; index = vb degree.
using RPoly = std::vector<UPoly>;

void rtrim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int rdeg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly to_rec(const Poly2& p) {
  RPoly out(static_cast<std::size_t>(std::max(p.degree_b(), -1) + 1));
  for (const auto& t : p.terms()) {
    auto& u = out[static_cast<std::size_t>(t.exp.b)];
    if (u.size() <= static_cast<std::size_t>(t.exp.a)) u.resize(static_cast<std::size_t>(t.exp.a) + 1);
    u[static_cast<std::size_t>(t.exp.a)] = t.coeff;
  }
  for (auto& u : out) trim(u);
  rtrim(out);
  return out;
}

Poly2 from_rec(const RPoly& r) {
  std::vector<Poly2::Term> terms;
  for (std::size_t j = 0; j < r.size(); ++j)
    for (std::size_t i = 0; i < r[j].size(); ++i)
      if (!r[j][i].is_zero()) terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, r[j][i]});
  return Poly2::from_terms(std::move(terms));
}

UPoly rcontent(const RPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? umonic(c) : ugcd(g, c);
    if (uis_one(g)) break;
  }
  return g;
}

RPoly rdiv_coeffs(const RPoly& p, const UPoly& c) {
  if (uis_one(c)) return p;
  RPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto [q, r] = udivmod(p[k], c);
    if (!r.empty()) throw ScalarError("internal: content does not divide");
    out[k] = std::move(q);
  }
  return out;
}

RPoly rprimitive(const RPoly& p) {
  if (p.empty()) return p;
  return rdiv_coeffs(p, rcontent(p));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving K[va][vb].
RPoly rprem(const RPoly& a, const RPoly& b) {
  RPoly r = a;
  const int db = rdeg(b);
  const UPoly& lb = b.back();
  int e = rdeg(a) - db + 1;
  while (!r.empty() && rdeg(r) >= db) {
    const int shift = rdeg(r) - db;
    const UPoly lr = r.back();
    for (auto& c : r) c = umul(c, lb);
    for (std::size_t k = 0; k < b.size(); ++k) {
      auto& slot = r[k + static_cast<std::size_t>(shift)];
      slot = usub(slot, umul(lr, b[k]));
    }
    rtrim(r);
    --e;
  }
  if (e > 0) {
    UPoly f{GaussRat(1)};
    for (int k = 0; k < e; ++k) f = umul(f, lb);
    for (auto& c : r) c = umul(c, f);
  }
  return r;
}

// Primitive remainder sequence over K[va][vb].
RPoly rgcd_primitive(RPoly a, RPoly b) {
  if (rdeg(a) < rdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (rdeg(b) == 0) return RPoly{UPoly{GaussRat(1)}};
    RPoly r = rprem(a, b);
    a = std::move(b);
    b = rprimitive(r);
  }
  return a;
}

std::optional<RPoly> rtry_div(const RPoly& a, const RPoly& b) {
  if (b.empty()) throw ScalarError("zero divisor in scalar field");
  RPoly r = a;
  RPoly q;
  if (rdeg(r) >= rdeg(b)) q.assign(static_cast<std::size_t>(rdeg(r) - rdeg(b) + 1), UPoly());
  while (!r.empty()) {
    if (rdeg(r) < rdeg(b)) return std::nullopt;
    const int shift = rdeg(r) - rdeg(b);
    auto [c, rem] = udivmod(r.back(), b.back());
    if (!rem.empty()) return std::nullopt;
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t k = 0; k < b.size(); ++k) {
      auto& slot = r[k + static_cast<std::size_t>(shift)];
      slot = usub(slot, umul(c, b[k]));
    }
    if (!r.back().empty()) throw ScalarError("internal: division did not cancel leading term");
    rtrim(r);
  }
  rtrim(q);
  return q;
}

// p(va, b0) as a polynomial in va.
UPoly eval_b(const Poly2& p, const GaussRat& b0) {
  UPoly out(static_cast<std::size_t>(std::max(p.degree_a(), -1) + 1));
  for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exp.a)] += t.coeff * pow(b0, static_cast<unsigned>(t.exp.b));
  trim(out);
  return out;
}

// Content of p viewed as a polynomial in va over K[vb]; a polynomial in vb.
UPoly content_in_b(const Poly2& p) {
  std::vector<UPoly> coeffs(static_cast<std::size_t>(std::max(p.degree_a(), -1) + 1));
  for (const auto& t : p.terms()) {
    auto& u = coeffs[static_cast<std::size_t>(t.exp.a)];
    if (u.size() <= static_cast<std::size_t>(t.exp.b)) u.resize(static_cast<std::size_t>(t.exp.b) + 1);
    u[static_cast<std::size_t>(t.exp.b)] = t.coeff;
  }
  UPoly g;
  for (auto& c : coeffs) {
    trim(c);
    if (c.empty()) continue;
    g = g.empty() ? umonic(c) : ugcd(g, c);
    if (uis_one(g)) break;
  }
  return g;
}

// True when gcd(a, b) is certainly a unit. A coprime specialization vb = b0
// that keeps both va-degrees forces the gcd into K[vb], which the va-contents
// then rule out.
bool certainly_coprime(const Poly2& a, const Poly2& b) {
  static const long points[] = {7, -11, 23};
  for (long b0 : points) {
    const UPoly ea = eval_b(a, GaussRat(b0));
    const UPoly eb = eval_b(b, GaussRat(b0));
    if (udeg(ea) != a.degree_a() || udeg(eb) != b.degree_a()) continue;
    if (udeg(ugcd(ea, eb)) > 0) return false;
    const UPoly ca = content_in_b(a);
    if (udeg(ca) == 0) return true;
    const UPoly cb = content_in_b(b);
    return udeg(ugcd(ca, cb)) == 0;
  }
  return false;
}

Poly2 make_monic(const Poly2& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading().coeff.inverse());
}

}  // namespace

std::optional<Poly2> try_divide(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw ScalarError("zero divisor in scalar field");
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  auto q = rtry_div(to_rec(a), to_rec(b));
  if (!q) return std::nullopt;
  return from_rec(*q);
}

Poly2 divexact(const Poly2& a, const Poly2& b) {
  auto q = try_divide(a, b);
  if (!q) throw ScalarError("internal: inexact polynomial division");
  return *q;
}

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly2(1);
  if (certainly_coprime(a, b)) return Poly2(1);
  const RPoly ra = to_rec(a);
  const RPoly rb = to_rec(b);
  const UPoly ca = rcontent(ra);
  const UPoly cb = rcontent(rb);
  const UPoly c = ugcd(ca, cb);
  RPoly g = rgcd_primitive(rdiv_coeffs(ra, ca), rdiv_coeffs(rb, cb));
  g = rprimitive(g);
  for (auto& coeff : g) coeff = umul(coeff, c);
  return make_monic(from_rec(g));
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) throw ScalarError("zero divisor in scalar field");
  if (num.is_zero()) {
    num_ = Poly2();
    den_ = Poly2(1);
    return;
  }
  Poly2 g = gcd(num, den);
  Poly2 n = g.is_constant() ? num : divexact(num, g);
  Poly2 d = g.is_constant() ? den : divexact(den, g);
  const GaussRat lead_inv = d.leading().coeff.inverse();
  num_ = n.scaled(lead_inv);
  den_ = d.scaled(lead_inv);
}

bool RatFunc::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }

GaussRat RatFunc::constant_value() const {
  if (!is_constant()) throw ScalarError("rational function is not constant");
  return num_.is_zero() ? GaussRat(0) : num_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Poly2 n = num_ + o.num_;
    if (den_.is_constant()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = RatFunc(n, den_);
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): any common factor of the new numerator and
  // denominator already divides g.
  const Poly2 g = gcd(den_, o.den_);
  const bool unit = g.is_constant();
  const Poly2 b1 = unit ? den_ : divexact(den_, g);
  const Poly2 d1 = unit ? o.den_ : divexact(o.den_, g);
  Poly2 n = num_ * d1 + o.num_ * b1;
  Poly2 d = den_ * d1;
  if (n.is_zero()) return *this = RatFunc();
  if (!unit) {
    const Poly2 h = gcd(n, g);
    if (!h.is_constant()) {
      n = divexact(n, h);
      d = divexact(d, h);
    }
  }
  const GaussRat lead_inv = d.leading().coeff.inverse();
  num_ = n.scaled(lead_inv);
  den_ = d.scaled(lead_inv);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel: (a/b)(c/d) with gcd(a, d), gcd(c, b) removed.
  const Poly2 g1 = gcd(num_, o.den_);
  const Poly2 g2 = gcd(o.num_, den_);
  const Poly2 a = g1.is_constant() ? num_ : divexact(num_, g1);
  const Poly2 d = g1.is_constant() ? o.den_ : divexact(o.den_, g1);
  const Poly2 c = g2.is_constant() ? o.num_ : divexact(o.num_, g2);
  const Poly2 b = g2.is_constant() ? den_ : divexact(den_, g2);
  Poly2 n = a * c;
  Poly2 m = b * d;
  const GaussRat lead_inv = m.leading().coeff.inverse();
  num_ = n.scaled(lead_inv);
  den_ = m.scaled(lead_inv);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ScalarError("zero divisor in scalar field");
  RatFunc r;
  const GaussRat lead_inv = num_.leading().coeff.inverse();
  r.num_ = den_.scaled(lead_inv);
  r.den_ = num_.scaled(lead_inv);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::shifted(int da, int db) const {
  if (da == 0 && db == 0) return *this;
  RatFunc r;
  r.num_ = num_.shifted(da, db);
  r.den_ = den_.shifted(da, db);
  // Substitution by a translation keeps coprimality and the leading coefficient.
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) {
    // den is monic, hence 1
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc pow(const RatFunc& base, unsigned exp) {
  RatFunc out(1);
  for (unsigned k = 0; k < exp; ++k) out *= base;
  return out;
}

RatFunc rf_binop(BinOp op, const RatFunc& f, const RatFunc& g) {
  switch (op) {
    case BinOp::add: return f + g;
    case BinOp::sub: return f - g;
    case BinOp::mul: return f * g;
    case BinOp::div: return f / g;
  }
  throw ScalarError("unknown operation");
}

RatFunc rf_shift(const RatFunc& f, std::pair<int, int> delta) { return f.shifted(delta.first, delta.second); }

GaussRat rf_eval(const RatFunc& f, std::pair<GaussRat, GaussRat> point) {
  const GaussRat d = f.den().eval(point.first, point.second);
  if (d.is_zero()) throw ScalarError("evaluation at pole");
  return f.num().eval(point.first, point.second) / d;
}

Limit rf_limit_inf(const RatFunc& f) {
  if (f.is_zero()) return LimitZero{};
  const int dn = f.num().total_degree();
  const int dd = f.den().total_degree();
  if (dn < dd) return LimitZero{};
  if (dn > dd) return LimitDivergent{};
  const Poly2 ln = f.num().leading_form();
  const Poly2 ld = f.den().leading_form();
  const GaussRat ratio = ln.leading().coeff / ld.leading().coeff;
  if (ln == ld.scaled(ratio)) return ratio;
  return LimitUndefined{};
}

std::string to_string(const Limit& l) {
  struct V {
    std::string operator()(const GaussRat& g) const { return g.to_string(); }
    std::string operator()(LimitZero) const { return "0"; }
    std::string operator()(LimitDivergent) const { return "divergent"; }
    std::string operator()(LimitUndefined) const { return "undefined"; }
  };
  return std::visit(V{}, l);
}

bool factors_into_coroot_forms(const Poly2& p, int max_shift) {
  if (p.is_zero()) return false;
  // va, vb, va + 2vb, va + vb: the linear parts of H_alpha, H_beta,
  // H_{beta+alpha}, H_{beta+2alpha}.
  static const std::array<std::pair<long, long>, 4> kLinear{{{1, 0}, {0, 1}, {1, 2}, {1, 1}}};
  Poly2 rest = p;
  bool progress = true;
  while (!rest.is_constant() && progress) {
    progress = false;
    for (const auto& [ca, cb] : kLinear) {
      for (int n = -max_shift; n <= max_shift && !rest.is_constant(); ++n) {
        const Poly2 factor = Poly2::affine(ca, cb, n);
        while (auto q = try_divide(rest, factor)) {
          rest = *q;
          progress = true;
          if (rest.is_constant()) break;
        }
      }
    }
  }
  return rest.is_constant();
}

}  // namespace drasp4
