#include "drasp4/weyl.hpp"

#include <vector>

namespace drasp4 {

WeylElem::WeylElem(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace(WeylMono{}, c);
}

WeylElem WeylElem::monomial(const WeylMono& m, GaussRat c) {
  WeylElem u;
  u.add_term(m, c);
  return u;
}

WeylElem WeylElem::gen(WeylGen g) {
  WeylMono m;
  m.e[static_cast<std::size_t>(g)] = 1;
  return monomial(m);
}

int WeylElem::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussRat WeylElem::coeff(const WeylMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

void WeylElem::add_term(const WeylMono& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElem WeylElem::operator-() const {
  WeylElem u = *this;
  for (auto& [m, c] : u.terms_) c = -c;
  return u;
}

WeylElem& WeylElem::operator+=(const WeylElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElem& WeylElem::operator-=(const WeylElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElem operator*(const GaussRat& c, const WeylElem& u) {
  WeylElem out;
  if (c.is_zero()) return out;
  out = u;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

// x^p d^q = sum_k (-1)^k k! C(p,k) C(q,k) d^(q-k) x^(p-k)
std::vector<std::pair<int, long>> reorder_coeffs(int p, int q) {
  std::vector<std::pair<int, long>> out;
  for (int k = 0; k <= std::min(p, q); ++k) {
    long c = factorial(k) * binom(p, k) * binom(q, k);
    out.emplace_back(k, (k % 2 == 0) ? c : -c);
  }
  return out;
}

}  // namespace

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v) {
  WeylElem out;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      const GaussRat c = c1 * c2;
      // middle factor x2^c1 x1^d1 d1^a2 d2^b2 reorders independently per index
      const auto r1 = reorder_coeffs(m1.e[3], m2.e[0]);
      const auto r2 = reorder_coeffs(m1.e[2], m2.e[1]);
      for (const auto& [k1, s1] : r1) {
        for (const auto& [k2, s2] : r2) {
          WeylMono m;
          m.e[0] = m1.e[0] + m2.e[0] - k1;
          m.e[1] = m1.e[1] + m2.e[1] - k2;
          m.e[2] = m1.e[2] + m2.e[2] - k2;
          m.e[3] = m1.e[3] + m2.e[3] - k1;
          out.add_term(m, c * GaussRat(s1 * s2));
        }
      }
    }
  }
  return out;
}

WeylElem weyl_pow(const WeylElem& u, unsigned k) {
  WeylElem out(1);
  for (unsigned j = 0; j < k; ++j) out = weyl_mul(out, u);
  return out;
}

WeylElem weyl_bracket(const WeylElem& u, const WeylElem& v) { return weyl_mul(u, v) - weyl_mul(v, u); }

WeylElem vartheta(const WeylElem& u) {
  // theta(d1^a d2^b x2^c x1^d) = d1^d d2^c x2^b x1^a, already normal ordered
  WeylElem out;
  for (const auto& [m, c] : u.terms()) {
    WeylMono r;
    r.e = {m.e[3], m.e[2], m.e[1], m.e[0]};
    out.add_term(r, c);
  }
  return out;
}

std::string to_string(const WeylMono& m) {
  static const char* names[4] = {"d1", "d2", "x2", "x1"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (m.e[static_cast<std::size_t>(k)] == 0) continue;
    if (!out.empty()) out += " ";
    out += names[k];
    if (m.e[static_cast<std::size_t>(k)] > 1) out += "^" + std::to_string(m.e[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::string to_string(const WeylElem& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono = to_string(m);
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

}  // namespace drasp4
