#pragma once

// Shared generators and fixture access for the unit tests.

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "drasp4/ambient.hpp"
#include "drasp4/gwa.hpp"
#include "drasp4/scalars.hpp"
#include "drasp4/weyl.hpp"

#ifndef DRASP4_FIXTURE_DIR
#error "DRASP4_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace drasp4::testing {

inline nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(DRASP4_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}

inline long small(std::mt19937& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline GaussRat rand_gauss(std::mt19937& rng) {
  const long re = small(rng, -5, 5);
  const long im = rng() % 4 == 0 ? small(rng, -3, 3) : 0;
  const long den = small(rng, 1, 4);
  return GaussRat(mpq_class(re, den), mpq_class(im, den));
}

/// Up to `terms` terms of total degree <= deg.
inline Poly2 rand_poly(std::mt19937& rng, int deg = 2, int terms = 3) {
  Poly2 p;
  const int n = static_cast<int>(small(rng, 1, terms));
  for (int k = 0; k < n; ++k) {
    const int a = static_cast<int>(small(rng, 0, deg));
    const int b = static_cast<int>(small(rng, 0, deg - a));
    p += Poly2::monomial({a, b}, rand_gauss(rng));
  }
  return p;
}

inline RatFunc rand_ratfunc(std::mt19937& rng) {
  Poly2 den = rand_poly(rng, 1, 2);
  while (den.is_zero()) den = rand_poly(rng, 1, 2);
  return RatFunc(rand_poly(rng, 2, 3), den);
}

inline RatFunc rand_nonzero_ratfunc(std::mt19937& rng) {
  RatFunc f = rand_ratfunc(rng);
  while (f.is_zero()) f = rand_ratfunc(rng);
  return f;
}

inline WeylElem rand_weyl(std::mt19937& rng, int deg = 3, int terms = 3) {
  WeylElem w;
  const int n = static_cast<int>(small(rng, 1, terms));
  for (int k = 0; k < n; ++k) {
    WeylMono m;
    int left = static_cast<int>(small(rng, 0, deg));
    for (auto& e : m.e) {
      e = static_cast<int>(small(rng, 0, left));
      left -= e;
    }
    w.add_term(m, rand_gauss(rng));
  }
  return w;
}

/// Random ambient element with a few generators of every kind.
inline AmbientElem rand_ambient(std::mt19937& rng, int deg = 2, int terms = 2) {
  AmbientElem u;
  const int n = static_cast<int>(small(rng, 1, terms));
  for (int k = 0; k < n; ++k) {
    AmbientElem term(rand_nonzero_ratfunc(rng));
    const int len = static_cast<int>(small(rng, 0, deg));
    for (int j = 0; j < len; ++j) term = amb_mul(term, AmbientElem::gen(static_cast<Gen>(rng() % kNumGens)));
    u += term;
  }
  return u;
}

inline BasePoly rand_base(std::mt19937& rng, int deg = 2) {
  BasePoly b(2);
  const int n = static_cast<int>(small(rng, 1, 3));
  for (int k = 0; k < n; ++k) {
    const int i = static_cast<int>(small(rng, 0, deg));
    const int j = static_cast<int>(small(rng, 0, deg - i));
    b.add_term({i, j}, rand_ratfunc(rng));
  }
  return b;
}

/// Polynomials in x1, x2 keyed by (deg x1, deg x2); an independent model on
/// which Weyl elements act as differential operators.
using XPoly = std::map<std::pair<int, int>, GaussRat>;

inline void xpoly_add(XPoly& p, std::pair<int, int> e, const GaussRat& c) {
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

/// d1^a d2^b x2^c x1^d applied to p: multiply first, then differentiate.
inline XPoly weyl_act(const WeylElem& u, const XPoly& p) {
  XPoly out;
  for (const auto& [m, c] : u.terms()) {
    for (const auto& [e, v] : p) {
      int i = e.first + m.e[3];
      int j = e.second + m.e[2];
      GaussRat coef = c * v;
      for (int k = 0; k < m.e[0]; ++k) coef *= GaussRat(i - k);
      for (int k = 0; k < m.e[1]; ++k) coef *= GaussRat(j - k);
      i -= m.e[0];
      j -= m.e[1];
      if (i < 0 || j < 0 || coef.is_zero()) continue;
      xpoly_add(out, {i, j}, coef);
    }
  }
  return out;
}

}  // namespace drasp4::testing
