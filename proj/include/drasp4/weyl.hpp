#pragma once

// The second Weyl algebra A_2 over GaussRat in the normal order
// d1^a d2^b x2^c x1^d (derivatives to the left).

#include <array>
#include <map>
#include <string>

#include "drasp4/scalars.hpp"

namespace drasp4 {

/// Exponents of (d1, d2, x2, x1), in that order.
struct WeylMono {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  friend auto operator<=>(const WeylMono&, const WeylMono&) = default;
};

enum class WeylGen { d1 = 0, d2 = 1, x2 = 2, x1 = 3 };

class WeylElem {
 public:
  using Terms = std::map<WeylMono, GaussRat>;

  WeylElem() = default;
  WeylElem(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  WeylElem(long c) : WeylElem(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  static WeylElem monomial(const WeylMono& m, GaussRat c = 1);
  static WeylElem gen(WeylGen g);
  static WeylElem x(int i) { return gen(i == 1 ? WeylGen::x1 : WeylGen::x2); }
  static WeylElem d(int i) { return gen(i == 1 ? WeylGen::d1 : WeylGen::d2); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  GaussRat coeff(const WeylMono& m) const;

  WeylElem operator-() const;
  WeylElem& operator+=(const WeylElem& o);
  WeylElem& operator-=(const WeylElem& o);
  friend WeylElem operator+(WeylElem a, const WeylElem& b) { return a += b; }
  friend WeylElem operator-(WeylElem a, const WeylElem& b) { return a -= b; }
  friend WeylElem operator*(const GaussRat& c, const WeylElem& u);
  friend bool operator==(const WeylElem&, const WeylElem&) = default;

  void add_term(const WeylMono& m, const GaussRat& c);

 private:
  Terms terms_;
};

/// Product in normal order.
WeylElem weyl_mul(const WeylElem& u, const WeylElem& v);
inline WeylElem operator*(const WeylElem& u, const WeylElem& v) { return weyl_mul(u, v); }
WeylElem weyl_pow(const WeylElem& u, unsigned k);
/// uv - vu
WeylElem weyl_bracket(const WeylElem& u, const WeylElem& v);
/// Symplectic Fourier transform: the anti-automorphism with x_i -> d_i, d_i -> x_i.
WeylElem vartheta(const WeylElem& u);

std::string to_string(const WeylMono& m);
std::string to_string(const WeylElem& u);

}  // namespace drasp4
