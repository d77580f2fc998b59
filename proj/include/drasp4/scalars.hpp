#pragma once

// Exact coefficient arithmetic: Gaussian rationals, bivariate polynomials
// over them, and the field of rational functions in the two Cartan symbols
// H_alpha, H_beta (stored as the variables va, vb).

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace drasp4 {

/// Raised for arithmetic that has no exact answer (division by zero, poles).
class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// re + im*i with exact rational parts. The imaginary part is only stored
/// when nonzero.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0);

  static GaussRat frac(long num, long den);
  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const;

  bool is_zero() const { return sgn(re_) == 0 && !im_; }
  bool is_one() const { return !im_ && re_ == 1; }
  bool is_real() const { return !im_; }

  GaussRat operator-() const;
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat inverse() const;

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    if (a.im_.has_value() != b.im_.has_value() || a.re_ != b.re_) return false;
    return !a.im_ || *a.im_ == *b.im_;
  }

  /// `3`, `-3/2`, `i`, `-2*i`, `(1+2*i)`.
  std::string to_string() const;
  /// True when to_string() must be wrapped to be used as a factor.
  bool needs_parens_as_factor() const { return sgn(re_) != 0 && im_; }

 private:
  void settle() {
    if (im_ && sgn(*im_) == 0) im_.reset();
  }
  mpq_class re_{0};
  std::optional<mpq_class> im_;
};

GaussRat pow(const GaussRat& base, unsigned exp);

/// Exponent pair (degree in va, degree in vb).
struct Exp2 {
  int a = 0;
  int b = 0;
  friend bool operator==(const Exp2&, const Exp2&) = default;
  int total() const { return a + b; }
};

/// Graded order: total degree first, then the va exponent.
inline bool grlex_less(const Exp2& x, const Exp2& y) {
  if (x.total() != y.total()) return x.total() < y.total();
  return x.a < y.a;
}

/// Sparse polynomial in va, vb over GaussRat. Terms are kept sorted with the
/// graded-largest exponent first and contain no zero coefficients.
class Poly2 {
 public:
  struct Term {
    Exp2 exp;
    GaussRat coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly2() = default;
  Poly2(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  Poly2(long c) : Poly2(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 monomial(Exp2 e, GaussRat c = 1);
  static Poly2 va() { return monomial({1, 0}); }
  static Poly2 vb() { return monomial({0, 1}); }
  /// ca*va + cb*vb + c0.
  static Poly2 affine(long ca, long cb, long c0);
  static Poly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.total() == 0); }
  GaussRat constant_value() const;
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().exp.total(); }
  int degree_a() const;
  int degree_b() const;
  const Term& leading() const { return terms_.front(); }
  /// Homogeneous component of top total degree.
  Poly2 leading_form() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 scaled(const GaussRat& c) const;
  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Substitution va -> va + da, vb -> vb + db.
  Poly2 shifted(int da, int db) const;
  GaussRat eval(const GaussRat& a, const GaussRat& b) const;

  std::string to_string(const char* va_name = "Ha", const char* vb_name = "Hb") const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

Poly2 pow(const Poly2& base, unsigned exp);

/// Exact quotient a / b; throws ScalarError if b does not divide a.
Poly2 divexact(const Poly2& a, const Poly2& b);
/// Quotient if b divides a exactly.
std::optional<Poly2> try_divide(const Poly2& a, const Poly2& b);
/// Greatest common divisor, normalized with leading coefficient 1 (0 if both are 0).
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Normalized rational function num/den: gcd(num, den) = 1, den has leading
/// coefficient 1 in the graded order, zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const Poly2& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const GaussRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly2& num, const Poly2& den);

  static RatFunc va() { return Poly2::va(); }
  static RatFunc vb() { return Poly2::vb(); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussRat constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc inverse() const;
  RatFunc shifted(int da, int db) const;

  std::string to_string() const;

 private:
  Poly2 num_;
  Poly2 den_;
};

RatFunc pow(const RatFunc& base, unsigned exp);

enum class BinOp { add, sub, mul, div };
RatFunc rf_binop(BinOp op, const RatFunc& f, const RatFunc& g);
RatFunc rf_shift(const RatFunc& f, std::pair<int, int> delta);
/// Throws ScalarError("evaluation at pole") when the denominator vanishes.
GaussRat rf_eval(const RatFunc& f, std::pair<GaussRat, GaussRat> point);

/// Behaviour of f(t*va, t*vb) as t -> infinity, read off the top-degree forms.
struct LimitZero {
  friend bool operator==(const LimitZero&, const LimitZero&) = default;
};
struct LimitDivergent {
  friend bool operator==(const LimitDivergent&, const LimitDivergent&) = default;
};
struct LimitUndefined {
  friend bool operator==(const LimitUndefined&, const LimitUndefined&) = default;
};
using Limit = std::variant<GaussRat, LimitZero, LimitDivergent, LimitUndefined>;
Limit rf_limit_inf(const RatFunc& f);
std::string to_string(const Limit& l);

/// True when p is a constant times a product of factors (H_gamma + n), with
/// H_gamma one of the four shifted coroot forms and |n| <= max_shift.
bool factors_into_coroot_forms(const Poly2& p, int max_shift = 24);

}  // namespace drasp4
