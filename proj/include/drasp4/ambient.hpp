#pragma once

// The localized algebra S^-1(A_2 (x) U(sp(4))) in PBW normal form
//   F_b^. F_ba^. F_b2a^. F_a^. d1^. d2^. x2^. x1^. E_a^. E_b2a^. E_ba^. E_b^.
// with coefficients in RatFunc stored on the left. E and F denote the
// diagonal images zeta(e), zeta(f); x, d denote x (x) 1, d (x) 1. The Cartan
// images live in the coefficients as va = H_alpha, vb = H_beta.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "drasp4/scalars.hpp"
#include "drasp4/sp4.hpp"
#include "drasp4/weyl.hpp"

namespace drasp4 {

/// Ambient generators in canonical factor order.
enum class Gen { Fb = 0, Fba, Fb2a, Fa, d1, d2, x2, x1, Ea, Eb2a, Eba, Eb };
inline constexpr int kNumGens = 12;

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);
Gen e_gen(Root r);
Gen f_gen(Root r);
Gen weyl_to_gen(WeylGen g);
/// Image under Theta: x_i <-> d_i, E_gamma <-> F_gamma.
Gen theta_gen(Gen g);
/// Weight under (zeta(h_alpha), zeta(h_beta)).
Weight gen_weight(Gen g);

struct AmbMono {
  std::array<int, kNumGens> e{};

  static AmbMono of(Gen g, int k = 1);
  static AmbMono from_weyl(const WeylMono& w);
  int operator[](Gen g) const { return e[static_cast<std::size_t>(g)]; }
  int& operator[](Gen g) { return e[static_cast<std::size_t>(g)]; }
  int degree() const;
  bool has_f() const;
  bool has_e() const;
  bool is_weyl() const { return !has_f() && !has_e(); }
  bool is_one() const { return degree() == 0; }
  WeylMono weyl_part() const;
  Weight weight() const;
  friend bool operator==(const AmbMono&, const AmbMono&) = default;
};

/// Graded order: total degree first, then, scanning generators in canonical
/// order, the monomial with more of an earlier generator is smaller. On pure
/// Weyl monomials this is the order induced by 1 < d1 < d2 < x2 < x1.
struct AmbMonoLess {
  bool operator()(const AmbMono& a, const AmbMono& b) const;
};

class AmbientElem {
 public:
  using Terms = std::map<AmbMono, RatFunc, AmbMonoLess>;

  AmbientElem() = default;
  AmbientElem(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  AmbientElem(long c) : AmbientElem(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  static AmbientElem monomial(const AmbMono& m, RatFunc c = 1);
  static AmbientElem gen(Gen g);
  static AmbientElem from_weyl(const WeylElem& w);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const AmbMono& m) const;
  /// Largest monomial in AmbMonoLess; requires a nonzero element.
  const AmbMono& leading_mono() const { return terms_.rbegin()->first; }
  std::optional<RatFunc> as_scalar() const;
  bool has_e() const;
  bool has_f() const;
  bool is_weyl() const { return !has_e() && !has_f(); }
  int degree() const;

  void add_term(const AmbMono& m, const RatFunc& c);
  AmbientElem operator-() const;
  AmbientElem& operator+=(const AmbientElem& o);
  AmbientElem& operator-=(const AmbientElem& o);
  friend AmbientElem operator+(AmbientElem a, const AmbientElem& b) { return a += b; }
  friend AmbientElem operator-(AmbientElem a, const AmbientElem& b) { return a -= b; }
  friend bool operator==(const AmbientElem&, const AmbientElem&) = default;

  /// c * u (no reordering needed).
  AmbientElem scaled_left(const RatFunc& c) const;
  /// u * c, moved to the left through weight shifts.
  AmbientElem scaled_right(const RatFunc& c) const;

 private:
  Terms terms_;
};

AmbientElem amb_mul(const AmbientElem& u, const AmbientElem& v);
inline AmbientElem operator*(const AmbientElem& u, const AmbientElem& v) { return amb_mul(u, v); }
AmbientElem amb_pow(const AmbientElem& u, unsigned k);
AmbientElem amb_bracket(const AmbientElem& u, const AmbientElem& v);
/// [g, h] for generators, as a combination of generators and scalars.
const AmbientElem& gen_bracket(Gen g, Gen h);
/// zeta(X) for X in sp(4) + C.
AmbientElem zeta(const LieElem& x);
/// E_gamma u - u E_gamma.
AmbientElem ad_E(Root r, const AmbientElem& u);

enum class Side { I, J, II };
/// Drops terms with nonzero E-part (I), F-part (J), or either (II).
AmbientElem red(const AmbientElem& u, Side side);

/// The anti-automorphism theta (x) tau; scalars are fixed as functions of H.
AmbientElem amb_theta(const AmbientElem& u);

std::string to_string(const AmbMono& m);
std::string to_string(const AmbientElem& u);

/// Representative of a coset modulo I: no E-part.
class CosetElem {
 public:
  CosetElem() = default;
  explicit CosetElem(AmbientElem u);
  const AmbientElem& elem() const { return u_; }
  friend bool operator==(const CosetElem&, const CosetElem&) = default;

 private:
  AmbientElem u_;
};

/// Element of the reduction algebra: pure Weyl monomials over RatFunc.
class DraElem {
 public:
  DraElem() = default;
  DraElem(const RatFunc& c) : u_(c) {}  // NOLINT(google-explicit-constructor)
  DraElem(long c) : u_(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  explicit DraElem(AmbientElem u);
  static DraElem gen(WeylGen g) { return DraElem(AmbientElem::gen(weyl_to_gen(g))); }
  static DraElem monomial(const WeylMono& m, RatFunc c = 1) {
    return DraElem(AmbientElem::monomial(AmbMono::from_weyl(m), std::move(c)));
  }

  const AmbientElem& elem() const { return u_; }
  bool is_zero() const { return u_.is_zero(); }
  RatFunc coeff(const WeylMono& m) const { return u_.coeff(AmbMono::from_weyl(m)); }

  DraElem operator-() const { return DraElem(-u_); }
  DraElem& operator+=(const DraElem& o) {
    u_ += o.u_;
    return *this;
  }
  DraElem& operator-=(const DraElem& o) {
    u_ -= o.u_;
    return *this;
  }
  friend DraElem operator+(DraElem a, const DraElem& b) { return a += b; }
  friend DraElem operator-(DraElem a, const DraElem& b) { return a -= b; }
  friend bool operator==(const DraElem&, const DraElem&) = default;
  DraElem scaled_left(const RatFunc& c) const { return DraElem(u_.scaled_left(c)); }
  DraElem scaled_right(const RatFunc& c) const { return DraElem(u_.scaled_right(c)); }

 private:
  AmbientElem u_;
};

inline std::string to_string(const DraElem& u) { return to_string(u.elem()); }

}  // namespace drasp4
