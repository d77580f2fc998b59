#pragma once

// Root data of type C2 and the oscillator realization of sp(4) inside A_2.
// Structure constants and weights are derived from the realization at first
// use and are read-only afterwards.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "drasp4/scalars.hpp"
#include "drasp4/weyl.hpp"

namespace drasp4 {

/// Positive roots.
enum class Root { beta = 0, beta_alpha = 1, beta_2alpha = 2, alpha = 3 };

inline constexpr std::array<Root, 4> kConvexOrder{Root::beta, Root::beta_alpha, Root::beta_2alpha, Root::alpha};
inline constexpr std::array<Root, 4> kReverseConvexOrder{Root::alpha, Root::beta_2alpha, Root::beta_alpha, Root::beta};

std::string_view root_name(Root r);  // "b", "ba", "b2a", "a"

/// Basis of sp(4), in coordinate order.
enum class Sym {
  f_beta = 0,
  f_beta_alpha,
  f_beta_2alpha,
  f_alpha,
  h_alpha,
  h_beta,
  e_alpha,
  e_beta_2alpha,
  e_beta_alpha,
  e_beta,
};
inline constexpr int kLieDim = 10;

Sym e_of(Root r);
Sym f_of(Root r);
/// Text name: Ea, Eb, Eba, Eb2a, Fa, ..., Ha, Hb.
std::string_view sym_name(Sym s);
std::optional<Sym> sym_from_name(std::string_view name);

class DecomposeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of sp(4) + C: Lie coordinates plus a separate scalar part.
struct LieElem {
  std::array<GaussRat, kLieDim> coords{};
  GaussRat constant{};

  static LieElem basis(Sym s);
  GaussRat& operator[](Sym s) { return coords[static_cast<std::size_t>(s)]; }
  const GaussRat& operator[](Sym s) const { return coords[static_cast<std::size_t>(s)]; }
  bool lie_part_zero() const;
  friend bool operator==(const LieElem&, const LieElem&) = default;
  LieElem& operator+=(const LieElem& o);
  friend LieElem operator*(const GaussRat& c, LieElem x);
};

/// Shifted coroot H_gamma = ca*va + cb*vb + c0; zeta(h'_gamma) = H_gamma - shift.
struct CorootForm {
  Root root;
  int ca;
  int cb;
  int c0;
  int shift;
  Poly2 poly() const { return Poly2::affine(ca, cb, c0); }
};
const CorootForm& coroot_form(Root r);

/// (mu(h_alpha), mu(h_beta)).
using Weight = std::pair<int, int>;

/// Oscillator image of a basis symbol.
const WeylElem& osc(Sym s);
WeylElem osc(const LieElem& x);
LieElem lie_bracket(const LieElem& x, const LieElem& y);
/// Coordinates of w in span(osc images) + C; throws DecomposeError otherwise.
LieElem decompose(const WeylElem& w);
/// Chevalley anti-involution: e_gamma <-> f_gamma, h fixed.
LieElem tau(const LieElem& x);
/// Weight of a root vector e_gamma under (h_alpha, h_beta), derived from brackets.
Weight root_weight(Root r);
/// Weight of x_i / d_i under ad(h_alpha), ad(h_beta).
Weight weyl_gen_weight(WeylGen g);

}  // namespace drasp4
