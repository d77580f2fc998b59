#pragma once

// Extremal projector of sp(4) acting on cosets modulo I, the diamond product
// on the double coset space, and the reduction-algebra generators together
// with their structure constants.

#include <array>
#include <map>
#include <span>
#include <stdexcept>

#include "drasp4/ambient.hpp"

namespace drasp4 {

class ProjectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for a malformed DRASP4_MAX_PROJECTOR_K.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultProjectorSlack = 8;
/// Additive slack of the truncation bound; DRASP4_MAX_PROJECTOR_K overrides
/// it with an integer >= 8.
int projector_slack();

/// H_gamma as a RatFunc.
RatFunc coroot_scalar(Root r);
/// (-1)^k / (k! (H_gamma+2) ... (H_gamma+k+1)), placed left of F_gamma^k.
RatFunc phi_coeff(Root r, int k);

/// P_gamma v modulo I.
CosetElem apply_P_gamma(Root r, const CosetElem& v);
/// Factors applied in the given order, first entry first. The default order
/// computes P_alpha P_b2a P_ba P_beta v.
CosetElem apply_P(const CosetElem& v, std::span<const Root, 4> order = kConvexOrder);

DraElem diamond(const DraElem& u, const DraElem& v);
DraElem diamond_power(const DraElem& u, unsigned k);
/// u <> v - v <> u
DraElem diamond_bracket(const DraElem& u, const DraElem& v);
DraElem dra_theta(const DraElem& u);

/// Generators x_i-bar, d_i-bar.
DraElem dra_gen(WeylGen g);

struct NormalizedGens {
  DraElem x1;
  DraElem x2;
  DraElem d1;
  DraElem d2;
};
const NormalizedGens& normalized_gens();

/// Where the structure constants come from. `stated` is the published
/// coefficient table verbatim; `derived` replaces f12 by -2(d+1)/(ac), the
/// value the projector computation produces (the other entries agree).
enum class CoeffSource { stated, derived };

/// Named constants of the finite presentation and of the skew-affine data.
struct PresentationTable {
  RatFunc a, b, c, d;
  RatFunc f11, f12, f21, f22;
  RatFunc c_hat1, c_hat2;
  RatFunc f_hat11, f_hat12, f_hat21, f_hat22;
};
const PresentationTable& presentation_table(CoeffSource src = CoeffSource::stated);

/// Order used for leading terms of reduction-algebra elements.
inline bool dra_less(const WeylMono& a, const WeylMono& b) {
  return AmbMonoLess{}(AmbMono::from_weyl(a), AmbMono::from_weyl(b));
}
struct DraMonoLess {
  bool operator()(const WeylMono& a, const WeylMono& b) const { return dra_less(a, b); }
};

/// d1^{<>a} <> d2^{<>b} <> x2^{<>c} <> x1^{<>d} for exponents (a,b,c,d).
const DraElem& diamond_basis(const WeylMono& m);
/// Coordinates of u in the diamond basis, obtained by triangular elimination.
std::map<WeylMono, RatFunc, DraMonoLess> to_diamond_basis(const DraElem& u);

}  // namespace drasp4
