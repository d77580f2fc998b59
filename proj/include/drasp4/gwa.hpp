#pragma once

// Generalized Weyl algebras B(sigma, t) of rank n over B = R[t_1..t_n], with
// sigma_i acting on R by an integer weight shift and on the t's affinely:
//   sigma_i(t_i) = c_i + sum_j g_ij t_j,   sigma_i(t_j) = t_j (j != i).
// Both the Weyl algebra example (R constant, sigma_i(t_i) = t_i - 1) and the
// reduction-algebra instance are of this form.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drasp4/projector.hpp"
#include "drasp4/scalars.hpp"
#include "drasp4/weyl.hpp"

namespace drasp4 {

class GwaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial in t_1..t_n with RatFunc coefficients.
class BasePoly {
 public:
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, RatFunc>;

  explicit BasePoly(int rank = 2) : rank_(rank) {}
  BasePoly(int rank, const RatFunc& c);
  static BasePoly t(int rank, int i);  // i is 1-based

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::optional<RatFunc> as_scalar() const;
  RatFunc coeff(const Exps& e) const;

  void add_term(const Exps& e, const RatFunc& c);
  BasePoly operator-() const;
  BasePoly& operator+=(const BasePoly& o);
  BasePoly& operator-=(const BasePoly& o);
  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  BasePoly scaled(const RatFunc& c) const;
  /// Applies rf_shift to every coefficient.
  BasePoly shifted_coeffs(std::pair<int, int> delta) const;
  friend bool operator==(const BasePoly&, const BasePoly&) = default;

  std::string to_string() const;

 private:
  void check_rank(const BasePoly& o) const;
  int rank_;
  Terms terms_;
};

BasePoly pow(const BasePoly& b, unsigned k);

/// Data of sigma_1..sigma_n.
struct AffineSigmaData {
  std::vector<std::pair<int, int>> shift;  // action on (va, vb)
  std::vector<RatFunc> c;
  std::vector<std::vector<RatFunc>> g;
};

/// Commuting automorphisms of B; commutation and invertibility are checked at
/// construction unless `Check::skip` is passed.
class SkewAffineSigma {
 public:
  enum class Check { verify, skip };
  explicit SkewAffineSigma(AffineSigmaData data, Check check = Check::verify);

  int rank() const { return static_cast<int>(data_.c.size()); }
  const AffineSigmaData& data() const { return data_; }
  /// sigma_i^k(b) for any integer k; i is 1-based.
  BasePoly apply(int i, const BasePoly& b, int k = 1) const;
  /// sigma_i(t_i).
  BasePoly image_of_t(int i) const;

  /// sigma_i sigma_j(t_k) - sigma_j sigma_i(t_k) for all i < j and all k.
  std::vector<std::pair<std::string, BasePoly>> commutator_defects() const;

 private:
  BasePoly apply_once(int i, const BasePoly& b, bool inverse) const;
  AffineSigmaData data_;
  std::vector<BasePoly> fwd_;  // sigma_i(t_i)
  std::vector<BasePoly> inv_;  // sigma_i^-1(t_i)
};

/// Element of B(sigma, t): left coefficients on X^m / Y^-m with signed exponents.
class GwaElem {
 public:
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, BasePoly>;

  explicit GwaElem(int rank = 2) : rank_(rank) {}
  explicit GwaElem(const BasePoly& b);
  static GwaElem monomial(const Exps& m, const BasePoly& b);
  static GwaElem x(int rank, int i);
  static GwaElem y(int rank, int i);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& m, const BasePoly& b);
  GwaElem operator-() const;
  GwaElem& operator+=(const GwaElem& o);
  GwaElem& operator-=(const GwaElem& o);
  friend GwaElem operator+(GwaElem a, const GwaElem& b) { return a += b; }
  friend GwaElem operator-(GwaElem a, const GwaElem& b) { return a -= b; }
  friend bool operator==(const GwaElem&, const GwaElem&) = default;

  std::string to_string() const;

 private:
  int rank_;
  Terms terms_;
};

GwaElem gwa_mul(const SkewAffineSigma& sigma, const GwaElem& u, const GwaElem& v);

/// Shifts (-1,0), (+1,-1) and the hatted coefficients of the given table.
AffineSigmaData dra_sigma_data(CoeffSource src);
/// The instance carried by the reduction algebra, built from the derived
/// table and checked.
const SkewAffineSigma& dra_sigma();
/// Same shape from the stated table, without the commutation check (the
/// stated f12 breaks it); used to report what fails.
const SkewAffineSigma& dra_sigma_stated_unchecked();
/// sigma_i of the reduction-algebra instance.
BasePoly sigma_apply(int i, const BasePoly& b);

/// The Weyl algebra example of rank n <= 2: sigma_i(t_j) = t_j - delta_ij.
SkewAffineSigma weyl_example_sigma(int n);
/// X_i -> x_i, Y_i -> d_i, t_i -> d_i x_i; coefficients must be constants.
WeylElem weyl_example_map(const GwaElem& u);

/// X_i -> x-hat_i, Y_i -> d-hat_i, t_i -> d-hat_i <> x-hat_i.
DraElem phi(const BasePoly& b);
DraElem phi(const GwaElem& u);

/// Canonical monomials Y1^a Y2^b X1^c X2^d of total degree <= maxdeg (rank 2).
std::vector<GwaElem::Exps> gwa_monomials(int maxdeg);

}  // namespace drasp4
