#include "drasp4/sp4.hpp"

#include <vector>

namespace drasp4 {

namespace {

constexpr std::array<std::string_view, kLieDim> kSymNames{"Fb", "Fba", "Fb2a", "Fa", "Ha", "Hb", "Ea", "Eb2a", "Eba", "Eb"};

std::size_t idx(Sym s) { return static_cast<std::size_t>(s); }

WeylMono mono(int a, int b, int c, int d) { return WeylMono{{a, b, c, d}}; }

struct Tables {
  std::array<WeylElem, kLieDim> images;
  std::array<std::array<LieElem, kLieDim>, kLieDim> brackets;
};

LieElem solve_in_span(const std::array<WeylElem, kLieDim>& images, const WeylElem& w);

Tables build_tables() {
  Tables t;
  const GaussRat half = GaussRat::frac(1, 2);
  const GaussRat i_half = GaussRat::i() * half;
  auto& im = t.images;
  // e_alpha = x1 d2, e_beta = (i/2) x2^2
  im[idx(Sym::e_alpha)] = WeylElem::monomial(mono(0, 1, 0, 1));
  im[idx(Sym::e_beta)] = WeylElem::monomial(mono(0, 0, 2, 0), i_half);
  im[idx(Sym::e_beta_alpha)] = weyl_bracket(im[idx(Sym::e_alpha)], im[idx(Sym::e_beta)]);
  im[idx(Sym::e_beta_2alpha)] = half * weyl_bracket(im[idx(Sym::e_alpha)], im[idx(Sym::e_beta_alpha)]);
  for (Root r : kConvexOrder) im[idx(f_of(r))] = vartheta(im[idx(e_of(r))]);
  im[idx(Sym::h_alpha)] = weyl_bracket(im[idx(Sym::e_alpha)], im[idx(Sym::f_alpha)]);
  im[idx(Sym::h_beta)] = weyl_bracket(im[idx(Sym::e_beta)], im[idx(Sym::f_beta)]);
  for (int a = 0; a < kLieDim; ++a)
    for (int b = 0; b < kLieDim; ++b)
      t.brackets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          solve_in_span(im, weyl_bracket(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(b)]));
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

// Exact Gaussian elimination of w against the ten images and the constant 1.
LieElem solve_in_span(const std::array<WeylElem, kLieDim>& images, const WeylElem& w) {
  std::vector<WeylMono> rows;
  auto row_of = [&](const WeylMono& m) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r] == m) return r;
    rows.push_back(m);
    return rows.size() - 1;
  };
  constexpr std::size_t kCols = kLieDim + 1;
  std::vector<std::array<GaussRat, kCols + 1>> mat;
  auto put = [&](const WeylElem& u, std::size_t col) {
    for (const auto& [m, c] : u.terms()) {
      const std::size_t r = row_of(m);
      if (mat.size() <= r) mat.resize(r + 1);
      mat[r][col] += c;
    }
  };
  for (std::size_t k = 0; k < static_cast<std::size_t>(kLieDim); ++k) put(images[k], k);
  put(WeylElem(1), kLieDim);
  put(w, kCols);
  mat.resize(rows.size());

  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < kCols && r < mat.size(); ++col) {
    std::size_t p = r;
    while (p < mat.size() && mat[p][col].is_zero()) ++p;
    if (p == mat.size()) continue;
    std::swap(mat[p], mat[r]);
    const GaussRat inv = mat[r][col].inverse();
    for (auto& x : mat[r]) x *= inv;
    for (std::size_t q = 0; q < mat.size(); ++q) {
      if (q == r || mat[q][col].is_zero()) continue;
      const GaussRat f = mat[q][col];
      for (std::size_t k = 0; k <= kCols; ++k) mat[q][k] -= f * mat[r][k];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  if (pivot_cols.size() != kCols) throw DecomposeError("internal: oscillator images are linearly dependent");
  for (std::size_t q = r; q < mat.size(); ++q)
    if (!mat[q][kCols].is_zero()) throw DecomposeError("not in sp(4) ⊕ C");
  LieElem out;
  for (std::size_t q = 0; q < r; ++q) {
    const std::size_t col = pivot_cols[q];
    if (col == kLieDim) {
      out.constant = mat[q][kCols];
    } else {
      out.coords[col] = mat[q][kCols];
    }
  }
  return out;
}

}  // namespace

std::string_view root_name(Root r) {
  switch (r) {
    case Root::alpha: return "a";
    case Root::beta: return "b";
    case Root::beta_alpha: return "ba";
    case Root::beta_2alpha: return "b2a";
  }
  return "?";
}

Sym e_of(Root r) {
  switch (r) {
    case Root::alpha: return Sym::e_alpha;
    case Root::beta: return Sym::e_beta;
    case Root::beta_alpha: return Sym::e_beta_alpha;
    case Root::beta_2alpha: return Sym::e_beta_2alpha;
  }
  return Sym::e_alpha;
}

Sym f_of(Root r) {
  switch (r) {
    case Root::alpha: return Sym::f_alpha;
    case Root::beta: return Sym::f_beta;
    case Root::beta_alpha: return Sym::f_beta_alpha;
    case Root::beta_2alpha: return Sym::f_beta_2alpha;
  }
  return Sym::f_alpha;
}

std::string_view sym_name(Sym s) { return kSymNames[idx(s)]; }

std::optional<Sym> sym_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kSymNames.size(); ++k)
    if (kSymNames[k] == name) return static_cast<Sym>(k);
  return std::nullopt;
}

LieElem LieElem::basis(Sym s) {
  LieElem x;
  x[s] = 1;
  return x;
}

bool LieElem::lie_part_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

LieElem& LieElem::operator+=(const LieElem& o) {
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  constant += o.constant;
  return *this;
}

LieElem operator*(const GaussRat& c, LieElem x) {
  for (auto& v : x.coords) v *= c;
  x.constant *= c;
  return x;
}

const CorootForm& coroot_form(Root r) {
  static const std::array<CorootForm, 4> forms{{
      {Root::beta, 0, 1, 0, 0},
      {Root::beta_alpha, 1, 2, 2, 2},
      {Root::beta_2alpha, 1, 1, 1, 1},
      {Root::alpha, 1, 0, 0, 0},
  }};
  return forms[static_cast<std::size_t>(r)];
}

const WeylElem& osc(Sym s) { return tables().images[idx(s)]; }

WeylElem osc(const LieElem& x) {
  WeylElem out(x.constant);
  for (std::size_t k = 0; k < x.coords.size(); ++k)
    if (!x.coords[k].is_zero()) out += x.coords[k] * tables().images[k];
  return out;
}

LieElem lie_bracket(const LieElem& x, const LieElem& y) {
  LieElem out;
  const auto& br = tables().brackets;
  for (std::size_t a = 0; a < x.coords.size(); ++a) {
    if (x.coords[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.coords.size(); ++b) {
      if (y.coords[b].is_zero()) continue;
      out += (x.coords[a] * y.coords[b]) * br[a][b];
    }
  }
  return out;
}

LieElem decompose(const WeylElem& w) { return solve_in_span(tables().images, w); }

LieElem tau(const LieElem& x) {
  LieElem out;
  out.constant = x.constant;
  out[Sym::h_alpha] = x[Sym::h_alpha];
  out[Sym::h_beta] = x[Sym::h_beta];
  for (Root r : kConvexOrder) {
    out[e_of(r)] = x[f_of(r)];
    out[f_of(r)] = x[e_of(r)];
  }
  return out;
}

Weight root_weight(Root r) {
  const LieElem e = LieElem::basis(e_of(r));
  const LieElem ha = lie_bracket(LieElem::basis(Sym::h_alpha), e);
  const LieElem hb = lie_bracket(LieElem::basis(Sym::h_beta), e);
  const GaussRat wa = ha[e_of(r)];
  const GaussRat wb = hb[e_of(r)];
  if (!(ha == wa * e) || !(hb == wb * e) || !wa.is_real() || !wb.is_real() || wa.re().get_den() != 1 ||
      wb.re().get_den() != 1)
    throw DecomposeError("internal: root vector is not a weight vector");
  return {static_cast<int>(wa.re().get_num().get_si()), static_cast<int>(wb.re().get_num().get_si())};
}

Weight weyl_gen_weight(WeylGen g) {
  const WeylElem w = WeylElem::gen(g);
  auto weight_under = [&](Sym h) {
    const WeylElem br = weyl_bracket(osc(h), w);
    WeylMono m;
    m.e[static_cast<std::size_t>(g)] = 1;
    const GaussRat c = br.coeff(m);
    if (!(br == c * w) || !c.is_real() || c.re().get_den() != 1)
      throw DecomposeError("internal: Weyl generator is not a weight vector");
    return static_cast<int>(c.re().get_num().get_si());
  };
  return {weight_under(Sym::h_alpha), weight_under(Sym::h_beta)};
}

}  // namespace drasp4
