#include "drasp4/render.hpp"

#include <array>
#include <stdexcept>

namespace drasp4 {

using nlohmann::json;

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

// ------------------------------------------------------------------ JSON

json to_json(const GaussRat& c) { return {{"re", c.re().get_str()}, {"im", c.im().get_str()}}; }

json to_json(const Poly2& p) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    out.push_back({{"a", t.exp.a}, {"b", t.exp.b}, {"re", t.coeff.re().get_str()}, {"im", t.coeff.im().get_str()}});
  }
  return out;
}

json to_json(const RatFunc& f) { return {{"text", f.to_string()}, {"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const AmbientElem& u) {
  json terms = json::array();
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    terms.push_back({{"mono", to_string(m)}, {"exps", m.e}, {"coeff", to_json(c)}});
  }
  return {{"text", to_string(u)}, {"terms", std::move(terms)}};
}

json to_json(const DraElem& u) {
  json terms = json::array();
  for (auto it = u.elem().terms().rbegin(); it != u.elem().terms().rend(); ++it) {
    const auto& [m, c] = *it;
    terms.push_back({{"mono", to_string(m)}, {"exps", m.weyl_part().e}, {"coeff", to_json(c)}});
  }
  return {{"text", to_string(u)}, {"terms", std::move(terms)}};
}

json to_json(const BasePoly& b) {
  json terms = json::array();
  for (const auto& [e, c] : b.terms()) terms.push_back({{"t", e}, {"coeff", to_json(c)}});
  return {{"text", b.to_string()}, {"rank", b.rank()}, {"terms", std::move(terms)}};
}

json to_json(const GwaElem& u) {
  json terms = json::array();
  for (const auto& [m, b] : u.terms()) terms.push_back({{"m", m}, {"coeff", to_json(b)}});
  return {{"text", u.to_string()}, {"terms", std::move(terms)}};
}

json to_json(const Limit& l) {
  struct V {
    json operator()(const GaussRat& g) const { return {{"kind", "value"}, {"value", to_json(g)}}; }
    json operator()(LimitZero) const { return {{"kind", "zero"}}; }
    json operator()(LimitDivergent) const { return {{"kind", "divergent"}}; }
    json operator()(LimitUndefined) const { return {{"kind", "undefined"}}; }
  };
  json j = std::visit(V{}, l);
  j["text"] = to_string(l);
  return j;
}

json to_json(const Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(
        {{"suite", e.suite}, {"id", e.id}, {"pass", e.pass}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"residual", e.residual}});
  return {{"all_pass", r.all_pass()},
          {"total", r.entries.size()},
          {"failed", r.num_failed()},
          {"entries", std::move(entries)}};
}

// ----------------------------------------------------------------- LaTeX

namespace {

std::string latex_q(const mpq_class& q) {
  const bool neg = sgn(q) < 0;
  const mpq_class a = abs(q);
  std::string s = a.get_den() == 1 ? a.get_num().get_str()
                                   : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return neg ? "-" + s : s;
}

constexpr std::array<const char*, kNumGens> kGenLatex{
    "F_{\\beta}", "F_{\\beta+\\alpha}", "F_{\\beta+2\\alpha}", "F_{\\alpha}", "\\partial_1", "\\partial_2",
    "x_2",        "x_1",                "E_{\\alpha}",        "E_{\\beta+2\\alpha}", "E_{\\beta+\\alpha}", "E_{\\beta}"};

std::string latex_mono(const AmbMono& m) {
  std::string out;
  for (std::size_t k = 0; k < kNumGens; ++k) {
    if (m.e[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += kGenLatex[k];
    if (m.e[k] > 1) out += "^{" + std::to_string(m.e[k]) + "}";
  }
  return out;
}

bool is_single_term(const RatFunc& f) { return f.den().is_constant() && f.num().terms().size() == 1; }

}  // namespace

std::string to_latex(const GaussRat& c) {
  if (c.is_real()) return latex_q(c.re());
  const mpq_class& m = c.im();
  std::string imag = m == 1 ? "i" : m == -1 ? "-i" : latex_q(m) + "i";
  if (sgn(c.re()) == 0) return imag;
  return latex_q(c.re()) + (sgn(m) > 0 ? "+" : "") + imag;
}

std::string to_latex(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string mono;
    auto add_var = [&](const char* name, int e) {
      if (e == 0) return;
      mono += name;
      if (e > 1) mono += "^{" + std::to_string(e) + "}";
    };
    add_var("H_\\alpha", t.exp.a);
    add_var("H_\\beta", t.exp.b);
    std::string term;
    if (mono.empty()) {
      term = to_latex(t.coeff);
    } else if (t.coeff.is_one()) {
      term = mono;
    } else if (t.coeff == GaussRat(-1)) {
      term = "-" + mono;
    } else if (t.coeff.needs_parens_as_factor()) {
      term = "(" + to_latex(t.coeff) + ")" + mono;
    } else {
      term = to_latex(t.coeff) + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::string to_latex(const RatFunc& f) {
  if (f.den().is_constant()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

std::string to_latex(const AmbientElem& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string mono = latex_mono(m);
    std::string term;
    if (mono.empty()) {
      term = to_latex(c);
    } else if (c.is_one()) {
      term = mono;
    } else if (is_single_term(c)) {
      term = to_latex(c) + " " + mono;
    } else {
      term = "\\left(" + to_latex(c) + "\\right) " + mono;
    }
    if (!out.empty() && term[0] != '-') out += " + ";
    else if (!out.empty()) out += " ";
    out += term;
  }
  return out;
}

std::string to_latex(const BasePoly& b) {
  if (b.is_zero()) return "0";
  std::string out;
  for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "t_" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^{" + std::to_string(e[k]) + "}";
    }
    std::string term;
    if (mono.empty()) {
      term = to_latex(c);
    } else if (c.is_one()) {
      term = mono;
    } else {
      term = "\\left(" + to_latex(c) + "\\right) " + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::string to_latex(const Limit& l) {
  struct V {
    std::string operator()(const GaussRat& g) const { return to_latex(g); }
    std::string operator()(LimitZero) const { return "0"; }
    std::string operator()(LimitDivergent) const { return "\\infty"; }
    std::string operator()(LimitUndefined) const { return "\\text{undefined}"; }
  };
  return std::visit(V{}, l);
}

}  // namespace drasp4
