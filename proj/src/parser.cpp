#include "drasp4/parser.hpp"

#include <cctype>
#include <climits>

#include "drasp4/projector.hpp"

namespace drasp4 {

namespace {

std::string describe_expected(const std::set<std::string>& e) {
  std::string out;
  for (const auto& s : e) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, std::string found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected one of {" +
                         describe_expected(expected) + "}, found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end, bad };

struct Token {
  Tok kind;
  std::size_t offset;  // 1-based
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, at, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::name, at, std::string(s.substr(i, j - i))});
      i = j;
    } else {
      Tok k = Tok::bad;
      switch (c) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        default: break;
      }
      out.push_back({k, at, std::string(1, c)});
      ++i;
    }
  }
  out.push_back({Tok::end, s.size() + 1, {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  std::unique_ptr<Ast> run() {
    auto e = expr();
    if (peek().kind != Tok::end) fail({"+", "-", "*", "/", "^", "name", "integer", "(", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.offset, std::move(expected), found);
  }

  static std::unique_ptr<Ast> node(Ast::Kind k, std::size_t off) {
    auto a = std::make_unique<Ast>();
    a->kind = k;
    a->offset = off;
    return a;
  }

  static std::unique_ptr<Ast> binary(Ast::Kind k, std::size_t off, std::unique_ptr<Ast> l, std::unique_ptr<Ast> r) {
    auto a = node(k, off);
    a->kids.push_back(std::move(l));
    a->kids.push_back(std::move(r));
    return a;
  }

  bool starts_atom() const {
    const Tok k = peek().kind;
    return k == Tok::name || k == Tok::number || k == Tok::lparen;
  }

  std::unique_ptr<Ast> expr() {
    auto lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = take();
      auto rhs = term();
      lhs = binary(op.kind == Tok::plus ? Ast::Kind::add : Ast::Kind::sub, op.offset, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<Ast> term() {
    auto lhs = juxt();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = take();
      auto rhs = juxt();
      lhs = binary(op.kind == Tok::star ? Ast::Kind::mul : Ast::Kind::div, op.offset, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<Ast> juxt() {
    auto lhs = unary();
    while (starts_atom()) {
      const std::size_t off = peek().offset;
      auto rhs = unary();
      lhs = binary(Ast::Kind::juxt, off, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<Ast> unary() {
    if (peek().kind == Tok::minus) {
      const Token& op = take();
      auto a = node(Ast::Kind::neg, op.offset);
      a->kids.push_back(unary());
      return a;
    }
    return factor();
  }

  std::unique_ptr<Ast> factor() {
    auto base = atom();
    if (peek().kind != Tok::caret) return base;
    const Token& op = take();
    if (peek().kind != Tok::number) fail({"integer"});
    const Token& n = take();
    if (n.text.size() > 6) throw ParseError(n.offset, {"integer below 1000000"}, "'" + n.text + "'");
    auto a = node(Ast::Kind::pow, op.offset);
    a->exponent = static_cast<unsigned>(std::stoul(n.text));
    a->kids.push_back(std::move(base));
    return a;
  }

  std::unique_ptr<Ast> atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        auto a = node(Ast::Kind::number, t.offset);
        a->text = t.text;
        return a;
      }
      case Tok::name: {
        take();
        auto a = node(Ast::Kind::name, t.offset);
        a->text = t.text;
        return a;
      }
      case Tok::lparen: {
        take();
        auto e = expr();
        if (peek().kind != Tok::rparen) fail({")", "+", "-", "*", "/", "^", "name", "integer", "("});
        take();
        return e;
      }
      default:
        fail({"name", "integer", "(", "-"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

RatFunc number_value(const Ast& a) { return RatFunc(GaussRat(mpq_class(a.text))); }

std::optional<RatFunc> scalar_name(const std::string& n) {
  if (n == "Ha") return RatFunc::va();
  if (n == "Hb") return RatFunc::vb();
  if (n == "i") return RatFunc(GaussRat::i());
  return std::nullopt;
}

[[noreturn]] void unknown(const Ast& a, const char* mode) {
  throw EvalError("unknown symbol '" + a.text + "' at offset " + std::to_string(a.offset) + " in " + mode + " mode");
}

RatFunc scalar_divisor(const std::optional<RatFunc>& s) {
  if (!s) throw EvalError("divisor must be a dynamical scalar");
  return s->inverse();
}

AmbientElem ambient_atom(const Ast& a) {
  if (a.kind == Ast::Kind::number) return AmbientElem(number_value(a));
  if (auto s = scalar_name(a.text)) return AmbientElem(*s);
  if (auto g = gen_from_name(a.text)) return AmbientElem::gen(*g);
  unknown(a, "ambient");
}

// Representative in the ambient algebra of a dra-mode expression.
AmbientElem dra_rep(const Ast& a);

DraElem dra_value(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::mul:
      return diamond(dra_value(*a.kids[0]), dra_value(*a.kids[1]));
    case Ast::Kind::div: {
      const DraElem d = dra_value(*a.kids[1]);
      return diamond(dra_value(*a.kids[0]), DraElem(scalar_divisor(d.elem().as_scalar())));
    }
    case Ast::Kind::add:
      return dra_value(*a.kids[0]) + dra_value(*a.kids[1]);
    case Ast::Kind::sub:
      return dra_value(*a.kids[0]) - dra_value(*a.kids[1]);
    case Ast::Kind::neg:
      return -dra_value(*a.kids[0]);
    default:
      return DraElem(red(dra_rep(a), Side::II));
  }
}

AmbientElem dra_rep(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number:
      return AmbientElem(number_value(a));
    case Ast::Kind::name: {
      if (auto s = scalar_name(a.text)) return AmbientElem(*s);
      if (auto g = gen_from_name(a.text)) {
        const Gen gg = *g;
        const AmbMono m = AmbMono::of(gg);
        if (!m.is_weyl()) throw EvalError("generator not available in dra mode: " + a.text);
        return AmbientElem::gen(gg);
      }
      unknown(a, "dra");
    }
    case Ast::Kind::juxt:
      return amb_mul(dra_rep(*a.kids[0]), dra_rep(*a.kids[1]));
    case Ast::Kind::pow:
      return amb_pow(dra_rep(*a.kids[0]), a.exponent);
    case Ast::Kind::add:
      return dra_rep(*a.kids[0]) + dra_rep(*a.kids[1]);
    case Ast::Kind::sub:
      return dra_rep(*a.kids[0]) - dra_rep(*a.kids[1]);
    case Ast::Kind::neg:
      return -dra_rep(*a.kids[0]);
    case Ast::Kind::mul:
    case Ast::Kind::div:
      return dra_value(a).elem();
  }
  throw EvalError("internal: unhandled expression node");
}

}  // namespace

std::unique_ptr<Ast> parse(std::string_view src) { return Parser(src).run(); }

AmbientElem eval_ambient(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number:
    case Ast::Kind::name:
      return ambient_atom(a);
    case Ast::Kind::neg:
      return -eval_ambient(*a.kids[0]);
    case Ast::Kind::add:
      return eval_ambient(*a.kids[0]) + eval_ambient(*a.kids[1]);
    case Ast::Kind::sub:
      return eval_ambient(*a.kids[0]) - eval_ambient(*a.kids[1]);
    case Ast::Kind::mul:
    case Ast::Kind::juxt:
      return amb_mul(eval_ambient(*a.kids[0]), eval_ambient(*a.kids[1]));
    case Ast::Kind::div: {
      const AmbientElem d = eval_ambient(*a.kids[1]);
      return eval_ambient(*a.kids[0]).scaled_right(scalar_divisor(d.as_scalar()));
    }
    case Ast::Kind::pow:
      return amb_pow(eval_ambient(*a.kids[0]), a.exponent);
  }
  throw EvalError("internal: unhandled expression node");
}

DraElem eval_dra(const Ast& a) { return dra_value(a); }

BasePoly eval_base(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number:
      return BasePoly(2, number_value(a));
    case Ast::Kind::name: {
      if (auto s = scalar_name(a.text)) return BasePoly(2, *s);
      if (a.text == "t1") return BasePoly::t(2, 1);
      if (a.text == "t2") return BasePoly::t(2, 2);
      unknown(a, "base");
    }
    case Ast::Kind::neg:
      return -eval_base(*a.kids[0]);
    case Ast::Kind::add:
      return eval_base(*a.kids[0]) + eval_base(*a.kids[1]);
    case Ast::Kind::sub:
      return eval_base(*a.kids[0]) - eval_base(*a.kids[1]);
    case Ast::Kind::mul:
    case Ast::Kind::juxt:
      return eval_base(*a.kids[0]) * eval_base(*a.kids[1]);
    case Ast::Kind::div: {
      const BasePoly d = eval_base(*a.kids[1]);
      return eval_base(*a.kids[0]).scaled(scalar_divisor(d.as_scalar()));
    }
    case Ast::Kind::pow:
      return pow(eval_base(*a.kids[0]), a.exponent);
  }
  throw EvalError("internal: unhandled expression node");
}

RatFunc eval_scalar(const Ast& a) {
  const auto s = eval_base(a).as_scalar();
  if (!s) throw EvalError("expression is not a dynamical scalar");
  return *s;
}

}  // namespace drasp4
