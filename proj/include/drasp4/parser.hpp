#pragma once

// Expression language for the command line.
//
//   expr   := term (('+' | '-') term)*
//   term   := juxt (('*' | '/') juxt)*
//   juxt   := unary unary*            (juxtaposition; only when the next
//                                      token can start an atom)
//   unary  := '-' unary | factor
//   factor := atom ('^' nat)?
//   atom   := name | integer | '(' expr ')'
//
// In dra mode `*` and `/` are diamond products, while juxtaposition and `^`
// multiply representatives in the ambient algebra before reducing modulo II.
// That is exactly how rendered normal forms read back: "(c) d2 x2" is the
// class of the monomial d2 x2, not a diamond product.

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drasp4/ambient.hpp"
#include "drasp4/gwa.hpp"

namespace drasp4 {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, std::string found);
  std::size_t offset() const { return offset_; }  // 1-based byte offset
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

/// Semantic errors found while evaluating a well-formed expression.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Ast {
  enum class Kind { number, name, neg, add, sub, mul, div, juxt, pow };
  Kind kind;
  std::size_t offset = 0;  // 1-based
  std::string text;        // number digits or name
  unsigned exponent = 0;   // for pow
  std::vector<std::unique_ptr<Ast>> kids;
};

std::unique_ptr<Ast> parse(std::string_view src);

enum class Mode { ambient, dra, base };

AmbientElem eval_ambient(const Ast& ast);
DraElem eval_dra(const Ast& ast);
/// Rank-two base ring R[t1, t2].
BasePoly eval_base(const Ast& ast);
/// A dynamical scalar; everything else is rejected.
RatFunc eval_scalar(const Ast& ast);

}  // namespace drasp4
