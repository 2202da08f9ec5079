#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfgl/scalar.hpp"

namespace qfgl::cli {

// Grammar:
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := atom ('^' exponent)?
//   exponent := '-'? integer ('^' exponent)?      (right-associative)
//   atom     := integer | 'q' | 's' | call | '(' expr ')'
//   call     := name '(' expr (',' expr)* ')'
// Unary minus sits below '^', so -q^2 is -(q^2) as canonical strings expect.
struct Expr {
  enum class Kind { kInteger, kSymbol, kNegate, kAdd, kSub, kMul, kDiv, kPow, kCall };

  Kind kind = Kind::kInteger;
  Integer value;         // kInteger
  std::string name;      // kSymbol, kCall
  long exponent = 0;     // kPow
  std::vector<Expr> args;  // operands / call arguments

  friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Expr parse_expr(std::string_view text);
// Throws MathError on division by zero, non-integer builtin arguments and the like.
Scalar evaluate(const Expr& e);
// Parenthesized wherever precedence needs it; parse_expr(print(e)) == e.
std::string print(const Expr& e);

struct Builtin {
  std::string name;
  std::size_t arity;
};
const std::vector<Builtin>& builtins();

}  // namespace qfgl::cli
