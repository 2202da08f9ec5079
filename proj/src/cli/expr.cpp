#include "qfgl/cli/expr.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

#include "qfgl/lambda.hpp"
#include "qfgl/qcomb.hpp"

namespace qfgl::cli {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table{
      {"qint", 1}, {"qfact", 1}, {"qbinom", 2}, {"cyclotomic", 1}, {"adams", 2}};
  return table;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = binary(Expr::Kind::kAdd, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::kSub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = binary(Expr::Kind::kMul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::kDiv, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::kNegate;
      e.args.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    Expr e;
    e.kind = Expr::Kind::kPow;
    e.exponent = exponent();
    e.args.push_back(std::move(base));
    return e;
  }

  long exponent() {
    skip_space();
    const std::size_t start = pos_;
    const bool negative = accept('-');
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be an integer");
    }
    const Integer magnitude = integer_literal();
    if (!magnitude.fits_slong_p() || magnitude > 1000000) {
      pos_ = start;
      fail("exponent too large");
    }
    long base = magnitude.get_si() * (negative ? -1 : 1);
    if (accept('^')) {
      const long upper = exponent();
      if (upper < 0) {
        pos_ = start;
        fail("nested exponent must be non-negative");
      }
      long result = 1;
      for (long i = 0; i < upper && result != 0; ++i) {
        result *= base;
        if (result > 1000000 || result < -1000000) {
          pos_ = start;
          fail("exponent too large");
        }
      }
      base = result;
    }
    return base;
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::kInteger;
      e.value = integer_literal();
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "q" || name == "s") {
        Expr e;
        e.kind = Expr::Kind::kSymbol;
        e.name = std::move(name);
        return e;
      }
      const auto& table = builtins();
      auto it = std::find_if(table.begin(), table.end(), [&](const Builtin& b) { return b.name == name; });
      if (it == table.end()) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      Expr e;
      e.kind = Expr::Kind::kCall;
      e.name = std::move(name);
      expect('(');
      e.args.push_back(expr());
      while (accept(',')) e.args.push_back(expr());
      if (e.args.size() != it->arity) {
        pos_ = start;
        fail(e.name + " takes " + std::to_string(it->arity) + " argument" + (it->arity == 1 ? "" : "s") + ", got " +
             std::to_string(e.args.size()));
      }
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int integer_argument(const Expr& call, std::size_t index) {
  const Scalar v = evaluate(call.args[index]);
  if (!v.is_rational_constant() || !is_integral(v.as_rational())) {
    throw MathError(call.name + ": argument " + std::to_string(index + 1) + " must be an integer, got " + v.to_string());
  }
  const Integer n = v.as_rational().get_num();
  if (!n.fits_sint_p() || n > 10000 || n < -10000) throw MathError(call.name + ": argument out of range");
  return static_cast<int>(n.get_si());
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 1;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return 2;
    case Expr::Kind::kNegate:
      return 3;
    case Expr::Kind::kPow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_precedence) {
  std::string s = print(e);
  return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Scalar evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kInteger:
      return Scalar(e.value);
    case Expr::Kind::kSymbol:
      return e.name == "q" ? Scalar::q() : Scalar::s();
    case Expr::Kind::kNegate:
      return -evaluate(e.args[0]);
    case Expr::Kind::kAdd:
      return evaluate(e.args[0]) + evaluate(e.args[1]);
    case Expr::Kind::kSub:
      return evaluate(e.args[0]) - evaluate(e.args[1]);
    case Expr::Kind::kMul:
      return evaluate(e.args[0]) * evaluate(e.args[1]);
    case Expr::Kind::kDiv:
      return evaluate(e.args[0]) / evaluate(e.args[1]);
    case Expr::Kind::kPow:
      return pow(evaluate(e.args[0]), static_cast<int>(e.exponent));
    case Expr::Kind::kCall:
      break;
  }
  if (e.name == "qint") return q_int(integer_argument(e, 0));
  if (e.name == "qfact") return q_fact(integer_argument(e, 0));
  if (e.name == "qbinom") return q_binom(integer_argument(e, 0), integer_argument(e, 1));
  if (e.name == "cyclotomic") return cyclotomic(integer_argument(e, 0));
  if (e.name == "adams") return adams(evaluate(e.args[0]), integer_argument(e, 1));
  throw MathError("unknown builtin " + e.name);
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kInteger:
      return e.value.get_str();
    case Expr::Kind::kSymbol:
      return e.name;
    case Expr::Kind::kNegate:
      return "-" + wrap(e.args[0], 3);
    case Expr::Kind::kAdd:
      return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case Expr::Kind::kSub:
      return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case Expr::Kind::kMul:
      return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    case Expr::Kind::kDiv:
      return wrap(e.args[0], 2) + "/" + wrap(e.args[1], 3);
    case Expr::Kind::kPow:
      return wrap(e.args[0], 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::kCall:
      break;
  }
  std::string out = e.name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += print(e.args[i]);
  }
  return out + ")";
}

}  // namespace qfgl::cli
