#include "htrans/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace htrans {

namespace {

enum class Fn { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Abs };

Fn lookup_fn(std::string_view name, std::size_t at) {
  if (name == "sin") return Fn::Sin;
  if (name == "cos") return Fn::Cos;
  if (name == "tan") return Fn::Tan;
  if (name == "exp") return Fn::Exp;
  if (name == "log") return Fn::Log;
  if (name == "sqrt") return Fn::Sqrt;
  if (name == "sinh") return Fn::Sinh;
  if (name == "cosh") return Fn::Cosh;
  if (name == "abs") return Fn::Abs;
  throw ParseError("unknown function '" + std::string(name) + "'", at);
}

}  // namespace

struct Expression::Node {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
  double number = 0.0;
  Fn fn = Fn::Sin;
  std::unique_ptr<Node> a;
  std::unique_ptr<Node> b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // expr := term (('+'|'-') term)*
  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (consume('+'))
        lhs = make(Node::Kind::Add, std::move(lhs), parse_term());
      else if (consume('-'))
        lhs = make(Node::Kind::Sub, std::move(lhs), parse_term());
      else
        return lhs;
    }
  }

  // term := factor (('*'|'/') factor)*
  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (consume('*'))
        lhs = make(Node::Kind::Mul, std::move(lhs), parse_factor());
      else if (consume('/'))
        lhs = make(Node::Kind::Div, std::move(lhs), parse_factor());
      else
        return lhs;
    }
  }

  // factor := '-' factor | power; '^' binds tighter, so -2^2 = -(2^2)
  NodePtr parse_factor() {
    if (consume('-')) return make(Node::Kind::Neg, parse_factor());
    return parse_power();
  }

  // power := atom ['^' factor], right-associative with unary minus allowed
  // in the exponent (2^-3)
  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (consume('^'))
      return make(Node::Kind::Pow, std::move(base), parse_factor());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
    const char c = text[pos];

    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", pos);
      return inner;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      const char* begin = text.data() + pos;
      const char* end = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc())
        throw ParseError("malformed number", pos);
      pos += static_cast<std::size_t>(ptr - begin);
      auto n = make(Node::Kind::Number);
      n->number = value;
      return n;
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      const std::string_view name = text.substr(start, pos - start);
      if (peek() == '(') {
        const Fn fn = lookup_fn(name, start);
        ++pos;  // '('
        NodePtr arg = parse_expr();
        if (!consume(')')) throw ParseError("expected ')' after function argument", pos);
        auto n = make(Node::Kind::Call, std::move(arg));
        n->fn = fn;
        return n;
      }
      if (name == "t" || name == "x") return make(Node::Kind::Variable);
      if (name == "pi") {
        auto n = make(Node::Kind::Number);
        n->number = std::numbers::pi;
        return n;
      }
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }

    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

double eval_node(const Node& node, double value) {
  switch (node.kind) {
    case Node::Kind::Number:
      return node.number;
    case Node::Kind::Variable:
      return value;
    case Node::Kind::Neg:
      return -eval_node(*node.a, value);
    case Node::Kind::Add:
      return eval_node(*node.a, value) + eval_node(*node.b, value);
    case Node::Kind::Sub:
      return eval_node(*node.a, value) - eval_node(*node.b, value);
    case Node::Kind::Mul:
      return eval_node(*node.a, value) * eval_node(*node.b, value);
    case Node::Kind::Div: {
      const double num = eval_node(*node.a, value);
      const double den = eval_node(*node.b, value);
      if (den == 0.0) throw EvalError("division by zero");
      return num / den;
    }
    case Node::Kind::Pow: {
      const double base = eval_node(*node.a, value);
      const double exponent = eval_node(*node.b, value);
      const double r = std::pow(base, exponent);
      if (std::isnan(r)) throw EvalError("invalid power");
      return r;
    }
    case Node::Kind::Call: {
      const double arg = eval_node(*node.a, value);
      switch (node.fn) {
        case Fn::Sin: return std::sin(arg);
        case Fn::Cos: return std::cos(arg);
        case Fn::Tan: return std::tan(arg);
        case Fn::Exp: return std::exp(arg);
        case Fn::Log:
          if (arg <= 0.0) throw EvalError("log of nonpositive value");
          return std::log(arg);
        case Fn::Sqrt:
          if (arg < 0.0) throw EvalError("sqrt of negative value");
          return std::sqrt(arg);
        case Fn::Sinh: return std::sinh(arg);
        case Fn::Cosh: return std::cosh(arg);
        case Fn::Abs: return std::abs(arg);
      }
      throw std::logic_error("eval_node: unreachable");
    }
  }
  throw std::logic_error("eval_node: unreachable");
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser parser{text};
  if (parser.at_end()) throw ParseError("empty expression", 0);
  NodePtr root = parser.parse_expr();
  if (!parser.at_end())
    throw ParseError("trailing input", parser.pos);
  Expression expr;
  expr.root_ = std::shared_ptr<const Node>(root.release());
  expr.text_ = std::string(text);
  return expr;
}

double Expression::eval(double value) const {
  const double r = eval_node(*root_, value);
  if (!std::isfinite(r)) throw EvalError("non-finite value");
  return r;
}

}  // namespace htrans
