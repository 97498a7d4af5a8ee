#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace htrans {

// Syntax error with the byte offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t at)
      : std::runtime_error(message + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

// Domain error during evaluation (log of nonpositive, division by zero,
// invalid power, overflow). The caller attaches grid-node context.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic expression over one variable (spelled `t` or `x`, both bind to
// the same value), real literals, `pi`, + - * / ^ (right-associative, binds
// tighter than unary minus), and sin cos tan exp log sqrt sinh cosh abs.
class Expression {
 public:
  static Expression parse(std::string_view text);

  double eval(double value) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace htrans
