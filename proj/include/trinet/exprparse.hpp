#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trinet {

/// Malformed source text. `position()` is the 0-based byte offset at which
/// the parser gave up.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Division by zero or a real-valued function applied outside its domain.
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Immutable expression tree in the variables x and y.
///
/// Grammar, loosest to tightest:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?          right associative
///   primary := number | 'x' | 'y' | func '(' sum ')' | '(' sum ')'
///   func    := sin | cos | exp | sqrt | abs
/// so "-2^2" is -(2^2) and "2^3^2" is 2^(3^2).
class Expr {
public:
  struct Node;

  double operator()(double x, double y) const;

  /// Fully parenthesised form that parses back to an equivalent tree.
  std::string to_string() const;

private:
  friend Expr parse(std::string_view source);
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

Expr parse(std::string_view source);

} // namespace trinet
