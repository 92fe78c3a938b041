#include "trinet/exprparse.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace trinet {

ParseError::ParseError(const std::string &message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

enum class Op { Number, X, Y, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Sqrt, Abs };

struct Expr::Node {
  Op op;
  double value = 0.0;
  std::array<std::shared_ptr<const Node>, 2> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

constexpr int kMaxDepth = 200;
constexpr int kMaxNodes = 10000;

struct FunctionName {
  std::string_view name;
  Op op;
};

constexpr std::array<FunctionName, 5> kFunctions{{
    {"sin", Op::Sin},
    {"cos", Op::Cos},
    {"exp", Op::Exp},
    {"sqrt", Op::Sqrt},
    {"abs", Op::Abs},
}};

NodePtr leaf(Op op, double value = 0.0) {
  return std::make_shared<const Expr::Node>(Expr::Node{op, value, {}});
}

NodePtr unary(Op op, NodePtr arg) {
  return std::make_shared<const Expr::Node>(Expr::Node{op, 0.0, {std::move(arg), nullptr}});
}

NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
  return std::make_shared<const Expr::Node>(Expr::Node{op, 0.0, {std::move(lhs), std::move(rhs)}});
}

class Parser {
public:
  explicit Parser(std::string_view source) : src_(source) {}

  NodePtr parse_all() {
    NodePtr root = sum();
    skip_space();
    if (pos_ != src_.size())
      throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
    return root;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  int nodes_ = 0;

  void count_node() {
    if (++nodes_ > kMaxNodes)
      throw ParseError("expression too large", pos_);
  }

  struct DepthGuard {
    Parser &p;
    explicit DepthGuard(Parser &parser) : p(parser) {
      if (++p.depth_ > kMaxDepth)
        throw ParseError("expression nested too deeply", p.pos_);
    }
    ~DepthGuard() { --p.depth_; }
  };

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size())
        throw ParseError(std::string("expected '") + c + "' but reached end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  NodePtr sum() {
    DepthGuard guard(*this);
    NodePtr lhs = product();
    for (;;) {
      count_node();
      if (accept('+'))
        lhs = binary(Op::Add, lhs, product());
      else if (accept('-'))
        lhs = binary(Op::Sub, lhs, product());
      else
        return lhs;
    }
  }

  NodePtr product() {
    NodePtr lhs = signed_term();
    for (;;) {
      count_node();
      if (accept('*'))
        lhs = binary(Op::Mul, lhs, signed_term());
      else if (accept('/'))
        lhs = binary(Op::Div, lhs, signed_term());
      else
        return lhs;
    }
  }

  NodePtr signed_term() {
    DepthGuard guard(*this);
    if (accept('-'))
      return unary(Op::Neg, signed_term());
    if (accept('+'))
      return signed_term();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^'))
      return binary(Op::Pow, base, signed_term());
    return base;
  }

  NodePtr primary() {
    count_node();
    skip_space();
    if (pos_ >= src_.size())
      throw ParseError("unexpected end of input", pos_);

    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();
    if (std::isalpha(static_cast<unsigned char>(c)))
      return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    double value = 0.0;
    auto [end, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value,
                                     std::chars_format::general);
    if (ec == std::errc::invalid_argument)
      throw ParseError("malformed number", start);
    if (ec == std::errc::result_out_of_range)
      throw ParseError("number out of range", start);
    pos_ = static_cast<std::size_t>(end - src_.data());
    return leaf(Op::Number, value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);

    if (word == "x")
      return leaf(Op::X);
    if (word == "y")
      return leaf(Op::Y);
    for (const auto &fn : kFunctions) {
      if (word == fn.name) {
        expect('(');
        NodePtr arg = sum();
        expect(')');
        return unary(fn.op, arg);
      }
    }
    throw ParseError("unknown identifier '" + std::string(word) + "'", start);
  }
};

double eval_node(const Expr::Node &n, double x, double y) {
  switch (n.op) {
  case Op::Number:
    return n.value;
  case Op::X:
    return x;
  case Op::Y:
    return y;
  default:
    break;
  }

  const double u = eval_node(*n.args[0], x, y);
  switch (n.op) {
  case Op::Neg:
    return -u;
  case Op::Sin:
    return std::sin(u);
  case Op::Cos:
    return std::cos(u);
  case Op::Exp:
    return std::exp(u);
  case Op::Abs:
    return std::abs(u);
  case Op::Sqrt:
    if (u < 0.0)
      throw EvalError("sqrt of negative value");
    return std::sqrt(u);
  default:
    break;
  }

  const double v = eval_node(*n.args[1], x, y);
  switch (n.op) {
  case Op::Add:
    return u + v;
  case Op::Sub:
    return u - v;
  case Op::Mul:
    return u * v;
  case Op::Div:
    if (v == 0.0)
      throw EvalError("division by zero");
    return u / v;
  case Op::Pow: {
    const double r = std::pow(u, v);
    if (std::isnan(r) && !std::isnan(u) && !std::isnan(v))
      throw EvalError("power of negative base with non-integer exponent");
    return r;
  }
  default:
    throw EvalError("corrupt expression tree");
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_node(const Expr::Node &n, std::string &out) {
  auto infix = [&](const char *op) {
    out += '(';
    print_node(*n.args[0], out);
    out += op;
    print_node(*n.args[1], out);
    out += ')';
  };
  auto call = [&](const char *name) {
    out += name;
    out += '(';
    print_node(*n.args[0], out);
    out += ')';
  };

  switch (n.op) {
  case Op::Number:
    out += '(' + format_number(n.value) + ')';
    break;
  case Op::X:
    out += 'x';
    break;
  case Op::Y:
    out += 'y';
    break;
  case Op::Neg:
    out += "(-";
    print_node(*n.args[0], out);
    out += ')';
    break;
  case Op::Add:
    infix("+");
    break;
  case Op::Sub:
    infix("-");
    break;
  case Op::Mul:
    infix("*");
    break;
  case Op::Div:
    infix("/");
    break;
  case Op::Pow:
    infix("^");
    break;
  case Op::Sin:
    call("sin");
    break;
  case Op::Cos:
    call("cos");
    break;
  case Op::Exp:
    call("exp");
    break;
  case Op::Sqrt:
    call("sqrt");
    break;
  case Op::Abs:
    call("abs");
    break;
  }
}

} // namespace

double Expr::operator()(double x, double y) const { return eval_node(*root_, x, y); }

std::string Expr::to_string() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

Expr parse(std::string_view source) { return Expr(Parser(source).parse_all()); }

} // namespace trinet
