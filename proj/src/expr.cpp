#include "randers/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>

#include "randers/error.hpp"

namespace randers {

enum class NodeKind {
  kConstant,
  kVariable,  // chart variable, 0-based index
  kParam,     // curve parameter t
  kAdd,
  kSub,
  kMul,
  kDiv,
  kNeg,
  kPow,  // integer exponent
  kSin,
  kCos,
  kExp,
  kSqrt,
};

struct Expression::Node {
  NodeKind kind;
  double value = 0.0;      // kConstant
  int var_index = -1;      // kVariable
  long long exponent = 0;  // kPow
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make(NodeKind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

[[noreturn]] void fail(std::string_view text, size_t pos, const std::string& msg) {
  throw ConfigError("expression error at position " + std::to_string(pos + 1) +
                    " in \"" + std::string(text) + "\": " + msg);
}

class Parser {
 public:
  Parser(std::string_view text, int dimension, bool allow_param)
      : text_(text), dim_(dimension), allow_param_(allow_param) {}

  NodePtr run() {
    skip_ws();
    if (pos_ >= text_.size()) fail(text_, pos_, "empty expression");
    NodePtr e = expression();
    skip_ws();
    if (pos_ < text_.size())
      fail(text_, pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

  bool uses_param = false;

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int dim_;
  bool allow_param_;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        NodePtr rhs = term();
        lhs = make(c == '+' ? NodeKind::kAdd : NodeKind::kSub, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        NodePtr rhs = unary();
        lhs = make(c == '*' ? NodeKind::kMul : NodeKind::kDiv, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (consume('-')) return make(NodeKind::kNeg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (consume('^')) {
      skip_ws();
      size_t at = pos_;
      bool neg = consume('-');
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail(text_, at, "exponent must be a constant integer");
      long long e = 0;
      size_t digits_at = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 1000000) fail(text_, digits_at, "exponent too large");
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '.')
        fail(text_, digits_at, "exponent must be a constant integer");
      auto n = std::make_shared<Expression::Node>();
      n->kind = NodeKind::kPow;
      n->exponent = neg ? -e : e;
      n->a = base;
      return n;
    }
    return base;
  }

  NodePtr primary() {
    char c = peek();
    size_t at = pos_;
    if (c == '(') {
      ++pos_;
      NodePtr e = expression();
      if (!consume(')')) fail(text_, pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier(at);
    if (c == '\0') fail(text_, at, "unexpected end of expression");
    fail(text_, at, std::string("unexpected '") + c + "'");
  }

  NodePtr number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail(text_, pos_, "malformed number");
    pos_ += static_cast<size_t>(end - begin);
    auto n = std::make_shared<Expression::Node>();
    n->kind = NodeKind::kConstant;
    n->value = v;
    return n;
  }

  NodePtr identifier(size_t at) {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));

    if (name == "t") {
      if (!allow_param_) fail(text_, at, "parameter t is not allowed here");
      uses_param = true;
      return make(NodeKind::kParam);
    }
    if (name.size() > 1 && name[0] == 'x' &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
      long idx = std::strtol(name.c_str() + 1, nullptr, 10);
      if (idx < 1 || idx > dim_)
        fail(text_, at, "variable index out of range: " + name + " (dimension " +
                            std::to_string(dim_) + ")");
      auto n = std::make_shared<Expression::Node>();
      n->kind = NodeKind::kVariable;
      n->var_index = static_cast<int>(idx - 1);
      return n;
    }

    std::optional<NodeKind> fn;
    if (name == "sin") fn = NodeKind::kSin;
    else if (name == "cos") fn = NodeKind::kCos;
    else if (name == "exp") fn = NodeKind::kExp;
    else if (name == "sqrt") fn = NodeKind::kSqrt;
    if (fn) {
      if (!consume('(')) fail(text_, pos_, "expected '(' after " + name);
      NodePtr arg = expression();
      if (!consume(')')) fail(text_, pos_, "expected ')'");
      return make(*fn, arg);
    }
    fail(text_, at, "unknown identifier: " + name);
  }
};

struct EvalCtx {
  std::span<const double> x;
  std::span<const double> xdot;
  double t = 0.0;
  double tdot = 0.0;
};

Dual eval_node(const Expression::Node& n, const EvalCtx& ctx) {
  switch (n.kind) {
    case NodeKind::kConstant: return {n.value, 0.0};
    case NodeKind::kVariable:
      return {ctx.x[static_cast<size_t>(n.var_index)],
              ctx.xdot.empty() ? 0.0 : ctx.xdot[static_cast<size_t>(n.var_index)]};
    case NodeKind::kParam: return {ctx.t, ctx.tdot};
    case NodeKind::kAdd: return eval_node(*n.a, ctx) + eval_node(*n.b, ctx);
    case NodeKind::kSub: return eval_node(*n.a, ctx) - eval_node(*n.b, ctx);
    case NodeKind::kMul: return eval_node(*n.a, ctx) * eval_node(*n.b, ctx);
    case NodeKind::kDiv: return eval_node(*n.a, ctx) / eval_node(*n.b, ctx);
    case NodeKind::kNeg: return -eval_node(*n.a, ctx);
    case NodeKind::kPow: return pow_int(eval_node(*n.a, ctx), n.exponent);
    case NodeKind::kSin: return sin(eval_node(*n.a, ctx));
    case NodeKind::kCos: return cos(eval_node(*n.a, ctx));
    case NodeKind::kExp: return exp(eval_node(*n.a, ctx));
    case NodeKind::kSqrt: return sqrt(eval_node(*n.a, ctx));
  }
  throw NumericalError("corrupt expression node");
}

Dual checked_eval(const Expression::Node& root, const EvalCtx& ctx,
                  const std::string& text) {
  Dual r = eval_node(root, ctx);
  if (!std::isfinite(r.val) || !std::isfinite(r.dot))
    throw NumericalError("expression \"" + text + "\" evaluated to a non-finite value");
  return r;
}

}  // namespace

Expression Expression::parse(std::string_view text, int dimension, bool allow_param) {
  if (text.empty()) throw ConfigError("empty expression");
  Parser p(text, dimension, allow_param);
  Expression e;
  e.root_ = p.run();
  e.text_ = std::string(text);
  e.dimension_ = dimension;
  e.uses_param_ = p.uses_param;
  return e;
}

double Expression::eval(std::span<const double> point) const {
  return eval_dual(point, {}).first;
}

std::pair<double, double> Expression::eval_dual(std::span<const double> point,
                                                std::span<const double> direction) const {
  if (!root_) throw ConfigError("evaluating an empty expression");
  if (static_cast<int>(point.size()) != dimension_)
    throw ConfigError("point dimension " + std::to_string(point.size()) +
                      " does not match expression dimension " + std::to_string(dimension_));
  if (!direction.empty() && direction.size() != point.size())
    throw ConfigError("direction dimension does not match point dimension");
  if (uses_param_)
    throw ConfigError("expression \"" + text_ + "\" uses t; evaluate via eval_param");
  EvalCtx ctx{point, direction, 0.0, 0.0};
  Dual r = checked_eval(*root_, ctx, text_);
  return {r.val, r.dot};
}

std::pair<double, double> Expression::eval_param(double t, double t_dot) const {
  if (!root_) throw ConfigError("evaluating an empty expression");
  EvalCtx ctx{{}, {}, t, t_dot};
  Dual r = checked_eval(*root_, ctx, text_);
  return {r.val, r.dot};
}

}  // namespace randers
