#include "qaseries/expr.hpp"

#include <cctype>
#include <limits>

#include "qaseries/errors.hpp"

namespace qaseries {

namespace {

class Parser {
 public:
  Parser(std::string_view input, std::size_t nvars)
      : input_(input), nvars_(nvars) {}

  ExprAst parse() {
    ExprAst ast = expr();
    skip_space();
    if (pos_ != input_.size()) {
      throw ParseError(std::string("unexpected '") + input_[pos_] + "'", pos_);
    }
    return ast;
  }

 private:
  void skip_space() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < input_.size() ? input_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  // Called with '-' at pos_.
  bool digit_after_minus() const {
    std::size_t i = pos_ + 1;
    while (i < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[i]))) {
      ++i;
    }
    return i < input_.size() &&
           std::isdigit(static_cast<unsigned char>(input_[i]));
  }

  std::string natural_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < input_.size() &&
           std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a natural number", pos_);
    return std::string(input_.substr(start, pos_ - start));
  }

  unsigned small_natural() {
    const std::size_t start = pos_;
    const mpz_class value(natural_digits(), 10);
    if (value > std::numeric_limits<unsigned>::max()) {
      throw ParseError("number too large", start);
    }
    return static_cast<unsigned>(value.get_ui());
  }

  ExprAst expr() {
    ExprAst left = term();
    for (;;) {
      ExprAst::Kind kind;
      if (accept('+')) {
        kind = ExprAst::Kind::kSum;
      } else if (accept('-')) {
        kind = ExprAst::Kind::kDifference;
      } else {
        return left;
      }
      ExprAst node;
      node.kind = kind;
      node.children.push_back(std::move(left));
      node.children.push_back(term());
      left = std::move(node);
    }
  }

  ExprAst term() {
    ExprAst first = factor();
    if (peek() != '*') return first;
    ExprAst node;
    node.kind = ExprAst::Kind::kProduct;
    node.children.push_back(std::move(first));
    while (accept('*')) node.children.push_back(factor());
    return node;
  }

  ExprAst factor() {
    ExprAst b = base();
    if (!accept('^')) return b;
    ExprAst node;
    node.kind = ExprAst::Kind::kPower;
    node.exponent = small_natural();
    node.children.push_back(std::move(b));
    return node;
  }

  ExprAst base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      const unsigned index = small_natural();
      if (index < 1 || index > nvars_) {
        throw ParseError("variable x" + std::to_string(index) +
                             " out of range (nvars = " +
                             std::to_string(nvars_) + ")",
                         start);
      }
      ExprAst node;
      node.kind = ExprAst::Kind::kVariable;
      node.variable = index;
      return node;
    }
    if (c == 'i') {
      if (input_.substr(pos_, 3) != "inv") {
        throw ParseError("unknown identifier", pos_);
      }
      pos_ += 3;
      expect('(');
      ExprAst node;
      node.kind = ExprAst::Kind::kUnitInverse;
      node.children.push_back(expr());
      expect(')');
      return node;
    }
    if (c == '-' && !digit_after_minus()) {
      // -x1, -(...), -inv(...): product with rational -1.
      ++pos_;
      ExprAst minus_one;
      minus_one.kind = ExprAst::Kind::kRational;
      minus_one.value = -1;
      ExprAst node;
      node.kind = ExprAst::Kind::kProduct;
      node.children.push_back(std::move(minus_one));
      node.children.push_back(factor());
      return node;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      return rational();
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  ExprAst rational() {
    const bool negative = accept('-');
    mpz_class num(natural_digits(), 10);
    mpz_class den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = mpz_class(natural_digits(), 10);
      if (den == 0) throw ParseError("zero denominator", at);
    }
    if (negative) num = -num;
    ExprAst node;
    node.kind = ExprAst::Kind::kRational;
    node.value = make_coeff(num, den);
    return node;
  }

  std::string_view input_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string join_children(const ExprAst& ast) {
  std::string out;
  for (const auto& child : ast.children) {
    if (!out.empty()) out += ", ";
    out += to_string(child);
  }
  return out;
}

}  // namespace

std::string to_string(const ExprAst& ast) {
  using Kind = ExprAst::Kind;
  switch (ast.kind) {
    case Kind::kRational:
      return "rational " + to_string(ast.value);
    case Kind::kVariable:
      return "var " + std::to_string(ast.variable);
    case Kind::kSum:
      return "sum(" + join_children(ast) + ")";
    case Kind::kDifference:
      return "difference(" + join_children(ast) + ")";
    case Kind::kProduct:
      return "product(" + join_children(ast) + ")";
    case Kind::kPower:
      return "power(" + join_children(ast) + ", " +
             std::to_string(ast.exponent) + ")";
    case Kind::kUnitInverse:
      return "unit-inverse(" + join_children(ast) + ")";
  }
  return "?";
}

ExprAst parse_expr(std::string_view input, std::size_t nvars) {
  return Parser(input, nvars).parse();
}

Series eval_expr(const ExprAst& ast, const RunConfig& config) {
  using Kind = ExprAst::Kind;
  const auto n = config.nvars;
  const auto trunc = config.trunc;
  switch (ast.kind) {
    case Kind::kRational:
      return Series::constant(ast.value, n, trunc);
    case Kind::kVariable:
      return Series::variable(ast.variable, n, trunc);
    case Kind::kSum:
      return add(eval_expr(ast.children[0], config),
                 eval_expr(ast.children[1], config));
    case Kind::kDifference:
      return subtract(eval_expr(ast.children[0], config),
                      eval_expr(ast.children[1], config));
    case Kind::kProduct: {
      Series acc = eval_expr(ast.children[0], config);
      for (std::size_t i = 1; i < ast.children.size(); ++i) {
        acc = mul(acc, eval_expr(ast.children[i], config));
      }
      return acc;
    }
    case Kind::kPower:
      return pow(eval_expr(ast.children[0], config), ast.exponent);
    case Kind::kUnitInverse:
      return invert_unit(eval_expr(ast.children[0], config));
  }
  throw InvariantError("eval_expr: unknown node kind");
}

Series parse_series(std::string_view input, std::size_t nvars,
                    unsigned trunc) {
  RunConfig config;
  config.nvars = nvars;
  config.trunc = trunc;
  return eval_expr(parse_expr(input, nvars), config);
}

}  // namespace qaseries
