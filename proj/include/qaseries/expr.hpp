#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qaseries/coeff.hpp"
#include "qaseries/series.hpp"

namespace qaseries {

// Expression grammar (whitespace between tokens is ignored):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | 'x' nat | '(' expr ')' | 'inv(' expr ')'
//   rational := '-'? nat ('/' nat)?
//
// Sums and differences associate to the left; products are flattened.
struct ExprAst {
  enum class Kind {
    kRational,
    kVariable,
    kSum,
    kDifference,
    kProduct,
    kPower,
    kUnitInverse,
  };

  Kind kind = Kind::kRational;
  Coeff value;               // kRational
  std::size_t variable = 0;  // kVariable, 1-based
  unsigned exponent = 0;     // kPower
  std::vector<ExprAst> children;
};

// S-expression dump, e.g. "sum(power(var 1, 2), product(rational -3/2, ...))".
std::string to_string(const ExprAst& ast);

// Throws ParseError on bad syntax or a variable index outside 1..nvars.
ExprAst parse_expr(std::string_view input, std::size_t nvars);

struct RunConfig {
  enum class OutputMode { kText, kJson };

  std::size_t nvars = 2;
  unsigned trunc = 8;
  std::size_t var = 2;  // distinguished variable, 1-based
  OutputMode mode = OutputMode::kText;
};

// Evaluates at truncation config.trunc in config.nvars variables. inv() of a
// series with zero constant term throws PreconditionError.
Series eval_expr(const ExprAst& ast, const RunConfig& config);

// parse_expr + eval_expr.
Series parse_series(std::string_view input, std::size_t nvars, unsigned trunc);

}  // namespace qaseries
