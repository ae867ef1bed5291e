#pragma once

#include <cstddef>
#include <utility>

#include "qaseries/series.hpp"

namespace qaseries {

// Solves f(x', phi(x')) = 0 for x_k = phi, phi(0) = 0.
//
// Requires f(0) = 0 and df/dx_k(0) != 0. The result lives in nvars - 1
// variables: x_k is removed and the variables after it are renumbered down
// by one. Successive substitution: each pass fixes one more total degree.
Series implicit_solve(const Series& f, std::size_t k);

// g with f = x_k * g. Every term of f must contain x_k.
Series monomial_divide(const Series& f, std::size_t k);

struct EvenOddParts {
  Series even;  // terms with even x_k exponent
  Series odd;   // terms with odd x_k exponent
};

// f = even + odd, split by the parity of the x_k exponent. This is the
// symmetrisation (f(x', x_k) +- f(x', -x_k)) / 2 at the coefficient level.
EvenOddParts even_odd_split(const Series& f, std::size_t k);

// f0 with substitute_square(f0, k) == g. g must be even in x_k.
Series halve_exponents(const Series& g, std::size_t k);

}  // namespace qaseries
