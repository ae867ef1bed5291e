#pragma once

#include <cstddef>
#include <vector>

#include "qaseries/series.hpp"

namespace qaseries {

// x_k^d + a_1 x_k^(d-1) + ... + a_d with every a_i(0) = 0.
//
// The a_i live in the nvars - 1 remaining variables, compacted: x_k is
// removed and the variables after it shift down by one.
struct DistinguishedPoly {
  unsigned d = 0;
  std::size_t k = 1;
  std::size_t nvars = 1;
  unsigned trunc = 0;
  std::vector<Series> coeffs;  // a_1 ... a_d

  // a_i embedded back into nvars variables (no x_k dependence).
  Series coeff_embedded(unsigned i) const;
};

struct DivisionResult {
  Series quotient;
  Series remainder;
  unsigned d;
  std::size_t k;
  Degree guaranteed_degree;
};

struct PreparationResult {
  Series unit;
  DistinguishedPoly poly;
  Degree guaranteed_degree;
};

// g = q*f + r with deg_{x_k} r < d, where d = order of f in x_k.
//
// The inputs are read as the polynomials they store. q and r are the exact
// Weierstrass quotient and remainder of those polynomials, truncated to total
// degree min(g.trunc, f.trunc); the identity then holds through that degree.
// The reported guaranteed degree is min(g.G, f.G) - d.
//
// Throws PreconditionError if f is FLAT in x_k or nvars differ.
DivisionResult weierstrass_divide(const Series& g, const Series& f,
                                  std::size_t k);

// f = U * P with U a unit and P distinguished of degree d = order of f in
// x_k. Computed by dividing x_k^d by f: x_k^d = q*f + r, U = 1/q,
// P = x_k^d - r.
PreparationResult weierstrass_prepare(const Series& f, std::size_t k);

// The series x_k^d + sum a_i x_k^(d-i) in P.nvars variables.
Series expand(const DistinguishedPoly& p);

}  // namespace qaseries
