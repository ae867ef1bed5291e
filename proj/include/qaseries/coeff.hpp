#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qaseries {

// Exact rational coefficient. GMP keeps mpq values canonical (lowest terms,
// positive denominator, zero as 0/1) across arithmetic.
using Coeff = mpq_class;

// Builds num/den in lowest terms. Throws PreconditionError when den is 0.
Coeff make_coeff(const mpz_class& num, const mpz_class& den);

// Parses "p" or "p/q" with an optional leading '-'. Throws ParseError.
Coeff parse_coeff(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Coeff& c);

}  // namespace qaseries
