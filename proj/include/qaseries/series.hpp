#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qaseries/coeff.hpp"
#include "qaseries/expo.hpp"

namespace qaseries {

// Degrees that can be "nothing certified" are signed; -1 means no
// coefficient of the series is certified.
using Degree = int;

// Truncated multivariate formal power series with exact rational
// coefficients.
//
// Terms of total degree > trunc() are never stored. Coefficients of total
// degree <= guaranteed_degree() are certified; those above it are whatever
// the computation produced and must not be relied on. Variables are
// numbered from 1 in the public API (x1 ... xn), from 0 inside Expo.
//
// Values are immutable once built.
class Series {
 public:
  using TermMap = std::map<Expo, Coeff, GradedLexLess>;

  // Zero series, guaranteed to degree trunc.
  Series(std::size_t nvars, unsigned trunc);

  // Drops zero coefficients and terms above trunc. guaranteed is clamped to
  // at most trunc.
  Series(std::size_t nvars, unsigned trunc, TermMap terms, Degree guaranteed);

  static Series constant(const Coeff& c, std::size_t nvars, unsigned trunc);
  // x_k, 1-based.
  static Series variable(std::size_t k, std::size_t nvars, unsigned trunc);
  static Series monomial(const Expo& e, const Coeff& c, unsigned trunc);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned trunc() const noexcept { return trunc_; }
  Degree guaranteed_degree() const noexcept { return guaranteed_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(const Expo& e) const;
  Coeff constant_term() const;
  // Lowest total degree present; nullopt for the zero series.
  std::optional<unsigned> min_degree() const;
  // Highest exponent of x_k (1-based) among stored terms; 0 if zero.
  unsigned degree_in(std::size_t k) const;

  // True iff no stored term has total degree <= degree.
  bool vanishes_to(Degree degree) const;

  Series with_guaranteed_degree(Degree g) const;
  // Drops terms above n and lowers trunc (and the guarantee) to n.
  Series truncated(unsigned n) const;

 private:
  std::size_t nvars_;
  unsigned trunc_;
  Degree guaranteed_;
  TermMap terms_;
};

// Order of a series in one variable: a natural d, or FLAT when every pure
// x_k coefficient vanishes up to the truncation degree.
class Order {
 public:
  static Order flat() { return Order(); }
  static Order finite(unsigned d) { return Order(d); }

  bool is_flat() const noexcept { return !d_.has_value(); }
  // Throws PreconditionError on FLAT.
  unsigned value() const;

  friend bool operator==(const Order&, const Order&) = default;

 private:
  Order() = default;
  explicit Order(unsigned d) : d_(d) {}
  std::optional<unsigned> d_;
};

std::string to_string(const Order& o);

// Ring operations. Binary operations require equal nvars (PreconditionError
// otherwise); trunc and guaranteed degree are the minimum of the inputs.
Series add(const Series& a, const Series& b);
Series subtract(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Coeff& c);
Series mul(const Series& a, const Series& b);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) {
  return subtract(a, b);
}
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Coeff& c, const Series& a) { return scale(a, c); }

Series pow(const Series& a, unsigned exponent);

// Multiplicative inverse of a unit. Throws PreconditionError when the
// constant term is zero.
Series invert_unit(const Series& a);

// f(g1, ..., gn). Every g_i must have zero constant term and all must share
// nvars; the result lives in that many variables.
Series compose(const Series& f, std::span<const Series> gs);

// Formal d/dx_k (1-based). Guaranteed degree drops by one.
Series partial_derivative(const Series& f, std::size_t k);

Order order_in_variable(const Series& f, std::size_t k);

// x_k -> x_k^2 (doubles the k-th exponent, drops terms above trunc).
Series substitute_square(const Series& f, std::size_t k);

// Multiplies by the monomial x^e, dropping terms above trunc.
Series shift(const Series& f, const Expo& e);

// Coefficient of x_k^j as a series in the remaining nvars - 1 variables
// (x_k removed, later variables shifted down).
Series coefficient_of_power(const Series& f, std::size_t k, unsigned j);

// Variable bookkeeping (1-based positions).
// Adds a new variable at position pos; old variables at >= pos move up.
Series insert_variable(const Series& f, std::size_t pos);
// Removes variable k; f must not involve x_k (PreconditionError otherwise).
Series remove_variable(const Series& f, std::size_t k);

// Equality in the certified sense: same nvars and identical coefficients up
// to the smaller guaranteed degree.
bool operator==(const Series& a, const Series& b);

// Coefficients agree for every total degree <= degree.
bool agree_to_degree(const Series& a, const Series& b, Degree degree);

// Bit-for-bit identical, metadata included.
bool identical(const Series& a, const Series& b);

// Canonical text form, e.g. "x1^2 + -3/2*x1*x2"; "0" for the zero series.
std::string to_string(const Series& s);
std::string monomial_to_string(const Expo& e);
std::ostream& operator<<(std::ostream& os, const Series& s);

void throw_if_bad_index(const Series& f, std::size_t k);

}  // namespace qaseries
