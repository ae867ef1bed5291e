#include "qaseries/coeff.hpp"

#include <cctype>

#include "qaseries/errors.hpp"

namespace qaseries {

Coeff make_coeff(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Coeff c(num, den);
  c.canonicalize();
  return c;
}

namespace {

mpz_class parse_natural(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected digit", offset + i);
    }
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

Coeff parse_coeff(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    pos = 1;
  }
  const auto slash = text.find('/', pos);
  mpz_class num = parse_natural(text.substr(pos, slash - pos), pos);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_natural(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  if (negative) num = -num;
  return make_coeff(num, den);
}

std::string to_string(const Coeff& c) { return c.get_str(10); }

}  // namespace qaseries
