#include "qaseries/local_ring.hpp"

#include <string>
#include <vector>

#include "qaseries/errors.hpp"

namespace qaseries {

Series implicit_solve(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  if (f.constant_term() != 0) {
    throw PreconditionError("implicit_solve: f(0) != 0");
  }
  Expo linear(f.nvars());
  linear[k - 1] = 1;
  const Coeff slope = f.coeff(linear);
  if (slope == 0) {
    throw PreconditionError("implicit_solve: df/dx" + std::to_string(k) +
                            "(0) = 0");
  }

  const unsigned trunc = f.trunc();
  const std::size_t m = f.nvars() - 1;
  // f = sum_j c_j(x') x_k^j
  std::vector<Series> by_power;
  const unsigned top = f.degree_in(k);
  for (unsigned j = 0; j <= top; ++j) {
    by_power.push_back(coefficient_of_power(f, k, j));
  }

  // Pass p fixes phi through degree p. Terms above p are dropped but trunc
  // stays at N, otherwise the minimum-trunc rule of add/mul would pin phi.
  const auto up_to = [trunc](const Series& s, unsigned p) {
    Series::TermMap t;
    for (const auto& [e, c] : s.terms()) {
      if (e.degree() > p) break;
      t.emplace(e, c);
    }
    return Series(s.nvars(), trunc, std::move(t), trunc);
  };
  const Coeff step = -1 / slope;
  Series phi(m, trunc);
  for (unsigned pass = 1; pass <= trunc; ++pass) {
    const Series current = up_to(phi, pass);
    Series value = up_to(by_power.back(), pass);
    for (std::size_t j = by_power.size() - 1; j-- > 0;) {
      value = up_to(add(mul(value, current), by_power[j]), pass);
    }
    phi = add(current, scale(value, step));
  }
  Series::TermMap terms = phi.terms();
  return Series(m, trunc, std::move(terms), f.guaranteed_degree());
}

Series monomial_divide(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    if (e[k - 1] == 0) {
      throw PreconditionError("monomial_divide: term " +
                              (e.is_zero() ? std::string("1")
                                           : monomial_to_string(e)) +
                              " does not contain x" + std::to_string(k));
    }
    Expo s = e;
    s[k - 1] -= 1;
    t.emplace(std::move(s), c);
  }
  return Series(f.nvars(), f.trunc(), std::move(t), f.guaranteed_degree() - 1);
}

EvenOddParts even_odd_split(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  Series::TermMap even;
  Series::TermMap odd;
  for (const auto& [e, c] : f.terms()) {
    (e[k - 1] % 2 == 0 ? even : odd).emplace(e, c);
  }
  return {Series(f.nvars(), f.trunc(), std::move(even), f.guaranteed_degree()),
          Series(f.nvars(), f.trunc(), std::move(odd), f.guaranteed_degree())};
}

Series halve_exponents(const Series& g, std::size_t k) {
  throw_if_bad_index(g, k);
  Series::TermMap t;
  for (const auto& [e, c] : g.terms()) {
    if (e[k - 1] % 2 != 0) {
      throw PreconditionError("halve_exponents: odd power of x" +
                              std::to_string(k) + " in " +
                              monomial_to_string(e));
    }
    Expo h = e;
    h[k - 1] /= 2;
    t.emplace(std::move(h), c);
  }
  return Series(g.nvars(), g.trunc(), std::move(t), g.guaranteed_degree());
}

}  // namespace qaseries
