#pragma once

// Seeded generators and independent oracles shared by the unit tests and the
// acceptance runner.

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qaseries/series.hpp"

namespace qaseries::testing {

class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Nonzero p/q with |p| <= 5, 1 <= q <= 4.
  Coeff rational() {
    int p = 0;
    while (p == 0) p = uniform(-5, 5);
    return make_coeff(p, uniform(1, 4));
  }

  Expo expo(std::size_t nvars, unsigned max_degree) {
    const unsigned deg = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    Expo e(nvars);
    for (unsigned i = 0; i < deg; ++i) {
      e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))] += 1;
    }
    return e;
  }

  // Up to `terms` random terms of total degree in [min_degree, max_degree].
  Series sparse(std::size_t nvars, unsigned trunc, unsigned min_degree,
                unsigned max_degree, int terms) {
    Series::TermMap t;
    for (int i = 0; i < terms; ++i) {
      Expo e = expo(nvars, max_degree);
      if (e.degree() < min_degree) continue;
      t[e] += rational();
      if (t[e] == 0) t.erase(e);
    }
    return Series(nvars, trunc, std::move(t), static_cast<Degree>(trunc));
  }

  // f with order exactly d in x_k: c*x_k^d + (pure x_k terms above d) + terms
  // involving other variables with zero constant term.
  Series of_order(std::size_t nvars, std::size_t k, unsigned d, unsigned trunc,
                  int terms) {
    Series f = sparse(nvars, trunc, 1, 5, terms);
    Series::TermMap t;
    for (const auto& [e, c] : f.terms()) {
      bool pure = true;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (i != k - 1 && e[i] != 0) pure = false;
      }
      if (pure && e[k - 1] <= d) continue;
      t.emplace(e, c);
    }
    Expo lead(nvars);
    lead[k - 1] = d;
    t[lead] = rational();
    return Series(nvars, trunc, std::move(t), static_cast<Degree>(trunc));
  }

  // f(0, x_k) = x_k^2 + x_k^3 mod degree 4; every other term involves x'.
  Series lemma_input(std::size_t nvars, std::size_t k, unsigned trunc,
                     int terms) {
    Series f = sparse(nvars, trunc, 1, 6, terms);
    Series::TermMap t;
    for (const auto& [e, c] : f.terms()) {
      bool pure = true;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (i != k - 1 && e[i] != 0) pure = false;
      }
      if (pure && e[k - 1] <= 3) continue;
      t.emplace(e, c);
    }
    Expo e2(nvars), e3(nvars);
    e2[k - 1] = 2;
    e3[k - 1] = 3;
    t[e2] = 1;
    t[e3] = 1;
    return Series(nvars, trunc, std::move(t), static_cast<Degree>(trunc));
  }

  // One-variable x^2 + x^3 + (random terms of degree 4..trunc).
  Series normalized_h(unsigned trunc, int terms) {
    Series::TermMap t;
    t[Expo{2}] = 1;
    t[Expo{3}] = 1;
    for (int i = 0; i < terms; ++i) {
      const auto j = static_cast<Expo::value_type>(uniform(4, static_cast<int>(trunc)));
      t[Expo{j}] += rational();
      if (t[Expo{j}] == 0) t.erase(Expo{j});
    }
    return Series(1, trunc, std::move(t), static_cast<Degree>(trunc));
  }

  // f with f(0) = 0 and df/dx_k(0) = slope != 0.
  Series implicit_input(std::size_t nvars, std::size_t k, unsigned trunc,
                        int terms) {
    Series f = sparse(nvars, trunc, 1, 4, terms);
    Series::TermMap t = f.terms();
    Expo lin(nvars);
    lin[k - 1] = 1;
    t[lin] = rational();
    return Series(nvars, trunc, std::move(t), static_cast<Degree>(trunc));
  }

 private:
  std::mt19937_64 rng_;
};

// Test-side halving: keeps terms whose x_k exponent is even and halves it.
// Throws nothing; odd terms are simply reported through `odd_seen`.
inline Series halve_oracle(const Series& g, std::size_t k, bool* odd_seen = nullptr) {
  Series::TermMap t;
  for (const auto& [e, c] : g.terms()) {
    if (e[k - 1] % 2 != 0) {
      if (odd_seen) *odd_seen = true;
      continue;
    }
    Expo h = e;
    h[k - 1] /= 2;
    t.emplace(h, c);
  }
  return Series(g.nvars(), g.trunc(), std::move(t), g.guaranteed_degree());
}

// Test-side split by parity of the x_k exponent.
inline std::pair<Series, Series> parity_oracle(const Series& f, std::size_t k) {
  Series::TermMap even, odd;
  for (const auto& [e, c] : f.terms()) {
    (e[k - 1] % 2 == 0 ? even : odd).emplace(e, c);
  }
  return {Series(f.nvars(), f.trunc(), std::move(even), f.guaranteed_degree()),
          Series(f.nvars(), f.trunc(), std::move(odd), f.guaranteed_degree())};
}

// Test-side x_k -> x_k^2 (sign = +1) or x_k -> -x_k^2 (sign = -1), dropping
// terms above trunc.
inline Series square_oracle(const Series& f, std::size_t k, int sign) {
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    Expo s = e;
    s[k - 1] *= 2;
    if (s.degree() > f.trunc()) continue;
    Coeff v = c;
    if (sign < 0 && e[k - 1] % 2 != 0) v = -v;
    t.emplace(s, v);
  }
  return Series(f.nvars(), f.trunc(), std::move(t), f.guaranteed_degree());
}

// Test-side multiplication by a monomial, dropping terms above trunc.
inline Series times_monomial(const Series& f, const Expo& m) {
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    Expo s = e + m;
    if (s.degree() <= f.trunc()) t.emplace(s, c);
  }
  return Series(f.nvars(), f.trunc(), std::move(t), f.guaranteed_degree());
}

// Complexification oracle: (x1 + i x2)^n computed by repeated complex
// multiplication, never by the binomial theorem.
inline std::pair<Series, Series> complexify_oracle(const Series& h) {
  const unsigned trunc = h.trunc();
  const Series x1 = Series::variable(1, 2, trunc);
  const Series x2 = Series::variable(2, 2, trunc);
  Series re(2, trunc), im(2, trunc);
  Series pre = Series::constant(Coeff(1), 2, trunc);
  Series pim(2, trunc);
  unsigned power = 0;
  for (const auto& [e, c] : h.terms()) {
    while (power < e[0]) {
      Series nre = pre * x1 - pim * x2;
      Series nim = pre * x2 + pim * x1;
      pre = std::move(nre);
      pim = std::move(nim);
      ++power;
    }
    re = re + c * pre;
    im = im + c * pim;
  }
  return {re, im};
}

// x_k-degree of the highest x_k power present.
inline unsigned max_power(const Series& f, std::size_t k) {
  unsigned m = 0;
  for (const auto& [e, c] : f.terms()) m = std::max<unsigned>(m, e[k - 1]);
  return m;
}

}  // namespace qaseries::testing
