#include "qaseries/weierstrass.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaseries/errors.hpp"
#include "series_detail.hpp"

namespace qaseries {

namespace {

// Division works in the grading where x_k has weight 1 and every other
// variable weight d. Both multiplication by the perturbation and the inverse
// of the unit part never lower this weight, so truncating at weight d*N
// keeps every coefficient of total degree <= N exact. Plain total-degree
// truncation would not: x_k^(2m) reduces modulo x_k^2 + x1 to (-x1)^m,
// carrying high-degree information down to degree m.
struct Grading {
  std::size_t k;  // 0-based
  std::uint64_t d;

  std::uint64_t weight(const Expo& e) const {
    const std::uint64_t xk = e[k];
    return d * (e.degree() - xk) + xk;
  }
};

struct WeightedTerm {
  Expo e;
  std::uint64_t w;
  Coeff c;
};

using TermList = std::vector<WeightedTerm>;

// Worklist key: weight ascending, then x_k exponent descending. Every term
// spawned during division is strictly later in this order than its parent.
struct WorkKey {
  std::uint64_t w;
  std::uint32_t xk;
  Expo e;

  bool operator<(const WorkKey& o) const {
    if (w != o.w) return w < o.w;
    if (xk != o.xk) return xk > o.xk;
    return GradedLexLess{}(e, o.e);
  }
};

using WorkMap = std::map<WorkKey, Coeff>;

void accumulate(WorkMap& m, const Grading& gr, const Expo& e, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] =
      m.try_emplace(WorkKey{gr.weight(e), e[gr.k], e}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

TermList to_list(const WorkMap& m) {
  TermList out;
  out.reserve(m.size());
  for (const auto& [key, c] : m) out.push_back({key.e, key.w, c});
  return out;
}

TermList sorted_list(TermList terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.w < b.w; });
  return terms;
}

TermList weighted_mul(const TermList& a, const TermList& b,
                      const Grading& gr, std::uint64_t bound) {
  WorkMap acc;
  for (const auto& ta : a) {
    if (ta.w > bound) break;
    for (const auto& tb : b) {
      if (ta.w + tb.w > bound) break;
      accumulate(acc, gr, ta.e + tb.e, ta.c * tb.c);
    }
  }
  return to_list(acc);
}

// Inverse of a unit given as a weight-sorted list.
TermList weighted_inverse(const TermList& u, const Grading& gr,
                          std::uint64_t bound, std::size_t nvars) {
  const Expo zero(nvars);
  Coeff u0 = 0;
  for (const auto& t : u) {
    if (t.e == zero) u0 = t.c;
  }
  const Coeff inv0 = 1 / u0;
  WorkMap pending;
  WorkMap out;
  accumulate(pending, gr, zero, inv0);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const WorkKey key = node.key();
    const Coeff c = node.mapped();
    out.insert(std::move(node));
    for (const auto& t : u) {
      if (t.e == zero) continue;
      if (key.w + t.w > bound) break;
      accumulate(pending, gr, key.e + t.e, -c * t.c * inv0);
    }
  }
  return to_list(out);
}

Series to_series(const TermList& terms, std::size_t nvars, unsigned trunc,
                 Degree guaranteed) {
  Series::TermMap t;
  for (const auto& term : terms) {
    if (term.e.degree() <= trunc) detail::accumulate(t, term.e, term.c);
  }
  return Series(nvars, trunc, std::move(t), guaranteed);
}

unsigned checked_order(const Series& f, std::size_t k, const char* what) {
  throw_if_bad_index(f, k);
  const Order order = order_in_variable(f, k);
  if (order.is_flat()) {
    throw PreconditionError(std::string(what) + ": series is FLAT in x" +
                            std::to_string(k));
  }
  return order.value();
}

}  // namespace

Series DistinguishedPoly::coeff_embedded(unsigned i) const {
  if (i < 1 || i > coeffs.size()) {
    throw PreconditionError("distinguished polynomial has no coefficient a" +
                            std::to_string(i));
  }
  return insert_variable(coeffs[i - 1], k);
}

DivisionResult weierstrass_divide(const Series& g, const Series& f,
                                  std::size_t k) {
  if (g.nvars() != f.nvars()) {
    throw PreconditionError("weierstrass_divide: variable-count mismatch");
  }
  const unsigned d = checked_order(f, k, "weierstrass_divide");
  const std::size_t n = f.nvars();
  const unsigned trunc = std::min(g.trunc(), f.trunc());
  const Degree guaranteed =
      std::min(g.guaranteed_degree(), f.guaranteed_degree()) -
      static_cast<Degree>(d);

  if (d == 0) {
    Series q = mul(g, invert_unit(f)).truncated(trunc);
    return {q.with_guaranteed_degree(guaranteed),
            Series(n, trunc).with_guaranteed_degree(guaranteed), 0, k,
            guaranteed};
  }

  const Grading gr{k - 1, d};
  const std::uint64_t bound = std::uint64_t{d} * trunc;

  // f = x_k^d * E + R with deg_{x_k} R < d; E is a unit since f has order d.
  TermList unit_part;
  TermList low_part;
  Expo xkd(n);
  xkd[k - 1] = d;
  for (const auto& [e, c] : f.terms()) {
    if (e[k - 1] >= d) {
      Expo s = e - xkd;
      const auto w = gr.weight(s);
      unit_part.push_back({std::move(s), w, c});
    } else {
      low_part.push_back({e, gr.weight(e), c});
    }
  }
  unit_part = sorted_list(std::move(unit_part));
  low_part = sorted_list(std::move(low_part));

  const TermList unit_inv = weighted_inverse(unit_part, gr, bound, n);
  const TermList perturb = weighted_mul(low_part, unit_inv, gr, bound);

  // With Q = q*E and S = R/E the identity reads g - Q*S = Q*x_k^d + r.
  // Drain H = g - Q*S in worklist order: terms with x_k exponent >= d
  // belong to Q*x_k^d and spawn -Q*S contributions, the rest belong to r.
  WorkMap pending;
  for (const auto& [e, c] : g.terms()) {
    if (gr.weight(e) <= bound) accumulate(pending, gr, e, c);
  }
  WorkMap quotient_scaled;
  TermList remainder;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Expo& e = node.key().e;
    const Coeff c = node.mapped();
    if (e[k - 1] < d) {
      remainder.push_back({e, node.key().w, c});
      continue;
    }
    const Expo qe = e - xkd;
    const auto qw = gr.weight(qe);
    accumulate(quotient_scaled, gr, qe, c);
    for (const auto& s : perturb) {
      if (qw + s.w > bound) break;
      accumulate(pending, gr, qe + s.e, -c * s.c);
    }
  }

  const TermList quotient =
      weighted_mul(to_list(quotient_scaled), unit_inv, gr, bound);
  return {to_series(quotient, n, trunc, guaranteed),
          to_series(remainder, n, trunc, guaranteed), d, k, guaranteed};
}

PreparationResult weierstrass_prepare(const Series& f, std::size_t k) {
  const unsigned d = checked_order(f, k, "weierstrass_prepare");
  const std::size_t n = f.nvars();
  const unsigned trunc = f.trunc();
  const Degree guaranteed = f.guaranteed_degree() - static_cast<Degree>(d);

  DistinguishedPoly poly;
  poly.d = d;
  poly.k = k;
  poly.nvars = n;
  poly.trunc = trunc;
  if (d == 0) {
    return {f.with_guaranteed_degree(guaranteed), std::move(poly), guaranteed};
  }

  Expo xkd(n);
  xkd[k - 1] = d;
  const DivisionResult div =
      weierstrass_divide(Series::monomial(xkd, Coeff(1), trunc), f, k);
  Series unit = invert_unit(div.quotient).with_guaranteed_degree(guaranteed);

  // P = x_k^d - r, so a_i = -(coefficient of x_k^(d-i) in r).
  for (unsigned i = 1; i <= d; ++i) {
    poly.coeffs.push_back(
        negate(coefficient_of_power(div.remainder, k, d - i))
            .with_guaranteed_degree(guaranteed));
  }
  return {std::move(unit), std::move(poly), guaranteed};
}

Series expand(const DistinguishedPoly& p) {
  if (p.k < 1 || p.k > p.nvars) {
    throw PreconditionError("distinguished polynomial: bad variable index");
  }
  Expo xkd(p.nvars);
  xkd[p.k - 1] = p.d;
  Series out = Series::monomial(xkd, Coeff(1), p.trunc);
  Degree g = static_cast<Degree>(p.trunc);
  for (unsigned i = 1; i <= p.coeffs.size(); ++i) {
    Expo shift_by(p.nvars);
    shift_by[p.k - 1] = p.d - i;
    const Series a = p.coeff_embedded(i);
    g = std::min(g, a.guaranteed_degree());
    out = add(out, shift(a, shift_by).with_guaranteed_degree(a.guaranteed_degree()));
  }
  return out.with_guaranteed_degree(g);
}

}  // namespace qaseries
