#include "qaseries/pipelines.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qaseries/errors.hpp"
#include "qaseries/local_ring.hpp"
#include "series_detail.hpp"

namespace qaseries {

namespace {

struct BranchOutput {
  PreparedBranch branch;
  Series solution;
};

// Prepares F = g - t in x_k, checks the linear coefficient vanishes, and
// solves z + phi0(x', t) = 0 for t. The solution has z in slot k.
BranchOutput solve_branch(const Series& g, std::size_t k) {
  const std::size_t n = g.nvars();
  const unsigned trunc = g.trunc();
  const Series t = Series::variable(n + 1, n + 1, trunc);
  Series adjoined = subtract(insert_variable(g, n + 1), t);

  PreparationResult prep = weierstrass_prepare(adjoined, k);
  if (prep.poly.d != 2) {
    throw InvariantError("lemma_split: prepared polynomial has degree " +
                         std::to_string(prep.poly.d) + ", expected 2");
  }
  const Series& phi1 = prep.poly.coeffs[0];
  if (!phi1.vanishes_to(prep.guaranteed_degree)) {
    throw InvariantError("lemma_split: linear coefficient phi1 = " +
                         to_string(phi1) + " is not zero");
  }
  // phi0 lives in (x1..x_{k-1}, x_{k+1}..x_n, t); put z back in slot k.
  const Series& phi0 = prep.poly.coeffs[1];
  const Series equation =
      add(insert_variable(phi0, k), Series::variable(k, n + 1, trunc));
  Series solution = implicit_solve(equation, n + 1);
  return {{std::move(adjoined), std::move(prep)}, std::move(solution)};
}

void require_univariate(const Series& h, const char* what) {
  if (h.nvars() != 1) {
    throw PreconditionError(std::string(what) +
                            ": expected a series in one variable");
  }
}

}  // namespace

LemmaResult lemma_split(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  if (f.trunc() < 4) {
    throw PreconditionError("lemma_split: truncation degree must be >= 4");
  }
  constexpr std::array<int, 4> expected{0, 0, 1, 1};
  Expo e(f.nvars());
  for (unsigned j = 0; j < expected.size(); ++j) {
    e[k - 1] = j;
    if (f.coeff(e) != expected[j]) {
      throw PreconditionError(
          "lemma_split: f(0, x_k) must be x_k^2 + x_k^3 + O(x_k^4); "
          "coefficient of x" + std::to_string(k) + "^" + std::to_string(j) +
          " is " + to_string(f.coeff(e)));
    }
  }

  const EvenOddParts parts = even_odd_split(f, k);
  BranchOutput even = solve_branch(parts.even, k);
  BranchOutput odd = solve_branch(monomial_divide(parts.odd, k), k);

  const Degree g = f.guaranteed_degree() - 4;
  return {even.solution.with_guaranteed_degree(g),
          odd.solution.with_guaranteed_degree(g), std::max(g, -1),
          std::move(even.branch), std::move(odd.branch)};
}

bool SemigroupReport::all_members() const {
  return std::all_of(checked.begin(), checked.end(),
                     [](const auto& entry) { return entry.member; });
}

std::size_t SemigroupReport::member_count() const {
  return static_cast<std::size_t>(
      std::count_if(checked.begin(), checked.end(),
                    [](const auto& entry) { return entry.member; }));
}

std::optional<std::vector<Expo>> semigroup_witness(
    std::span<const Expo> generators, const Expo& target) {
  if (target.is_zero()) {
    for (const auto& g : generators) {
      if (g.is_zero()) return std::vector<Expo>{g};
    }
    return std::nullopt;
  }

  // Dynamic programming over the box of exponents below target, indexed in
  // mixed radix. Index order is compatible with subtraction of a nonzero
  // generator, so predecessors are decided first.
  const std::size_t n = target.size();
  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = total;
    total *= target[i] + 1;
  }
  std::vector<Expo> usable;
  std::vector<std::size_t> offset;
  for (const auto& g : generators) {
    if (g.is_zero() || g.size() != n || !g.divides(target)) continue;
    usable.push_back(g);
    std::size_t off = 0;
    for (std::size_t i = 0; i < n; ++i) off += g[i] * stride[i];
    offset.push_back(off);
  }

  constexpr int kUnreached = -1;
  constexpr int kOrigin = -2;
  std::vector<int> choice(total, kUnreached);
  choice[0] = kOrigin;
  Expo v(n);
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<Expo::value_type>(rest / stride[i]);
      rest %= stride[i];
    }
    for (std::size_t gi = 0; gi < usable.size(); ++gi) {
      if (usable[gi].divides(v) && choice[idx - offset[gi]] != kUnreached) {
        choice[idx] = static_cast<int>(gi);
        break;
      }
    }
  }
  if (choice[total - 1] == kUnreached) return std::nullopt;

  std::vector<Expo> witness;
  for (std::size_t idx = total - 1; idx != 0;) {
    const auto gi = static_cast<std::size_t>(choice[idx]);
    witness.push_back(usable[gi]);
    idx -= offset[gi];
  }
  return witness;
}

SemigroupReport semigroup_check(const DistinguishedPoly& p, const Series& f,
                                Degree up_to) {
  SemigroupReport report;
  for (const auto& [e, c] : f.terms()) report.generators.push_back(e);
  const Series expanded = expand(p);
  for (const auto& [e, c] : expanded.terms()) {
    if (up_to < 0 || e.degree() > static_cast<std::uint64_t>(up_to)) break;
    auto witness = semigroup_witness(report.generators, e);
    report.checked.push_back(
        {e, witness.has_value(), witness.value_or(std::vector<Expo>{})});
  }
  return report;
}

SemigroupReport semigroup_check(const PreparedBranch& branch) {
  return semigroup_check(branch.preparation.poly, branch.adjoined,
                         branch.preparation.guaranteed_degree);
}

NormalizedH normalize_h(const Series& h) {
  require_univariate(h, "normalize_h");
  constexpr std::array<int, 4> target{0, 0, 1, 1};
  Series::TermMap terms;
  for (const auto& [e, c] : h.terms()) {
    if (e[0] >= target.size()) terms.emplace(e, c);
  }
  for (unsigned j = 0; j < target.size(); ++j) {
    if (target[j] != 0) terms.emplace(Expo{j}, Coeff(target[j]));
  }
  Series normalized(1, h.trunc(), std::move(terms), h.guaranteed_degree());
  Series correction = subtract(normalized, h);
  return {std::move(normalized), std::move(correction)};
}

Series substitute_negative_square(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    Expo s = e;
    s[k - 1] *= 2;
    if (s.degree() > f.trunc()) continue;
    t.emplace(std::move(s), e[k - 1] % 2 == 0 ? c : Coeff(-c));
  }
  return Series(f.nvars(), f.trunc(), std::move(t), f.guaranteed_degree());
}

HoloExtension holomorphic_extension_traced(const Series& h) {
  require_univariate(h, "holomorphic_extension");
  const NormalizedH check = normalize_h(h);
  if (!check.correction.is_zero()) {
    throw PreconditionError(
        "holomorphic_extension: h must be normalized to x^2 + x^3 + O(x^4); "
        "add " + to_string(check.correction));
  }
  const unsigned trunc = h.trunc();
  const std::array<Series, 1> sum{add(Series::variable(1, 2, trunc),
                                      Series::variable(2, 2, trunc))};
  const Series f = compose(h, sum);
  LemmaResult lemma = lemma_split(f, 2);

  const Degree g = lemma.guaranteed_degree;
  Series u = substitute_negative_square(lemma.f0, 2);
  Series v = shift(substitute_negative_square(lemma.f1, 2), Expo{0, 1});
  return {{u.with_guaranteed_degree(g), v.with_guaranteed_degree(g), g},
          std::move(lemma)};
}

HoloPair holomorphic_extension(const Series& h) {
  return holomorphic_extension_traced(h).pair;
}

HoloPair direct_complexification(const Series& h) {
  require_univariate(h, "direct_complexification");
  const unsigned trunc = h.trunc();
  Series::TermMap re;
  Series::TermMap im;
  for (const auto& [e, c] : h.terms()) {
    const unsigned n = e[0];
    mpz_class binom = 1;
    for (unsigned j = 0; j <= n; ++j) {
      // C(n, j) x1^(n-j) (i x2)^j
      const Coeff term = c * binom;
      const Expo mono{n - j, j};
      switch (j % 4) {
        case 0: detail::accumulate(re, mono, term); break;
        case 1: detail::accumulate(im, mono, term); break;
        case 2: detail::accumulate(re, mono, -term); break;
        default: detail::accumulate(im, mono, -term); break;
      }
      binom = binom * (n - j) / (j + 1);
    }
  }
  const Degree g = h.guaranteed_degree();
  return {Series(2, trunc, std::move(re), g), Series(2, trunc, std::move(im), g),
          g};
}

CauchyRiemannResidual cauchy_riemann_check(const HoloPair& pair) {
  if (pair.u.nvars() != 2 || pair.v.nvars() != 2) {
    throw PreconditionError("cauchy_riemann_check: u and v must be in 2 variables");
  }
  Series r1 = subtract(partial_derivative(pair.u, 1),
                       partial_derivative(pair.v, 2));
  Series r2 = add(partial_derivative(pair.u, 2), partial_derivative(pair.v, 1));
  const Degree checked_to = pair.guaranteed_degree - 1;
  const bool passes = r1.vanishes_to(checked_to) && r2.vanishes_to(checked_to);
  return {std::move(r1), std::move(r2), checked_to, passes};
}

}  // namespace qaseries
