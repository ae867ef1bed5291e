#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qaseries/series.hpp"
#include "qaseries/weierstrass.hpp"

namespace qaseries {

// One preparation performed inside lemma_split: F = g(x) - t in nvars + 1
// variables (t last), and its Weierstrass preparation in x_k.
struct PreparedBranch {
  Series adjoined;  // F
  PreparationResult preparation;
};

// f(x) = f0(x', x_k^2) + x_k * f1(x', x_k^2).
//
// f0 and f1 have the same nvars as f; slot k holds the variable standing for
// x_k^2.
struct LemmaResult {
  Series f0;
  Series f1;
  Degree guaranteed_degree;
  PreparedBranch even_branch;  // F = g0 - t
  PreparedBranch odd_branch;   // F = g1/x_k - t
};

// Even/odd decomposition through Weierstrass preparation and the implicit
// function theorem:
//   1. split f = g0 + g1 by parity in x_k;
//   2. prepare F = g0 - t in x_k, giving x_k^2 + phi1 x_k + phi0(x', t);
//   3. require phi1 == 0 (InvariantError otherwise);
//   4. solve z + phi0(x', t) = 0 for t, which is f0(x', z);
//   5. repeat 2-4 on g1/x_k for f1.
//
// Requires f(0, x_k) = x_k^2 + x_k^3 + O(x_k^4) and trunc >= 4
// (PreconditionError otherwise). Guaranteed degree is G - 4.
LemmaResult lemma_split(const Series& f, std::size_t k);

struct SemigroupEntry {
  Expo target;
  bool member;
  std::vector<Expo> witness;  // generators summing to target when member
};

struct SemigroupReport {
  std::vector<Expo> generators;
  std::vector<SemigroupEntry> checked;

  bool all_members() const;
  std::size_t member_count() const;
};

// Membership of each exponent in supp(expand(P)) of total degree <= up_to in
// the additive semigroup generated by supp(F) (finite nonempty sums).
// Falsifications are reported, not thrown.
SemigroupReport semigroup_check(const DistinguishedPoly& p, const Series& f,
                                Degree up_to);
SemigroupReport semigroup_check(const PreparedBranch& branch);

// Decides whether target is a finite nonempty sum of generators. Returns the
// witness multiset when it is.
std::optional<std::vector<Expo>> semigroup_witness(
    std::span<const Expo> generators, const Expo& target);

struct NormalizedH {
  Series normalized;  // h + correction; coefficients 0, 0, 1, 1 in degrees 0..3
  Series correction;  // polynomial of degree <= 3
};

NormalizedH normalize_h(const Series& h);

// Real and imaginary parts of a complex series in (x1, x2).
struct HoloPair {
  Series u;
  Series v;
  Degree guaranteed_degree;
};

// H(x1 + i x2) = f0(x1, -x2^2) + i x2 f1(x1, -x2^2), where f0, f1 come from
// lemma_split of f(x1, x2) = h(x1 + x2) in x2. h must already be normalized.
HoloPair holomorphic_extension(const Series& h);

// Same, keeping the lemma_split run (and its two preparations) alongside.
struct HoloExtension {
  HoloPair pair;
  LemmaResult lemma;
};
HoloExtension holomorphic_extension_traced(const Series& h);

// sum_n h_n (x1 + i x2)^n expanded by the binomial theorem.
HoloPair direct_complexification(const Series& h);

struct CauchyRiemannResidual {
  Series du_dx1_minus_dv_dx2;
  Series du_dx2_plus_dv_dx1;
  Degree checked_to;  // guaranteed_degree - 1
  bool passes;
};

CauchyRiemannResidual cauchy_riemann_check(const HoloPair& pair);

// f(x', -x_k^2) written out: x_k -> x_k^2 with sign (-1)^(old exponent).
Series substitute_negative_square(const Series& f, std::size_t k);

}  // namespace qaseries
