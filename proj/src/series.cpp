#include "qaseries/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qaseries/errors.hpp"
#include "series_detail.hpp"

namespace qaseries {

namespace detail {

void accumulate(Series::TermMap& terms, const Expo& e, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace detail

namespace {

void require_same_nvars(const Series& a, const Series& b) {
  if (a.nvars() != b.nvars()) {
    throw PreconditionError("variable-count mismatch: " +
                            std::to_string(a.nvars()) + " vs " +
                            std::to_string(b.nvars()));
  }
}

Degree min_guaranteed(const Series& a, const Series& b) {
  return std::min(a.guaranteed_degree(), b.guaranteed_degree());
}

}  // namespace

Series::Series(std::size_t nvars, unsigned trunc)
    : nvars_(nvars), trunc_(trunc), guaranteed_(static_cast<Degree>(trunc)) {}

Series::Series(std::size_t nvars, unsigned trunc, TermMap terms,
               Degree guaranteed)
    : nvars_(nvars),
      trunc_(trunc),
      guaranteed_(std::min(guaranteed, static_cast<Degree>(trunc))),
      terms_(std::move(terms)) {
  if (guaranteed_ < -1) guaranteed_ = -1;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != nvars_) {
      throw PreconditionError("exponent length does not match nvars");
    }
    if (it->second.get_den() == 0) {
      throw PreconditionError("coefficient with zero denominator");
    }
    it->second.canonicalize();
    if (it->second == 0 || it->first.degree() > trunc_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Series Series::constant(const Coeff& c, std::size_t nvars, unsigned trunc) {
  TermMap t;
  t.emplace(Expo(nvars), c);
  return Series(nvars, trunc, std::move(t), static_cast<Degree>(trunc));
}

Series Series::variable(std::size_t k, std::size_t nvars, unsigned trunc) {
  if (k < 1 || k > nvars) {
    throw PreconditionError("variable index " + std::to_string(k) +
                            " out of range 1.." + std::to_string(nvars));
  }
  Expo e(nvars);
  e[k - 1] = 1;
  return monomial(e, Coeff(1), trunc);
}

Series Series::monomial(const Expo& e, const Coeff& c, unsigned trunc) {
  TermMap t;
  t.emplace(e, c);
  return Series(e.size(), trunc, std::move(t), static_cast<Degree>(trunc));
}

Coeff Series::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff Series::constant_term() const { return coeff(Expo(nvars_)); }

std::optional<unsigned> Series::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<unsigned>(terms_.begin()->first.degree());
}

unsigned Series::degree_in(std::size_t k) const {
  throw_if_bad_index(*this, k);
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[k - 1]);
  return best;
}

bool Series::vanishes_to(Degree degree) const {
  if (terms_.empty() || degree < 0) return true;
  return terms_.begin()->first.degree() > static_cast<std::uint64_t>(degree);
}

Series Series::with_guaranteed_degree(Degree g) const {
  Series out = *this;
  out.guaranteed_ = std::max(-1, std::min(g, static_cast<Degree>(trunc_)));
  return out;
}

Series Series::truncated(unsigned n) const {
  if (n >= trunc_) return *this;
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (e.degree() > n) break;
    t.emplace(e, c);
  }
  return Series(nvars_, n, std::move(t), std::min(guaranteed_, Degree(n)));
}

unsigned Order::value() const {
  if (!d_) throw PreconditionError("order is FLAT");
  return *d_;
}

std::string to_string(const Order& o) {
  return o.is_flat() ? std::string("FLAT") : std::to_string(o.value());
}

void throw_if_bad_index(const Series& f, std::size_t k) {
  if (k < 1 || k > f.nvars()) {
    throw PreconditionError("variable index " + std::to_string(k) +
                            " out of range 1.." + std::to_string(f.nvars()));
  }
}

Series add(const Series& a, const Series& b) {
  require_same_nvars(a, b);
  const unsigned n = std::min(a.trunc(), b.trunc());
  Series::TermMap t;
  for (const auto& [e, c] : a.terms()) {
    if (e.degree() > n) break;
    t.emplace(e, c);
  }
  for (const auto& [e, c] : b.terms()) {
    if (e.degree() > n) break;
    detail::accumulate(t, e, c);
  }
  return Series(a.nvars(), n, std::move(t), min_guaranteed(a, b));
}

Series negate(const Series& a) { return scale(a, Coeff(-1)); }

Series subtract(const Series& a, const Series& b) { return add(a, negate(b)); }

Series scale(const Series& a, const Coeff& c) {
  Series::TermMap t;
  if (c != 0) {
    for (const auto& [e, v] : a.terms()) t.emplace(e, v * c);
  }
  return Series(a.nvars(), a.trunc(), std::move(t), a.guaranteed_degree());
}

Series mul(const Series& a, const Series& b) {
  require_same_nvars(a, b);
  const unsigned n = std::min(a.trunc(), b.trunc());
  Series::TermMap t;
  for (const auto& [ea, ca] : a.terms()) {
    const auto da = ea.degree();
    if (da > n) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + eb.degree() > n) break;
      detail::accumulate(t, ea + eb, ca * cb);
    }
  }
  return Series(a.nvars(), n, std::move(t), min_guaranteed(a, b));
}

Series pow(const Series& a, unsigned exponent) {
  Series result = Series::constant(Coeff(1), a.nvars(), a.trunc())
                      .with_guaranteed_degree(a.guaranteed_degree());
  Series base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Series invert_unit(const Series& a) {
  const Coeff a0 = a.constant_term();
  if (a0 == 0) {
    throw PreconditionError("cannot invert a non-unit (zero constant term)");
  }
  const Coeff inv0 = 1 / a0;
  // b = inv0 * (1 - (a - a0) * b), solved term by term in increasing degree;
  // every spawned term has strictly larger degree than its parent.
  Series::TermMap pending;
  Series::TermMap out;
  pending.emplace(Expo(a.nvars()), inv0);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Expo e = node.key();
    const Coeff c = node.mapped();
    const auto de = e.degree();
    out.insert(std::move(node));
    for (const auto& [ea, ca] : a.terms()) {
      if (ea.is_zero()) continue;
      if (de + ea.degree() > a.trunc()) break;
      detail::accumulate(pending, e + ea, -c * ca * inv0);
    }
  }
  return Series(a.nvars(), a.trunc(), std::move(out), a.guaranteed_degree());
}

Series compose(const Series& f, std::span<const Series> gs) {
  if (gs.size() != f.nvars()) {
    throw PreconditionError("compose: expected " + std::to_string(f.nvars()) +
                            " substitutions, got " + std::to_string(gs.size()));
  }
  if (gs.empty()) return f;
  const std::size_t m = gs.front().nvars();
  unsigned n = f.trunc();
  Degree g = f.guaranteed_degree();
  for (const auto& gi : gs) {
    if (gi.nvars() != m) {
      throw PreconditionError("compose: substitutions disagree on nvars");
    }
    if (gi.constant_term() != 0) {
      throw PreconditionError("compose: substitution with nonzero constant term");
    }
    n = std::min(n, gi.trunc());
    g = std::min(g, gi.guaranteed_degree());
  }

  // powers[i][j] = gs[i]^j, built lazily.
  std::vector<std::vector<Series>> powers(gs.size());
  auto power_of = [&](std::size_t i, unsigned j) -> const Series& {
    auto& p = powers[i];
    if (p.empty()) {
      p.push_back(Series::constant(Coeff(1), m, n));
    }
    while (p.size() <= j) p.push_back(mul(p.back(), gs[i].truncated(n)));
    return p[j];
  };

  Series::TermMap acc;
  for (const auto& [e, c] : f.terms()) {
    if (e.degree() > n) break;
    Series term = Series::constant(c, m, n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (e[i] == 0) continue;
      term = mul(term, power_of(i, e[i]));
      if (term.is_zero()) break;
    }
    for (const auto& [te, tc] : term.terms()) detail::accumulate(acc, te, tc);
  }
  return Series(m, n, std::move(acc), g);
}

Series partial_derivative(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  const unsigned n = f.trunc() > 0 ? f.trunc() - 1 : 0;
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    const auto p = e[k - 1];
    if (p == 0) continue;
    Expo d = e;
    d[k - 1] = p - 1;
    detail::accumulate(t, d, c * p);
  }
  return Series(f.nvars(), n, std::move(t), f.guaranteed_degree() - 1);
}

Order order_in_variable(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  Expo e(f.nvars());
  for (unsigned d = 0; d <= f.trunc(); ++d) {
    e[k - 1] = d;
    if (f.coeff(e) != 0) return Order::finite(d);
  }
  return Order::flat();
}

Series substitute_square(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    Expo s = e;
    s[k - 1] *= 2;
    if (s.degree() <= f.trunc()) t.emplace(std::move(s), c);
  }
  return Series(f.nvars(), f.trunc(), std::move(t), f.guaranteed_degree());
}

Series shift(const Series& f, const Expo& e) {
  if (e.size() != f.nvars()) {
    throw PreconditionError("shift: monomial has wrong number of variables");
  }
  Series::TermMap t;
  for (const auto& [fe, c] : f.terms()) {
    Expo s = fe + e;
    if (s.degree() <= f.trunc()) t.emplace(std::move(s), c);
  }
  const Degree g = f.guaranteed_degree() < 0
                       ? f.guaranteed_degree()
                       : f.guaranteed_degree() + static_cast<Degree>(e.degree());
  return Series(f.nvars(), f.trunc(), std::move(t), g);
}

Series coefficient_of_power(const Series& f, std::size_t k, unsigned j) {
  throw_if_bad_index(f, k);
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    if (e[k - 1] == j) t.emplace(e.without(k - 1), c);
  }
  return Series(f.nvars() - 1, f.trunc(), std::move(t), f.guaranteed_degree());
}

Series insert_variable(const Series& f, std::size_t pos) {
  if (pos < 1 || pos > f.nvars() + 1) {
    throw PreconditionError("insert_variable: position out of range");
  }
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) t.emplace(e.with_inserted(pos - 1), c);
  return Series(f.nvars() + 1, f.trunc(), std::move(t), f.guaranteed_degree());
}

Series remove_variable(const Series& f, std::size_t k) {
  throw_if_bad_index(f, k);
  Series::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    if (e[k - 1] != 0) {
      throw PreconditionError("remove_variable: series involves x" +
                              std::to_string(k));
    }
    t.emplace(e.without(k - 1), c);
  }
  return Series(f.nvars() - 1, f.trunc(), std::move(t), f.guaranteed_degree());
}

bool agree_to_degree(const Series& a, const Series& b, Degree degree) {
  if (a.nvars() != b.nvars()) return false;
  if (degree < 0) return true;
  const auto limit = static_cast<std::uint64_t>(degree);
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  for (;;) {
    const bool a_done = ia == ea || ia->first.degree() > limit;
    const bool b_done = ib == eb || ib->first.degree() > limit;
    if (a_done || b_done) return a_done && b_done;
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

bool operator==(const Series& a, const Series& b) {
  return a.nvars() == b.nvars() &&
         agree_to_degree(a, b, min_guaranteed(a, b));
}

bool identical(const Series& a, const Series& b) {
  return a.nvars() == b.nvars() && a.trunc() == b.trunc() &&
         a.guaranteed_degree() == b.guaranteed_degree() &&
         a.terms() == b.terms();
}

std::string monomial_to_string(const Expo& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  return out;
}

std::string to_string(const Series& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (e.is_zero()) {
      out += to_string(c);
    } else if (c == 1) {
      out += monomial_to_string(e);
    } else {
      out += to_string(c);
      out += '*';
      out += monomial_to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  return os << to_string(s);
}

}  // namespace qaseries
