#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qaseries {

// Exponent vector of a monomial x1^e1 * ... * xn^en.
class Expo {
 public:
  using value_type = std::uint32_t;

  Expo() = default;
  explicit Expo(std::size_t nvars) : e_(nvars, 0) {}
  explicit Expo(std::vector<value_type> e) : e_(std::move(e)) {}
  Expo(std::initializer_list<value_type> e) : e_(e) {}

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  std::span<const value_type> values() const noexcept { return e_; }

  // Total degree.
  std::uint64_t degree() const noexcept;

  bool is_zero() const noexcept { return degree() == 0; }

  // Componentwise a <= b.
  bool divides(const Expo& other) const;

  Expo& operator+=(const Expo& other);
  friend Expo operator+(Expo a, const Expo& b) { return a += b; }
  // Componentwise difference; caller guarantees b.divides(a).
  friend Expo operator-(const Expo& a, const Expo& b);

  friend bool operator==(const Expo&, const Expo&) = default;

  // Copy with slot `pos` (0-based) removed / a zero slot inserted at `pos`.
  Expo without(std::size_t pos) const;
  Expo with_inserted(std::size_t pos, value_type value = 0) const;

 private:
  std::vector<value_type> e_;
};

// Canonical term order: total degree ascending, then lexicographically
// descending so that x1 precedes x2 within a degree (x1^2, x1*x2, x2^2).
struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

}  // namespace qaseries
