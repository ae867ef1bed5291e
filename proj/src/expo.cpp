#include "qaseries/expo.hpp"

#include <algorithm>
#include <cassert>

namespace qaseries {

std::uint64_t Expo::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto v : e_) d += v;
  return d;
}

bool Expo::divides(const Expo& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Expo& Expo::operator+=(const Expo& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

Expo operator-(const Expo& a, const Expo& b) {
  assert(b.divides(a));
  Expo out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.e_[i] -= b.e_[i];
  return out;
}

Expo Expo::without(std::size_t pos) const {
  std::vector<value_type> out;
  out.reserve(e_.size() - 1);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i != pos) out.push_back(e_[i]);
  }
  return Expo(std::move(out));
}

Expo Expo::with_inserted(std::size_t pos, value_type value) const {
  std::vector<value_type> out = e_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return Expo(std::move(out));
}

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto va = a.values();
  const auto vb = b.values();
  return std::lexicographical_compare(vb.begin(), vb.end(), va.begin(),
                                      va.end());
}

}  // namespace qaseries
