#include "tatek/qgraded.hpp"

#include <algorithm>

namespace tatek {

Bound Bound::parse(const std::string& s) {
  if (s == "inf") return {};
  return Bound(Rational::parse(s));
}

const Rational& Bound::value() const {
  if (!finite_) throw PrecisionError("bound is infinite");
  return value_;
}

Bound min(const Bound& a, const Bound& b) { return a < b ? a : b; }

Bound operator+(const Bound& a, const Bound& b) {
  if (!a.finite_ || !b.finite_) return {};
  return Bound(a.value_ + b.value_);
}

bool Coeff<VirtualCharacter>::is_zero(const VirtualCharacter& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

VirtualCharacter Coeff<VirtualCharacter>::inverse(const VirtualCharacter& c) {
  VirtualCharacter out = c;
  for (auto& v : out.values) v = v.inverse();
  return out;
}

}  // namespace tatek
