#include "tatek/charring.hpp"

#include "tatek/kernels.hpp"

#include <algorithm>

namespace tatek {

namespace {

void same_group(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.group != b.group) throw CharacterError("characters live on different groups");
}

std::vector<Elem> inverses(const FinGroup& g) {
  std::vector<Elem> inv(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) inv[i] = g.inv(static_cast<Elem>(i));
  return inv;
}

void certify(const std::vector<VirtualCharacter>& seq, const char* what) {
  for (const auto& c : seq)
    if (!c.is_integral())
      throw CharacterError(std::string(what) + ": result is not integral; the input is not a virtual character");
}

}  // namespace

VirtualCharacter VirtualCharacter::constant(const GroupPtr& g, const Cyclotomic& c) {
  return {g, std::vector<Cyclotomic>(g->class_count(), c)};
}

VirtualCharacter VirtualCharacter::regular(const GroupPtr& g) {
  auto out = zero(g);
  out.values[0] = Cyclotomic(static_cast<long>(g->order()));
  return out;
}

VirtualCharacter VirtualCharacter::permutation(const GroupPtr& g) {
  if (g->degree() == 0 && g->order() > 1) throw CharacterError("group has no permutation realization");
  return from_function(g, [&](Elem x) {
    long fixed = 0;
    const auto& p = g->permutation(x);
    for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == i;
    return Cyclotomic(fixed);
  });
}

VirtualCharacter VirtualCharacter::sign(const GroupPtr& g) {
  if (g->degree() == 0 && g->order() > 1) throw CharacterError("group has no permutation realization");
  return from_function(g, [&](Elem x) {
    const auto& p = g->permutation(x);
    std::vector<bool> seen(p.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return Cyclotomic(transpositions % 2 ? -1 : 1);
  });
}

VirtualCharacter VirtualCharacter::from_function(const GroupPtr& g, const std::function<Cyclotomic(Elem)>& fn) {
  VirtualCharacter out{g, {}};
  for (std::size_t c = 0; c < g->class_count(); ++c) out.values.push_back(fn(g->class_rep(c)));
  return out;
}

bool VirtualCharacter::is_integral() const {
  return std::all_of(values.begin(), values.end(), [](const Cyclotomic& v) { return v.is_integral(); });
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  same_group(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  same_group(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const VirtualCharacter& o) {
  same_group(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= o.values[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Cyclotomic& c) {
  for (auto& v : values) v *= c;
  return *this;
}

VirtualCharacter VirtualCharacter::operator-() const {
  VirtualCharacter out = *this;
  for (auto& v : out.values) v = -v;
  return out;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a.group == b.group && a.values == b.values;
}

Cyclotomic inner_product(const VirtualCharacter& chi, const VirtualCharacter& psi) {
  same_group(chi, psi);
  const FinGroup& g = *chi.group;
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    sum += chi.values[c] * psi.values[c].conj() * Rational(static_cast<long>(g.class_size(c)));
  return sum * Rational(1, static_cast<long>(g.order()));
}

bool is_genuine(const VirtualCharacter& chi, const std::vector<VirtualCharacter>& irreducibles) {
  auto rest = chi;
  for (const auto& irr : irreducibles) {
    const Cyclotomic m = inner_product(chi, irr);
    if (!m.is_rational() || !m.to_rational().is_integer() || m.to_rational().sign() < 0) return false;
    rest -= irr * m;
  }
  return std::all_of(rest.values.begin(), rest.values.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

VirtualCharacter adams(const VirtualCharacter& chi, long m) {
  if (m < 1) throw CharacterError("Adams operations need m >= 1");
  const FinGroup& g = *chi.group;
  VirtualCharacter out{chi.group, {}};
  for (std::size_t c = 0; c < g.class_count(); ++c) out.values.push_back(chi.values[g.power_class(c, m)]);
  return out;
}

namespace {

std::vector<VirtualCharacter> newton(const VirtualCharacter& chi, std::size_t n_max, bool alternating) {
  std::vector<VirtualCharacter> psi{VirtualCharacter::zero(chi.group)};
  for (std::size_t m = 1; m <= n_max; ++m) psi.push_back(adams(chi, static_cast<long>(m)));
  std::vector<VirtualCharacter> out{VirtualCharacter::trivial(chi.group)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto acc = VirtualCharacter::zero(chi.group);
    for (std::size_t m = 1; m <= n; ++m) {
      auto term = psi[m] * out[n - m];
      if (alternating && m % 2 == 0) term = -term;
      acc += term;
    }
    out.push_back(acc * Cyclotomic(Rational(1, static_cast<long>(n))));
  }
  return out;
}

}  // namespace

std::vector<VirtualCharacter> symmetric_powers(const VirtualCharacter& chi, std::size_t n_max) {
  auto out = newton(chi, n_max, false);
  certify(out, "symmetric_powers");
  return out;
}

std::vector<VirtualCharacter> exterior_powers(const VirtualCharacter& chi, std::size_t n_max) {
  auto out = newton(chi, n_max, true);
  certify(out, "exterior_powers");
  return out;
}

VirtualCharacter induce(const VirtualCharacter& chi, const Subgroup& h) {
  if (chi.group != h.group) throw CharacterError("induce: character is not on the given subgroup");
  const FinGroup& g = *h.ambient;
  std::vector<std::uint8_t> member(g.order(), 0);
  std::vector<Cyclotomic> vals(g.order());
  for (std::size_t i = 0; i < h.to_ambient.size(); ++i) {
    member[h.to_ambient[i]] = 1;
    vals[h.to_ambient[i]] = chi.at(static_cast<Elem>(i));
  }
  std::vector<Elem> reps;
  for (std::size_t c = 0; c < g.class_count(); ++c) reps.push_back(g.class_rep(c));
  const auto inv = inverses(g);
  const kernels::TableView view{g.order(), g.table(), inv};
  return {h.ambient, kernels::induce_sums(view, reps, member, vals, h.group->order())};
}

VirtualCharacter central_eigenprojection(const VirtualCharacter& chi, Elem z, const Rational& a) {
  const FinGroup& g = *chi.group;
  if (z >= g.order() || !g.is_central(z)) throw CharacterError("central_eigenprojection: element is not central");
  const long r = static_cast<long>(g.element_order(z));
  const Rational ar = a * Rational(r);
  if (!ar.is_integer()) return VirtualCharacter::zero(chi.group);
  const long num = mod(ar.to_long(), r);
  VirtualCharacter out{chi.group, {}};
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Cyclotomic sum;
    Elem zj = 0;
    for (long j = 0; j < r; ++j) {
      sum += Cyclotomic::root_of_unity(r, -num * j) * chi.at(g.mul(zj, g.class_rep(c)));
      zj = g.mul(zj, z);
    }
    out.values.push_back(sum * Rational(1, r));
  }
  return out;
}

VirtualCharacter atiyah_power_wreath(const VirtualCharacter& chi, const WreathProduct& w) {
  if (chi.group != w.base) throw CharacterError("atiyah_power_wreath: character is not on the wreath base");
  const FinGroup& g = *w.base;
  return VirtualCharacter::from_function(w.group, [&](Elem x) {
    const auto& sigma = w.perm(x);
    const auto gs = w.components(x);
    std::vector<bool> seen(w.n, false);
    Cyclotomic prod(1);
    for (std::size_t i = 0; i < w.n; ++i) {
      if (seen[i]) continue;
      Elem around = 0;
      for (std::size_t j = i; !seen[j]; j = sigma[j]) {
        seen[j] = true;
        around = g.mul(gs[j], around);
      }
      prod *= chi.at(around);
    }
    return prod;
  });
}

WreathTower wreath_tower(const GroupPtr& g, std::size_t n_max, std::size_t cap) {
  WreathTower t{g, trivial_group(), {}};
  for (std::size_t n = 1; n <= n_max; ++n) t.levels.push_back(wreath_product(g, n, cap));
  return t;
}

std::vector<VirtualCharacter> atiyah_powers(const VirtualCharacter& chi, const WreathTower& tower) {
  std::vector<VirtualCharacter> out{VirtualCharacter::trivial(tower.degree_zero)};
  for (const auto& w : tower.levels) out.push_back(atiyah_power_wreath(chi, w));
  return out;
}

VirtualCharacter bullet_product(const WreathTower& tower, const VirtualCharacter& p, std::size_t a,
                                const VirtualCharacter& q, std::size_t b) {
  if (p.group != tower.group(a) || q.group != tower.group(b))
    throw CharacterError("bullet_product: characters are not on the expected wreath products");
  if (a == 0) return q * p.values[0];
  if (b == 0) return p * q.values[0];
  const WreathProduct& wa = tower.levels.at(a - 1);
  const WreathProduct& wb = tower.levels.at(b - 1);
  const WreathProduct& w = tower.levels.at(a + b - 1);
  const FinGroup& big = *w.group;
  auto perm_index = [](const WreathProduct& v, const Permutation& s) {
    return static_cast<std::size_t>(std::lower_bound(v.perms.begin(), v.perms.end(), s) - v.perms.begin());
  };
  std::vector<std::uint8_t> member(big.order(), 0);
  std::vector<Cyclotomic> vals(big.order());
  std::size_t sub_order = 0;
  for (std::size_t x = 0; x < big.order(); ++x) {
    const auto& sigma = w.perm(static_cast<Elem>(x));
    if (!std::all_of(sigma.begin(), sigma.begin() + static_cast<long>(a), [&](Elem s) { return s < a; })) continue;
    const auto gs = w.components(static_cast<Elem>(x));
    Permutation sa(sigma.begin(), sigma.begin() + static_cast<long>(a)), sb;
    for (std::size_t i = a; i < a + b; ++i) sb.push_back(static_cast<Elem>(sigma[i] - a));
    const Elem xa = wa.encode(perm_index(wa, sa), std::span<const Elem>(gs.data(), a));
    const Elem xb = wb.encode(perm_index(wb, sb), std::span<const Elem>(gs.data() + a, b));
    member[x] = 1;
    vals[x] = p.at(xa) * q.at(xb);
    ++sub_order;
  }
  std::vector<Elem> reps;
  for (std::size_t c = 0; c < big.class_count(); ++c) reps.push_back(big.class_rep(c));
  const auto inv = inverses(big);
  const kernels::TableView view{big.order(), big.table(), inv};
  return {w.group, kernels::induce_sums(view, reps, member, vals, sub_order)};
}

}  // namespace tatek
