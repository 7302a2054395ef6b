#include <doctest.h>

#include "tatek/charring.hpp"
#include "tatek/classfun.hpp"

#include <random>

using namespace tatek;

namespace {

std::vector<Cyclotomic> ints(std::initializer_list<long> xs) {
  std::vector<Cyclotomic> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

struct S3Chars {
  GroupPtr g = symmetric_group(3);
  VirtualCharacter triv = VirtualCharacter::trivial(g);
  VirtualCharacter sgn = VirtualCharacter::sign(g);
  VirtualCharacter std2 = VirtualCharacter::permutation(g) - VirtualCharacter::trivial(g);
};

VirtualCharacter random_character(std::mt19937& rng, const GroupPtr& g) {
  std::uniform_int_distribution<long> v(-3, 3);
  VirtualCharacter out{g, {}};
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    const long n = static_cast<long>(g->element_order(g->class_rep(c)));
    out.values.push_back(Cyclotomic(v(rng)) + Cyclotomic::root_of_unity(n, v(rng)) * Rational(v(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("ring operations") {
  S3Chars s;
  // Classes: identity, transpositions, 3-cycles.
  CHECK((s.triv + s.triv).values == ints({2, 2, 2}));
  CHECK(s.sgn * s.sgn == s.triv);
  CHECK(s.std2.values == ints({2, 0, -1}));
  CHECK((s.std2 * s.std2).values == ints({4, 0, 1}));
  CHECK_THROWS_AS(s.triv + VirtualCharacter::trivial(cyclic_group(2)), CharacterError);
  CHECK(inner_product(s.std2, s.std2) == Cyclotomic(1));
  CHECK(inner_product(s.std2, s.sgn) == Cyclotomic(0));
  CHECK(is_genuine(s.std2 * s.std2, {s.triv, s.sgn, s.std2}));
  CHECK(!is_genuine(s.std2 - s.triv, {s.triv, s.sgn, s.std2}));
}

TEST_CASE("Adams operations") {
  S3Chars s;
  CHECK(adams(s.sgn, 2) == s.triv);
  CHECK(adams(s.std2, 1) == s.std2);
  const auto c2 = cyclic_group(2);
  CHECK(adams(VirtualCharacter::regular(c2), 2).values == ints({2, 2}));
  std::mt19937 rng(1);
  for (const auto& g : {symmetric_group(3), cyclic_group(6), wreath_product(cyclic_group(2), 2).group}) {
    const auto chi = random_character(rng, g);
    for (long m = 1; m <= 4; ++m)
      for (long k = 1; k <= 4; ++k) CHECK(adams(adams(chi, k), m) == adams(chi, m * k));
  }
  CHECK_THROWS_AS(adams(s.std2, 0), CharacterError);
}

TEST_CASE("symmetric and exterior powers") {
  S3Chars s;
  const auto sym = symmetric_powers(s.std2, 4);
  CHECK(sym[2].values == ints({3, 1, 0}));
  // Oracle: (chi(g)^2 + chi(g^2)) / 2 on each class.
  for (std::size_t c = 0; c < 3; ++c) {
    const Elem g = s.g->class_rep(c);
    CHECK(sym[2].values[c] == (s.std2.at(g) * s.std2.at(g) + s.std2.at(s.g->mul(g, g))) * Rational(1, 2));
  }
  for (const auto& v : symmetric_powers(s.triv, 5)) CHECK(v == s.triv);
  CHECK(symmetric_powers(s.triv * Cyclotomic(4), 2)[2].dimension() == Cyclotomic(10));
  const auto ext = exterior_powers(s.std2, 4);
  CHECK(ext[1] == s.std2);
  CHECK(ext[2] == s.sgn);
  CHECK(ext[3] == VirtualCharacter::zero(s.g));
  // S_t Lambda_{-t} = 1.
  for (std::size_t n = 1; n <= 4; ++n) {
    auto acc = VirtualCharacter::zero(s.g);
    for (std::size_t i = 0; i <= n; ++i) acc += sym[n - i] * ext[i] * Cyclotomic(i % 2 ? -1 : 1);
    CHECK(acc == VirtualCharacter::zero(s.g));
  }
  // S_t(x + y) = S_t(x) S_t(y) on random virtual characters of C4.
  std::mt19937 rng(9);
  const auto c4 = cyclic_group(4);
  for (int trial = 0; trial < 5; ++trial) {
    VirtualCharacter x{c4, {}}, y{c4, {}};
    std::uniform_int_distribution<long> v(-2, 2);
    // Integer combinations of the four linear characters.
    x = VirtualCharacter::zero(c4);
    y = VirtualCharacter::zero(c4);
    for (long a = 0; a < 4; ++a) {
      const auto lin = VirtualCharacter::from_function(c4, [&](Elem e) {
        long k = 0;
        while (c4->pow(1, k) != e) ++k;
        return Cyclotomic::root_of_unity(4, a * k);
      });
      x += lin * Cyclotomic(v(rng));
      y += lin * Cyclotomic(v(rng));
    }
    const auto sx = symmetric_powers(x, 4), sy = symmetric_powers(y, 4), sxy = symmetric_powers(x + y, 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      auto acc = VirtualCharacter::zero(c4);
      for (std::size_t i = 0; i <= n; ++i) acc += sx[i] * sy[n - i];
      CHECK(acc == sxy[n]);
    }
  }
  CHECK_THROWS_AS(symmetric_powers(s.triv * Cyclotomic(Rational(1, 2)), 2), CharacterError);
}

TEST_CASE("induction") {
  S3Chars s;
  const auto e = make_subgroup(s.g, {0});
  CHECK(induce(VirtualCharacter::trivial(e.group), e) == VirtualCharacter::regular(s.g));
  const auto c2 = make_subgroup(s.g, {0, 1});
  const auto ind = induce(VirtualCharacter::trivial(c2.group), c2);
  CHECK(ind.values == ints({3, 1, 0}));
  const auto c3 = make_subgroup(s.g, {0, 3, 4});
  const auto lin = VirtualCharacter::from_function(c3.group, [&](Elem x) {
    return x == 0 ? Cyclotomic(1) : Cyclotomic::root_of_unity(3, x == 1 ? 1 : 2);
  });
  const auto ind3 = induce(lin, c3);
  CHECK(ind3.dimension() == Cyclotomic(2));
  CHECK(ind3 == s.std2);
  CHECK_THROWS_AS(induce(s.triv, c2), CharacterError);

  // Agreement with the transfer of 1-class functions.
  for (const auto* h : {&c2, &c3, &e}) {
    const auto inc = subgroup_inclusion(point_quotient(h->group), point_quotient(s.g), *h);
    const auto lh = iterated_inertia(inc.source(), 1), lg = iterated_inertia(inc.target(), 1);
    const auto chi = h == &c3 ? lin : VirtualCharacter::trivial(h->group);
    NClassFunction f{lh, {}};
    for (std::size_t c = 0; c < lh->class_count(); ++c) f.values.push_back(chi.at(lh->tuple(lh->top()->component(c).rep).second[0].elem));
    const auto t = transfer(f, inc, lg).value;
    const auto direct = induce(chi, *h);
    for (std::size_t c = 0; c < lg->class_count(); ++c)
      CHECK(t.values[c] == direct.at(lg->tuple(lg->top()->component(c).rep).second[0].elem));
  }
}

TEST_CASE("central eigenprojection") {
  const auto c4 = cyclic_group(4);
  const auto reg = VirtualCharacter::regular(c4);
  CHECK(central_eigenprojection(reg, 0, Rational(0)) == reg);
  // The element of C4 = <1> chosen as generator: index 1 is (0 1 2 3) -> (1 2 3 0).
  const Elem z = 1;
  const auto p = central_eigenprojection(reg, z, Rational(1, 4));
  CHECK(p.at(0) == Cyclotomic(1));
  CHECK(p.at(z) == Cyclotomic::root_of_unity(4, 1));
  CHECK(central_eigenprojection(reg, z, Rational(1, 3)) == VirtualCharacter::zero(c4));
  std::mt19937 rng(4);
  const auto w = adjoin_central_root(symmetric_group(3), 0, 4).group;
  for (int trial = 0; trial < 3; ++trial) {
    const auto chi = random_character(rng, w);
    const Elem phi = static_cast<Elem>(6);  // (e, 1)
    auto sum = VirtualCharacter::zero(w);
    std::vector<VirtualCharacter> parts;
    for (long a = 0; a < 4; ++a) {
      parts.push_back(central_eigenprojection(chi, phi, Rational(a, 4)));
      CHECK(central_eigenprojection(parts.back(), phi, Rational(a, 4)) == parts.back());
      sum += parts.back();
    }
    CHECK(sum == chi);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        if (a != b) CHECK(inner_product(parts[a], parts[b]).is_zero());
  }
  CHECK_THROWS_AS(central_eigenprojection(VirtualCharacter::trivial(symmetric_group(3)), 1, Rational(0)),
                  CharacterError);
}

TEST_CASE("Atiyah power operations") {
  S3Chars s;
  const auto tower = wreath_tower(s.g, 3);
  const auto& w1 = tower.levels[0];
  const auto p1 = atiyah_power_wreath(s.std2, w1);
  for (std::size_t g = 0; g < 6; ++g) CHECK(p1.at(w1.encode(0, std::vector<Elem>{static_cast<Elem>(g)})) == s.std2.at(static_cast<Elem>(g)));

  const auto& w2 = tower.levels[1];
  const auto p2 = atiyah_power_wreath(s.std2, w2);
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 6; ++h) {
      const std::vector<Elem> gh{g, h};
      CHECK(p2.at(w2.encode(1, gh)) == s.std2.at(s.g->mul(h, g)));
      CHECK(p2.at(w2.encode(0, gh)) == s.std2.at(g) * s.std2.at(h));
    }
  // Multiplicativity.
  const auto p2sgn = atiyah_power_wreath(s.sgn, w2);
  CHECK(atiyah_power_wreath(s.std2 * s.sgn, w2) == p2 * p2sgn);
  // Genuine input: integral values, S_2-invariants of a genuine representation.
  CHECK(p2.is_integral());
  CHECK(p2.dimension() == Cyclotomic(4));
  // std (x) std has no S3 x S3 invariants.
  CHECK(inner_product(p2, VirtualCharacter::trivial(w2.group)) == Cyclotomic(0));
  CHECK(inner_product(p2sgn, VirtualCharacter::trivial(w2.group)) == Cyclotomic(0));
  CHECK(inner_product(atiyah_power_wreath(s.triv, w2), VirtualCharacter::trivial(w2.group)) == Cyclotomic(1));

  // Molien: G trivial, d = 2, n = 2 -> 3 invariants.
  const auto t1 = wreath_tower(trivial_group(), 3);
  const auto two = VirtualCharacter::trivial(t1.base) * Cyclotomic(2);
  CHECK(inner_product(atiyah_power_wreath(two, t1.levels[1]), VirtualCharacter::trivial(t1.group(2))) ==
        Cyclotomic(3));
}

TEST_CASE("bullet product") {
  const auto t1 = wreath_tower(trivial_group(), 2);
  const auto triv1 = VirtualCharacter::trivial(t1.group(1));
  const auto b = bullet_product(t1, triv1, 1, triv1, 1);
  // Permutation character of S_2: (2, 0).
  CHECK(b.values == ints({2, 0}));
  const auto unit = VirtualCharacter::trivial(t1.group(0));
  CHECK(bullet_product(t1, unit, 0, triv1, 1) == triv1);

  S3Chars s;
  const auto tower = wreath_tower(s.g, 3);
  const auto px = atiyah_powers(s.std2, tower), py = atiyah_powers(s.sgn, tower), pxy = atiyah_powers(s.std2 + s.sgn, tower);
  const auto pneg = atiyah_powers(-s.std2, tower);
  for (std::size_t n = 0; n <= 3; ++n) {
    auto sum = VirtualCharacter::zero(tower.group(n));
    auto cancel = VirtualCharacter::zero(tower.group(n));
    for (std::size_t a = 0; a <= n; ++a) {
      sum += bullet_product(tower, px[a], a, py[n - a], n - a);
      cancel += bullet_product(tower, px[a], a, pneg[n - a], n - a);
    }
    CHECK(sum == pxy[n]);
    CHECK(cancel == (n == 0 ? VirtualCharacter::trivial(tower.group(0)) : VirtualCharacter::zero(tower.group(n))));
  }
}
