#include <doctest.h>

#include "tatek/groupoids.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace tatek;

namespace {

// Action of G on the left cosets of <x>, as a table act[g * m + coset].
std::pair<std::size_t, std::vector<std::size_t>> coset_action(const FinGroup& g, Elem x) {
  std::set<Elem> h;
  for (long k = 0; k < static_cast<long>(g.element_order(x)); ++k) h.insert(g.pow(x, k));
  std::vector<std::set<Elem>> cosets;
  std::vector<std::size_t> coset_of(g.order(), SIZE_MAX);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset_of[a] != SIZE_MAX) continue;
    std::set<Elem> c;
    for (Elem y : h) c.insert(g.mul(static_cast<Elem>(a), y));
    for (Elem y : c) coset_of[y] = cosets.size();
    cosets.push_back(c);
  }
  const std::size_t m = cosets.size();
  std::vector<std::size_t> act(g.order() * m);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t c = 0; c < m; ++c) act[a * m + c] = coset_of[g.mul(static_cast<Elem>(a), *cosets[c].begin())];
  return {m, act};
}

// Union of coset actions for the given elements.
std::pair<std::size_t, std::vector<std::size_t>> union_action(const FinGroup& g, const std::vector<Elem>& xs) {
  std::size_t total = 0;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> parts;
  for (Elem x : xs) {
    parts.push_back(coset_action(g, x));
    total += parts.back().first;
  }
  std::vector<std::size_t> act(g.order() * total);
  std::size_t off = 0;
  for (const auto& [m, a] : parts) {
    for (std::size_t e = 0; e < g.order(); ++e)
      for (std::size_t c = 0; c < m; ++c) act[e * total + off + c] = off + a[e * m + c];
    off += m;
  }
  return {total, act};
}

// Orbit-counting oracle for the number of components of Lambda(M//G):
// sum over conjugacy classes [g] of the number of C(g)-orbits on M^g.
std::size_t inertia_components_oracle(const GroupPtr& g, std::size_t m, const std::vector<std::size_t>& act) {
  std::size_t total = 0;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    const Elem x = g->class_rep(c);
    std::vector<std::size_t> fixed;
    for (std::size_t p = 0; p < m; ++p)
      if (act[x * m + p] == p) fixed.push_back(p);
    std::set<std::size_t> seen;
    for (std::size_t p : fixed) {
      if (seen.count(p)) continue;
      ++total;
      for (std::size_t s = 0; s < g->order(); ++s)
        if (g->commute(static_cast<Elem>(s), x)) seen.insert(act[s * m + p]);
    }
  }
  return total;
}

std::multiset<std::size_t> aut_orders(const FinGroupoid& g) {
  std::multiset<std::size_t> out;
  for (std::size_t c = 0; c < g.component_count(); ++c) out.insert(g.component(c).vertex->order());
  return out;
}

}  // namespace

TEST_CASE("pt//G and its inertia") {
  const auto s3 = symmetric_group(3);
  const auto pt = point_quotient(s3);
  CHECK(pt.gpd->object_count() == 1);
  CHECK(pt.gpd->automorphism_order(0) == 6);
  CHECK(pt.gpd->cardinality() == Rational(1, 6));
  const auto l = inertia(pt.gpd);
  CHECK(l.presented.gpd->object_count() == 6);
  CHECK(aut_orders(*l.presented.gpd) == std::multiset<std::size_t>{6, 2, 3});
  // Class equation: sum of 1/|C(g)| over classes is 1.
  CHECK(l.presented.gpd->cardinality() == Rational(1));
  CHECK(l.xi.is_natural(*l.presented.gpd));
  CHECK(l.xi.order(*l.presented.gpd) == 6);
}

TEST_CASE("translation groupoid") {
  const auto s3 = symmetric_group(3);
  std::vector<std::size_t> act;
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t i = 0; i < 3; ++i) act.push_back(s3->permutation(static_cast<Elem>(g))[i]);
  const auto t = translation_groupoid(s3, 3, act);
  CHECK(t.gpd->component_count() == 1);
  CHECK(t.gpd->automorphism_order(2) == 2);
  CHECK(t.gpd->cardinality() == Rational(1, 2));
  CHECK(t.gpd->arrow_count() == 18);
  // Encode / decode round trip on every native arrow.
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t g = 0; g < 6; ++g) {
      const TranslationNative::NArrow a{m, static_cast<Elem>(g)};
      const auto back = t.decode(t.encode(a));
      CHECK(back.src == a.src);
      CHECK(back.g == a.g);
    }
  auto bad = act;
  std::swap(bad[3], bad[4]);
  CHECK_THROWS_AS(translation_groupoid(s3, 3, bad), GroupoidError);
}

TEST_CASE("inertia of translation groupoids against the orbit-counting oracle") {
  std::mt19937 rng(3);
  for (const auto& g : {symmetric_group(3), cyclic_group(4), wreath_product(cyclic_group(2), 2).group}) {
    for (int trial = 0; trial < 4; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1), count(1, 3);
      std::vector<Elem> xs;
      for (std::size_t i = count(rng); i > 0; --i) xs.push_back(static_cast<Elem>(pick(rng)));
      const auto [m, act] = union_action(*g, xs);
      const auto t = translation_groupoid(g, m, act);
      // |M//G| = |M| / |G|
      CHECK(t.gpd->cardinality() == Rational(static_cast<long>(m), static_cast<long>(g->order())));
      const auto l = inertia(t.gpd);
      CHECK(l.presented.gpd->component_count() == inertia_components_oracle(g, m, act));
      CHECK(l.xi.is_natural(*l.presented.gpd));
      for (long k : {1L, 2L, 3L}) {
        const auto pk = power_map(l, k);
        CHECK(power_map_compatible(l, pk, k));
      }
    }
  }
}

TEST_CASE("from_table") {
  // pt//C2: arrows e, s with s s = e.
  const auto g = FinGroupoid::from_table(1, {{0, 0}, {0, 0}}, {0, 1, 1, 0});
  CHECK(g.automorphism_order(0) == 2);
  // Codiscrete groupoid on two objects.
  const auto h = FinGroupoid::from_table(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}},
                                         {0, SIZE_MAX, SIZE_MAX, 3,  //
                                          SIZE_MAX, 1, 2, SIZE_MAX,  //
                                          2, SIZE_MAX, SIZE_MAX, 1,  //
                                          SIZE_MAX, 3, 0, SIZE_MAX});
  CHECK(h.component_count() == 1);
  CHECK(h.cardinality() == Rational(1));
  CHECK_THROWS_AS(FinGroupoid::from_table(1, {{0, 0}, {0, 0}}, {0, 1, 1, 1}), GroupoidError);
  CHECK_THROWS_AS(FinGroupoid::from_table(2, {{0, 1}}, {SIZE_MAX}), GroupoidError);
}

TEST_CASE("functors compose and identities are neutral") {
  const auto s3 = symmetric_group(3);
  const auto l = inertia(point_quotient(s3).gpd);
  const auto p2 = power_map(l, 2), p3 = power_map(l, 3), p6 = power_map(l, 6);
  const auto composed = compose(p3, p2);
  for (std::size_t o = 0; o < l.presented.gpd->object_count(); ++o) {
    CHECK(composed.map_object(o) == p6.map_object(o));
    for (const auto& a : l.presented.gpd->hom(o, o)) CHECK(composed.map_arrow(a) == p6.map_arrow(a));
  }
  const auto id = GroupoidFunctor::identity(l.presented.gpd);
  CHECK(equivalence_check(id).equivalence);
  CHECK(!equivalence_check(p6).equivalence);
}

TEST_CASE("root groupoid") {
  const auto l = inertia(point_quotient(cyclic_group(2)).gpd);
  const auto r = root_groupoid(l.presented.gpd, l.xi, 2);
  CHECK(r.gpd->cardinality() == l.presented.gpd->cardinality() / Rational(2));
  CHECK(r.phi.is_natural(*r.gpd));
  const auto phik = r.phi.power(*r.gpd, 2);
  for (std::size_t o = 0; o < r.gpd->object_count(); ++o) {
    const auto& ext = r.extensions[r.gpd->component_of(o)];
    CHECK(phik.assignment[o].elem == ext.encode(l.xi.assignment[o].elem, 0));
  }
  CenterElement bad;
  bad.assignment = {{0, 0, 0}};
  CHECK_THROWS_AS(root_groupoid(l.presented.gpd, bad, 2), GroupoidError);
}

TEST_CASE("symmetric powers of pt//G are pt//(G wr S_n)") {
  for (const auto& g : {cyclic_group(2), symmetric_group(3)})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto s = symmetric_power(point_quotient(g).gpd, n);
      REQUIRE(s.gpd->component_count() == 1);
      const auto w = wreath_product(g, n);
      CHECK(s.gpd->automorphism_order(0) == w.group->order());
      CHECK(s.gpd->component(0).vertex->class_count() == w.group->class_count());
    }
  const auto s0 = symmetric_power(point_quotient(symmetric_group(3)).gpd, 0);
  CHECK(s0.gpd->object_count() == 1);
  CHECK(s0.gpd->automorphism_order(0) == 1);
  // S_2 of a two-object discrete groupoid: {aa, ab, bb} up to iso.
  const auto disc = std::make_shared<const FinGroupoid>(std::vector<std::size_t>{0, 1},
                                                        std::map<std::size_t, GroupPtr>{{0, trivial_group()},
                                                                                        {1, trivial_group()}});
  const auto s2 = symmetric_power(disc, 2);
  CHECK(s2.gpd->component_count() == 3);
  CHECK(s2.gpd->cardinality() == Rational(1, 2) + Rational(1) + Rational(1, 2));
  CHECK_THROWS_AS(symmetric_power(point_quotient(symmetric_group(3)).gpd, 4, 1000), CapExceeded);
}

TEST_CASE("Phi_k and E_k") {
  const auto c2 = point_quotient(cyclic_group(2)).gpd;
  const auto phi2 = phi_groupoid(c2, 2);
  CHECK(phi2.phi.gpd->cardinality() == Rational(1, 2));
  CHECK(phi2.varphi.is_natural(*phi2.phi.gpd));

  std::vector<GpdPtr> bases{c2, point_quotient(symmetric_group(3)).gpd, point_quotient(cyclic_group(3)).gpd};
  {
    const auto s3 = symmetric_group(3);
    std::vector<std::size_t> act;
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t i = 0; i < 3; ++i) act.push_back(s3->permutation(static_cast<Elem>(g))[i]);
    bases.push_back(translation_groupoid(s3, 3, act).gpd);
  }
  for (const auto& x : bases)
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto e = equivalence_e_k(x, k);
      const auto ce = equivalence_check(e.e_k);
      CHECK(ce.equivalence);
      CHECK(ce.source_cardinality == ce.target_cardinality);
      // Phi_k(pt//G) has cardinality |Lambda(pt//G)| / k
      CHECK(ce.source_cardinality == e.lambda.presented.gpd->cardinality() / Rational(static_cast<long>(k)));
      CHECK(equivalence_check(e.f_k).equivalence);
      // E_k F_k is the identity on the nose.
      const auto ef = compose(e.e_k, e.f_k);
      const auto& r = *e.root.gpd;
      for (std::size_t o = 0; o < r.object_count(); ++o) {
        CHECK(ef.map_object(o) == o);
        for (const auto& a : r.hom(o, r.component(r.component_of(o)).rep)) CHECK(ef.map_arrow(a) == a);
      }
      // F_k E_k preserves iso classes.
      const auto fe = compose(e.f_k, e.e_k);
      for (std::size_t o = 0; o < e.phi.phi.gpd->object_count(); ++o)
        CHECK(e.phi.phi.gpd->component_of(fe.map_object(o)) == e.phi.phi.gpd->component_of(o));
      // varphi goes to the adjoined root.
      for (std::size_t o = 0; o < e.phi.phi.gpd->object_count(); ++o)
        CHECK(e.e_k.map_arrow(e.phi.varphi.assignment[o]) == e.root.phi.assignment[e.e_k.map_object(o)]);
    }
}

TEST_CASE("Q is an equivalence intertwining the center elements") {
  const auto c2 = point_quotient(cyclic_group(2)).gpd;
  const auto q = equivalence_q(c2, 3);
  const auto cert = equivalence_check(q.q);
  CHECK(cert.equivalence);
  CHECK(cert.source_cardinality == cert.target_cardinality);
  CHECK(q.intertwines_center);
  const auto qs3 = equivalence_q(point_quotient(symmetric_group(3)).gpd, 2);
  CHECK(equivalence_check(qs3.q).equivalence);
  CHECK(qs3.intertwines_center);
}

TEST_CASE("fibred products") {
  const auto s3 = symmetric_group(3);
  const auto c2 = make_subgroup(s3, {0, 1});  // {id, (1 2)}
  const auto h_pt = point_quotient(c2.group), g_pt = point_quotient(s3);
  const auto inc = subgroup_inclusion(h_pt, g_pt, c2);
  const auto sq = fibred_product(inc, inc);
  // Components are double cosets C2 \ S3 / C2.
  CHECK(sq.product.gpd->component_count() == 2);
  CHECK(sq.product.gpd->object_count() == 6);
  // Orbit-stabilizer: |P| = |S3| / (|C2| |C2|).
  CHECK(sq.product.gpd->cardinality() == Rational(6, 4));
  sq.b.validate();
  sq.v.validate();

  const auto cmp = inertia_fibre_comparison(sq);
  CHECK(equivalence_check(cmp.comparison).equivalence);

  const auto c3 = make_subgroup(s3, {0, 3, 4});
  const auto cmp2 = inertia_fibre_comparison(
      fibred_product(subgroup_inclusion(point_quotient(c3.group), g_pt, c3), inc));
  CHECK(equivalence_check(cmp2.comparison).equivalence);
}
