#include <doctest.h>

#include "tatek/classfun.hpp"

#include <random>
#include <set>

using namespace tatek;

namespace {

GroupoidFunctor collapse(const GroupPtr& g) {
  return make_functor(point_quotient(g), point_quotient(trivial_group()), [](std::size_t) { return std::size_t{0}; },
                      [](const TranslationNative::NArrow&) { return TranslationNative::NArrow{0, 0}; });
}

// Commuting n-tuples of G up to simultaneous conjugation, by brute force.
std::size_t commuting_tuple_classes(const FinGroup& g, std::size_t n) {
  std::set<std::vector<Elem>> canon;
  std::vector<Elem> t(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = g.commute(t[i], t[j]);
    if (ok) {
      std::vector<Elem> best;
      for (std::size_t s = 0; s < g.order(); ++s) {
        std::vector<Elem> c;
        for (Elem x : t) c.push_back(g.conj(static_cast<Elem>(s), x));
        if (best.empty() || c < best) best = c;
      }
      canon.insert(best);
    }
    std::size_t i = 0;
    while (i < n && ++t[i] == g.order()) t[i++] = 0;
    if (i == n) break;
  }
  return canon.size();
}

}  // namespace

TEST_CASE("iterated inertia") {
  const auto s3 = point_quotient(symmetric_group(3)).gpd;
  CHECK(iterated_inertia(s3, 0)->class_count() == 1);
  CHECK(iterated_inertia(s3, 2)->class_count() == 8);
  CHECK(iterated_inertia(point_quotient(cyclic_group(2)).gpd, 2)->class_count() == 4);
  for (const auto& g : {symmetric_group(3), cyclic_group(4), wreath_product(cyclic_group(2), 2).group})
    for (std::size_t n = 0; n <= 3; ++n)
      CHECK(iterated_inertia(point_quotient(g).gpd, n)->class_count() == commuting_tuple_classes(*g, n));

  // Tuples decode to commuting loops and re-encode into the same class.
  const auto s3g = symmetric_group(3);
  const auto l3 = iterated_inertia(point_quotient(s3g).gpd, 3);
  for (std::size_t o = 0; o < l3->top()->object_count(); ++o) {
    const auto [x, gs] = l3->tuple(o);
    std::vector<Elem> elems;
    for (const auto& a : gs) elems.push_back(a.elem);
    const auto& v = *s3g;
    for (Elem a : elems)
      for (Elem b : elems) CHECK(v.commute(a, b));
    CHECK(l3->class_of_tuple(x, elems) == l3->top()->component_of(o));
  }
}

TEST_CASE("transfer examples") {
  const auto s3 = symmetric_group(3);
  const auto h = make_subgroup(s3, {0, 1});
  const auto inc = subgroup_inclusion(point_quotient(h.group), point_quotient(s3), h);
  const auto lh = iterated_inertia(inc.source(), 1), lg = iterated_inertia(inc.target(), 1);
  const auto t = transfer(NClassFunction::constant(lh, Cyclotomic(1)), inc, lg);
  CHECK(t.faithful);
  CHECK(t.integral);
  // Oracle: (1/|H|) #{s : s g s^-1 in H} at each class representative.
  for (std::size_t c = 0; c < lg->class_count(); ++c) {
    const auto [x, gs] = lg->tuple(lg->top()->component(c).rep);
    long count = 0;
    for (std::size_t s = 0; s < 6; ++s)
      if (h.contains(s3->conj(static_cast<Elem>(s), gs[0].elem))) ++count;
    CHECK(t.value.values[c] == Cyclotomic(Rational(count, 2)));
  }
  std::multiset<std::string> vals;
  for (const auto& v : t.value.values) vals.insert(v.str());
  CHECK(vals == std::multiset<std::string>{"3", "1", "0"});

  const auto eps = collapse(s3);
  const auto l2 = iterated_inertia(eps.source(), 2), pt2 = iterated_inertia(eps.target(), 2);
  const auto t2 = transfer(NClassFunction::constant(l2, Cyclotomic(1)), eps, pt2);
  CHECK(t2.value.values == std::vector<Cyclotomic>{Cyclotomic(3)});
  CHECK(!t2.faithful);
  const auto t1 = transfer(NClassFunction::constant(iterated_inertia(eps.source(), 1), Cyclotomic(1)), eps,
                           iterated_inertia(eps.target(), 1));
  CHECK(t1.value.values == std::vector<Cyclotomic>{Cyclotomic(1)});
}

TEST_CASE("restriction") {
  const auto s3 = symmetric_group(3);
  const auto c3 = make_subgroup(s3, {0, 3, 4});
  const auto inc = subgroup_inclusion(point_quotient(c3.group), point_quotient(s3), c3);
  const auto ls = iterated_inertia(inc.target(), 1), lc = iterated_inertia(inc.source(), 1);
  NClassFunction chi{ls, {}};
  for (std::size_t c = 0; c < ls->class_count(); ++c) chi.values.push_back(Cyclotomic(static_cast<long>(10 * c + 1)));
  const auto r = restrict(chi, inc, lc);
  REQUIRE(r.values.size() == 3);
  // The 3-cycle class value lands on both non-identity classes of C3.
  std::size_t cyc_class = 0;
  for (std::size_t c = 0; c < ls->class_count(); ++c)
    if (ls->automorphism_order(c) == 3) cyc_class = c;
  std::size_t hits = 0;
  for (const auto& v : r.values) hits += v == chi.values[cyc_class];
  CHECK(hits == 2);
  const auto id = GroupoidFunctor::identity(ls->base);
  CHECK(restrict(chi, id, ls) == chi);
}

TEST_CASE("Frobenius reciprocity and functoriality on random class functions") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> val(-4, 4);
  const auto s3 = symmetric_group(3);
  const auto c2 = make_subgroup(s3, {0, 1});
  const auto triv_in_c2 = make_subgroup(c2.group, {0});
  const auto pt1 = point_quotient(triv_in_c2.group), pt2 = point_quotient(c2.group), pt6 = point_quotient(s3);
  const auto f = subgroup_inclusion(pt1, pt2, triv_in_c2);
  const auto g = subgroup_inclusion(pt2, pt6, c2);
  const auto gf = compose(g, f);
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto l1 = iterated_inertia(f.source(), n), l2 = iterated_inertia(f.target(), n),
               l6 = iterated_inertia(g.target(), n);
    for (int trial = 0; trial < 5; ++trial) {
      NClassFunction chi{l2, {}}, psi{l6, {}}, rho{l1, {}};
      for (std::size_t c = 0; c < l2->class_count(); ++c) chi.values.push_back(Cyclotomic(val(rng)));
      for (std::size_t c = 0; c < l6->class_count(); ++c)
        psi.values.push_back(Cyclotomic(val(rng)) + Cyclotomic::root_of_unity(3, val(rng)));
      for (std::size_t c = 0; c < l1->class_count(); ++c) rho.values.push_back(Cyclotomic(val(rng)));
      CHECK(pairing(transfer(chi, g, l6).value, psi) == pairing(chi, restrict(psi, g, l2)));
      CHECK(transfer(rho, gf, l6).value == transfer(transfer(rho, f, l2).value, g, l6).value);
      CHECK(restrict(psi, gf, l1) == restrict(restrict(psi, g, l2), f, l1));
      CHECK(transfer(chi, g, l6).integral);
    }
  }
}

TEST_CASE("push-pull") {
  const auto s3 = symmetric_group(3);
  const auto c2 = make_subgroup(s3, {0, 1});
  const auto inc = subgroup_inclusion(point_quotient(c2.group), point_quotient(s3), c2);
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto r = push_pull_check(fibred_product(inc, inc), n);
    CHECK(r.passes);
    CHECK(r.functions_checked > 0);
  }
  // Z = pt, X = Y = pt//C2.
  const auto eps = collapse(cyclic_group(2));
  for (std::size_t n = 0; n <= 2; ++n) CHECK(push_pull_check(fibred_product(eps, eps), n).passes);
  // a = identity.
  const auto id = GroupoidFunctor::identity(inc.target());
  CHECK(push_pull_check(fibred_product(inc, id), 1).passes);
}
