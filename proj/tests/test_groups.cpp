#include <doctest.h>

#include "tatek/groups.hpp"
#include "tatek/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace tatek;

namespace {

kernels::TableView view(const FinGroup& g) {
  std::vector<Elem> inv(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) inv[i] = g.inv(static_cast<Elem>(i));
  static thread_local std::vector<Elem> keep;
  keep = inv;
  return {g.order(), g.table(), keep};
}

std::vector<std::size_t> sorted_class_sizes(const FinGroup& g) {
  std::vector<std::size_t> s;
  for (std::size_t c = 0; c < g.class_count(); ++c) s.push_back(g.class_size(c));
  return s;
}

void check_class_equation_and_burnside(const FinGroup& g) {
  std::size_t total = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    total += g.class_size(c);
    CHECK(g.class_size(c) * g.centralizer_order(c) == g.order());
  }
  CHECK(total == g.order());
  std::size_t commuting = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.commute(static_cast<Elem>(a), static_cast<Elem>(b))) ++commuting;
  CHECK(commuting == g.class_count() * g.order());
}

}  // namespace

TEST_CASE("group_from_generators") {
  const auto s3 = group_from_generators(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3->order() == 6);
  const auto triv = group_from_generators(1, {});
  CHECK(triv->order() == 1);
  const auto c4 = group_from_generators(4, {{1, 2, 3, 0}});
  CHECK(c4->order() == 4);
  // Powers of a 4-cycle: every element is a power of the generator.
  std::set<Elem> powers;
  const Elem gen = [&] {
    for (std::size_t x = 0; x < 4; ++x)
      if (c4->element_order(static_cast<Elem>(x)) == 4) return static_cast<Elem>(x);
    return Elem{0};
  }();
  for (long k = 0; k < 4; ++k) powers.insert(c4->pow(gen, k));
  CHECK(powers.size() == 4);

  CHECK_THROWS_AS(group_from_generators(3, {{0, 0, 1}}), GroupError);
  CHECK_THROWS_AS(group_from_generators(3, {{0, 1}}), GroupError);
  CHECK_THROWS_AS(group_from_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 50), CapExceeded);
}

TEST_CASE("element indexing is lexicographic in permutation images") {
  const auto s3 = symmetric_group(3);
  for (std::size_t i = 1; i < s3->order(); ++i)
    CHECK(s3->permutation(static_cast<Elem>(i - 1)) < s3->permutation(static_cast<Elem>(i)));
  CHECK(s3->permutation(0) == Permutation{0, 1, 2});
}

TEST_CASE("conjugacy data") {
  const auto s3 = symmetric_group(3);
  const auto d = conjugacy_data(s3);
  REQUIRE(d.classes.size() == 3);
  std::vector<std::size_t> sizes, cents;
  for (std::size_t c = 0; c < 3; ++c) {
    sizes.push_back(d.classes[c].size());
    cents.push_back(d.centralizers[c].group->order());
    CHECK(d.representatives[c] == *std::min_element(d.classes[c].begin(), d.classes[c].end()));
  }
  // Classes are ordered by representative; with lexicographic indexing that
  // is identity, transpositions (contain 0 1 2 -> 0 2 1 at index 1), 3-cycles.
  CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
  CHECK(cents == std::vector<std::size_t>{6, 2, 3});

  CHECK(conjugacy_data(trivial_group()).classes.size() == 1);
  const auto c4 = cyclic_group(4);
  const auto d4 = conjugacy_data(c4);
  CHECK(d4.classes.size() == 4);
  for (const auto& c : d4.centralizers) CHECK(c.group->order() == 4);
}

TEST_CASE("class equation and Burnside count on constructed groups") {
  for (const auto& g : {trivial_group(), cyclic_group(2), cyclic_group(4), symmetric_group(3), symmetric_group(4)})
    check_class_equation_and_burnside(*g);
  check_class_equation_and_burnside(*wreath_product(cyclic_group(2), 3).group);
  check_class_equation_and_burnside(*adjoin_central_root(cyclic_group(4), 2, 3).group);
}

TEST_CASE("wreath product") {
  CHECK(wreath_product(cyclic_group(2), 2).group->order() == 8);
  // Trivial base: S_3 by another route, compared through class sizes.
  const auto w = wreath_product(trivial_group(), 3);
  CHECK(w.group->order() == 6);
  auto a = sorted_class_sizes(*w.group), b = sorted_class_sizes(*symmetric_group(3));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  const auto w23 = wreath_product(cyclic_group(2), 3);
  CHECK(w23.group->order() == 48);
  // Signed cycle types of length <= 3: pairs of bipartitions of 3 = 10.
  CHECK(w23.group->class_count() == 10);
  CHECK_THROWS_AS(wreath_product(symmetric_group(3), 4, 1000), CapExceeded);
}

TEST_CASE("wreath encoding round trip") {
  const auto w = wreath_product(cyclic_group(3), 2);
  for (std::size_t x = 0; x < w.group->order(); ++x) {
    const auto gs = w.components(static_cast<Elem>(x));
    CHECK(w.encode(w.perm_index(static_cast<Elem>(x)), gs) == x);
  }
}

TEST_CASE("adjoin central root") {
  const auto c2 = cyclic_group(2);
  const auto r = adjoin_central_root(c2, 1, 2);
  CHECK(r.group->order() == 4);
  CHECK(r.group->element_order(r.phi) == 4);
  CHECK(r.group->pow(r.phi, 2) == r.encode(1, 0));
  CHECK(r.group->is_central(r.phi));

  const auto s3 = symmetric_group(3);
  const auto r1 = adjoin_central_root(s3, 0, 1);
  CHECK(r1.group->order() == 6);
  CHECK(r1.phi == 0);
  CHECK(r1.group->class_count() == 3);

  const auto r3 = adjoin_central_root(trivial_group(), 0, 3);
  CHECK(r3.group->order() == 3);
  CHECK(r3.group->element_order(r3.phi) == 3);

  CHECK_THROWS_AS(adjoin_central_root(s3, 1, 2), GroupError);

  // phi^k = z and phi central for every central z of C4 and small k.
  const auto c4 = cyclic_group(4);
  for (Elem z = 0; z < 4; ++z)
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto e = adjoin_central_root(c4, z, k);
      CHECK(e.group->pow(e.phi, static_cast<long>(k)) == e.encode(z, 0));
      CHECK(e.group->is_central(e.phi));
      CHECK(e.group->element_order(e.phi) == k * c4->element_order(z));
    }
}

TEST_CASE("from_table validation") {
  CHECK_NOTHROW(FinGroup::from_table(2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(FinGroup::from_table(2, {0, 1, 1, 1}), GroupError);
  CHECK_THROWS_AS(FinGroup::from_table(2, {1, 0, 0, 1}), GroupError);
  // A Latin square with identity that is not associative (order 5 loop).
  const std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FinGroup::from_table(5, loop), GroupError);
}

TEST_CASE("subgroups") {
  const auto s3 = symmetric_group(3);
  CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 3}), GroupError);
  const auto c = centralizer(s3, s3->class_rep(2));
  CHECK(c.group->order() == 3);
  for (std::size_t i = 0; i < c.to_ambient.size(); ++i) CHECK(c.local(c.to_ambient[i]) == i);
}

TEST_CASE("parallel kernels agree with serial references") {
  for (const auto& g : {symmetric_group(4), wreath_product(cyclic_group(2), 3).group, cyclic_group(6)}) {
    const auto v = view(*g);
    CHECK(kernels::class_minima(v) == kernels::class_minima_serial(v));
    CHECK(kernels::centralizer_orders(v) == kernels::centralizer_orders_serial(v));
    CHECK(kernels::commuting_pairs(v) == kernels::commuting_pairs_serial(v));
    for (std::size_t n = 0; n <= 3; ++n) CHECK(kernels::commuting_tuples(v, n) == kernels::commuting_tuples_serial(v, n));
  }
  // S3: 18 commuting pairs.
  const auto s3 = symmetric_group(3);
  CHECK(kernels::commuting_pairs(view(*s3)) == 18);
}
