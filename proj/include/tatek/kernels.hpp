// Data-parallel enumeration kernels over multiplication tables.
//
// Each kernel has an OpenMP implementation (the one the library calls) and a
// plain serial reference kept for tests and benchmarks. Both return identical
// results; the parallel versions only split independent iterations and
// combine them in a fixed order.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tatek {
class Cyclotomic;
}

namespace tatek::kernels {

using Elem = std::uint32_t;

/// View of a group table; mul[a*order+b] = a*b.
struct TableView {
  std::size_t order;
  std::span<const Elem> mul;
  std::span<const Elem> inverse;

  Elem product(Elem a, Elem b) const { return mul[std::size_t{a} * order + b]; }
  Elem conj(Elem g, Elem x) const { return product(product(g, x), inverse[g]); }
};

/// For every element, the least element index in its conjugacy class.
std::vector<Elem> class_minima(const TableView& t);
std::vector<Elem> class_minima_serial(const TableView& t);

/// For every element, the order of its centralizer.
std::vector<std::size_t> centralizer_orders(const TableView& t);
std::vector<std::size_t> centralizer_orders_serial(const TableView& t);

/// #{(g, h) : gh = hg}.
std::size_t commuting_pairs(const TableView& t);
std::size_t commuting_pairs_serial(const TableView& t);

/// Number of commuting n-tuples (pairwise commuting), by recursion over
/// centralizers. n = 0 gives 1.
std::size_t commuting_tuples(const TableView& t, std::size_t n);
std::size_t commuting_tuples_serial(const TableView& t, std::size_t n);

/// Induced class function values at the given ambient elements:
/// out[i] = (1/|H|) sum_{s in G, s^-1 g_i s in H} chi(s^-1 g_i s),
/// where `values_on_ambient[x]` is chi(x) for x in H and `in_subgroup[x]`
/// marks membership.
std::vector<Cyclotomic> induce_sums(const TableView& g, std::span<const Elem> at,
                                    std::span<const std::uint8_t> in_subgroup,
                                    std::span<const Cyclotomic> values_on_ambient, std::size_t subgroup_order);
std::vector<Cyclotomic> induce_sums_serial(const TableView& g, std::span<const Elem> at,
                                           std::span<const std::uint8_t> in_subgroup,
                                           std::span<const Cyclotomic> values_on_ambient,
                                           std::size_t subgroup_order);

}  // namespace tatek::kernels
