#include "tatek/kernels.hpp"

#include "tatek/exactnum.hpp"

#include <algorithm>

namespace tatek::kernels {

std::vector<Elem> class_minima(const TableView& t) {
  // Orbit sweep as in the serial version; each orbit's conjugates are
  // computed in parallel and marked serially.
  const auto n = static_cast<std::int64_t>(t.order);
  std::vector<Elem> out(t.order);
  std::vector<bool> seen(t.order, false);
  std::vector<Elem> orbit(t.order);
  for (std::size_t x = 0; x < t.order; ++x) {
    if (seen[x]) continue;
#pragma omp parallel for schedule(static)
    for (std::int64_t g = 0; g < n; ++g) orbit[g] = t.conj(static_cast<Elem>(g), static_cast<Elem>(x));
    for (const Elem y : orbit)
      if (!seen[y]) {
        seen[y] = true;
        out[y] = static_cast<Elem>(x);
      }
  }
  return out;
}

std::vector<Elem> class_minima_serial(const TableView& t) {
  // Orbit sweep: the first unvisited element is the least member of its class.
  std::vector<Elem> out(t.order);
  std::vector<bool> seen(t.order, false);
  for (std::size_t x = 0; x < t.order; ++x) {
    if (seen[x]) continue;
    for (std::size_t g = 0; g < t.order; ++g) {
      const Elem y = t.conj(static_cast<Elem>(g), static_cast<Elem>(x));
      if (!seen[y]) {
        seen[y] = true;
        out[y] = static_cast<Elem>(x);
      }
    }
  }
  return out;
}

std::vector<std::size_t> centralizer_orders(const TableView& t) {
  const auto n = static_cast<std::int64_t>(t.order);
  std::vector<std::size_t> out(t.order);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) {
    std::size_t count = 0;
    for (std::size_t g = 0; g < t.order; ++g)
      if (t.product(static_cast<Elem>(g), static_cast<Elem>(x)) == t.product(static_cast<Elem>(x), static_cast<Elem>(g)))
        ++count;
    out[x] = count;
  }
  return out;
}

std::vector<std::size_t> centralizer_orders_serial(const TableView& t) {
  std::vector<std::size_t> out(t.order, 0);
  for (std::size_t x = 0; x < t.order; ++x)
    for (std::size_t g = 0; g < t.order; ++g)
      if (t.product(static_cast<Elem>(g), static_cast<Elem>(x)) == t.product(static_cast<Elem>(x), static_cast<Elem>(g)))
        ++out[x];
  return out;
}

std::size_t commuting_pairs(const TableView& t) {
  const auto n = static_cast<std::int64_t>(t.order);
  std::size_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < t.order; ++g)
      if (t.product(static_cast<Elem>(g), static_cast<Elem>(x)) == t.product(static_cast<Elem>(x), static_cast<Elem>(g)))
        ++total;
  return total;
}

std::size_t commuting_pairs_serial(const TableView& t) {
  const auto orders = centralizer_orders_serial(t);
  std::size_t total = 0;
  for (auto c : orders) total += c;
  return total;
}

namespace {

// Tuples (x_1..x_n) drawn from `pool` that pairwise commute.
std::size_t count_tuples(const TableView& t, const std::vector<Elem>& pool, std::size_t n) {
  if (n == 0) return 1;
  std::size_t total = 0;
  std::vector<Elem> next;
  for (Elem x : pool) {
    next.clear();
    for (Elem y : pool)
      if (t.product(x, y) == t.product(y, x)) next.push_back(y);
    total += count_tuples(t, next, n - 1);
  }
  return total;
}

}  // namespace

std::size_t commuting_tuples(const TableView& t, std::size_t n) {
  if (n == 0) return 1;
  std::vector<Elem> all(t.order);
  for (std::size_t i = 0; i < t.order; ++i) all[i] = static_cast<Elem>(i);
  const auto size = static_cast<std::int64_t>(t.order);
  std::size_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 4)
  for (std::int64_t x = 0; x < size; ++x) {
    std::vector<Elem> cent;
    for (Elem y : all)
      if (t.product(static_cast<Elem>(x), y) == t.product(y, static_cast<Elem>(x))) cent.push_back(y);
    total += count_tuples(t, cent, n - 1);
  }
  return total;
}

std::size_t commuting_tuples_serial(const TableView& t, std::size_t n) {
  std::vector<Elem> all(t.order);
  for (std::size_t i = 0; i < t.order; ++i) all[i] = static_cast<Elem>(i);
  return count_tuples(t, all, n);
}

std::vector<Cyclotomic> induce_sums(const TableView& g, std::span<const Elem> at,
                                    std::span<const std::uint8_t> in_subgroup,
                                    std::span<const Cyclotomic> values_on_ambient, std::size_t subgroup_order) {
  const auto n = static_cast<std::int64_t>(at.size());
  std::vector<Cyclotomic> out(at.size());
  const Rational scale(1, static_cast<long>(subgroup_order));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    Cyclotomic sum;
    for (std::size_t s = 0; s < g.order; ++s) {
      const Elem y = g.conj(g.inverse[s], at[i]);  // s^-1 x s
      if (in_subgroup[y]) sum += values_on_ambient[y];
    }
    out[i] = sum * scale;
  }
  return out;
}

std::vector<Cyclotomic> induce_sums_serial(const TableView& g, std::span<const Elem> at,
                                           std::span<const std::uint8_t> in_subgroup,
                                           std::span<const Cyclotomic> values_on_ambient,
                                           std::size_t subgroup_order) {
  std::vector<Cyclotomic> out;
  out.reserve(at.size());
  for (Elem x : at) {
    Cyclotomic sum;
    for (std::size_t s = 0; s < g.order; ++s) {
      const Elem y = g.product(g.product(g.inverse[s], x), static_cast<Elem>(s));
      if (in_subgroup[y]) sum += values_on_ambient[y];
    }
    out.push_back(sum * Rational(1, static_cast<long>(subgroup_order)));
  }
  return out;
}

}  // namespace tatek::kernels
