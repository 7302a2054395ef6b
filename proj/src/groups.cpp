#include "tatek/groups.hpp"

#include "tatek/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tatek {

std::size_t default_element_cap() {
  if (const char* env = std::getenv("TATE_ELEMENT_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw CapExceeded(what + ": " + std::to_string(order) + " elements exceeds cap " + std::to_string(cap));
}

// Smallest set S (greedy) generating the group, using an already valid Latin
// square with identity 0.
std::vector<Elem> greedy_generators(std::size_t n, const std::vector<Elem>& table) {
  std::vector<Elem> gens;
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<Elem> members{0};
  for (std::size_t x = 0; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(static_cast<Elem>(x));
    // Close under right multiplication by all generators.
    std::deque<Elem> queue(members.begin(), members.end());
    while (!queue.empty()) {
      const Elem a = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        const Elem b = table[std::size_t{a} * n + s];
        if (!in[b]) {
          in[b] = true;
          members.push_back(b);
          queue.push_back(b);
        }
      }
    }
  }
  return gens;
}

}  // namespace

FinGroup FinGroup::from_table(std::size_t order, std::vector<Elem> table, std::string name) {
  if (order == 0) throw GroupError("group must have at least one element");
  if (table.size() != order * order) throw GroupError("multiplication table has wrong size");
  for (Elem v : table)
    if (v >= order) throw GroupError("multiplication table entry out of range");
  for (std::size_t x = 0; x < order; ++x) {
    if (table[x] != x || table[x * order] != x) throw GroupError("element 0 is not a two-sided identity");
  }
  std::vector<bool> seen(order);
  for (std::size_t r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < order; ++c) {
      if (seen[table[r * order + c]]) throw GroupError("multiplication table row is not a permutation");
      seen[table[r * order + c]] = true;
    }
  }
  for (std::size_t c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < order; ++r) {
      if (seen[table[r * order + c]]) throw GroupError("multiplication table column is not a permutation");
      seen[table[r * order + c]] = true;
    }
  }
  // Light's associativity test against a generating set.
  const auto gens = greedy_generators(order, table);
  for (Elem s : gens)
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y) {
        const Elem xs = table[x * order + s];
        const Elem sy = table[std::size_t{s} * order + y];
        if (table[std::size_t{xs} * order + y] != table[x * order + sy])
          throw GroupError("multiplication table is not associative");
      }
  FinGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

void FinGroup::finish() {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
  element_order_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t k = 1;
    Elem p = static_cast<Elem>(a);
    while (p != 0) {
      p = mul(p, static_cast<Elem>(a));
      ++k;
    }
    element_order_[a] = k;
  }
  const kernels::TableView view{order_, table_, inverse_};
  const auto minima = kernels::class_minima(view);
  class_of_.assign(order_, 0);
  class_reps_.clear();
  class_sizes_.clear();
  std::vector<std::size_t> class_index(order_, SIZE_MAX);
  for (std::size_t x = 0; x < order_; ++x) {
    const Elem m = minima[x];
    if (class_index[m] == SIZE_MAX) {
      class_index[m] = class_reps_.size();
      class_reps_.push_back(m);
      class_sizes_.push_back(0);
    }
    class_of_[x] = class_index[m];
    ++class_sizes_[class_index[m]];
  }
}

Elem FinGroup::pow(Elem a, long k) const {
  const long n = static_cast<long>(element_order_[a]);
  long e = ((k % n) + n) % n;
  Elem result = 0, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool FinGroup::is_central(Elem a) const { return class_sizes_[class_of_[a]] == 1; }

std::vector<Elem> FinGroup::class_elements(std::size_t c) const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < order_; ++x)
    if (class_of_[x] == c) out.push_back(static_cast<Elem>(x));
  return out;
}

const Permutation& FinGroup::permutation(Elem a) const {
  static const Permutation empty;
  return perms_.empty() ? empty : perms_[a];
}

GroupPtr GroupBuilder::trusted(std::size_t order, std::vector<Elem> table, std::string name) {
  FinGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.finish();
  return std::make_shared<const FinGroup>(std::move(g));
}

GroupPtr GroupBuilder::with_permutations(std::vector<Permutation> sorted_elements, std::vector<Elem> table,
                                         std::size_t degree, std::vector<Permutation> generators,
                                         std::string name) {
  FinGroup g;
  g.order_ = sorted_elements.size();
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.perms_ = std::move(sorted_elements);
  g.finish();
  return std::make_shared<const FinGroup>(std::move(g));
}

Elem Subgroup::local(Elem ambient_elem) const {
  const auto v = from_ambient[ambient_elem];
  if (v < 0) throw GroupError("element is not in the subgroup");
  return static_cast<Elem>(v);
}

Subgroup make_subgroup(const GroupPtr& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != 0) throw GroupError("subgroup must contain the identity");
  Subgroup s;
  s.ambient = g;
  s.from_ambient.assign(g->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= g->order()) throw GroupError("subgroup element out of range");
    s.from_ambient[elements[i]] = static_cast<std::int64_t>(i);
  }
  const std::size_t m = elements.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto p = s.from_ambient[g->mul(elements[i], elements[j])];
      if (p < 0) throw GroupError("element subset is not closed under multiplication");
      table[i * m + j] = static_cast<Elem>(p);
    }
  s.to_ambient = std::move(elements);
  s.group = GroupBuilder::trusted(m, std::move(table), {});
  return s;
}

Subgroup centralizer(const GroupPtr& g, Elem x) {
  std::vector<Elem> elems;
  for (std::size_t y = 0; y < g->order(); ++y)
    if (g->commute(x, static_cast<Elem>(y))) elems.push_back(static_cast<Elem>(y));
  return make_subgroup(g, std::move(elems));
}

Subgroup whole_group(const GroupPtr& g) {
  Subgroup s;
  s.ambient = g;
  s.group = g;
  s.to_ambient.resize(g->order());
  s.from_ambient.resize(g->order());
  std::iota(s.to_ambient.begin(), s.to_ambient.end(), Elem{0});
  std::iota(s.from_ambient.begin(), s.from_ambient.end(), std::int64_t{0});
  return s;
}

ConjugacyData conjugacy_data(const GroupPtr& g) {
  ConjugacyData d;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    d.classes.push_back(g->class_elements(c));
    d.representatives.push_back(g->class_rep(c));
    d.centralizers.push_back(centralizer(g, g->class_rep(c)));
  }
  return d;
}

GroupPtr group_from_generators(std::size_t degree, const std::vector<Permutation>& generators, std::size_t cap,
                               std::string name) {
  if (degree == 0) throw GroupError("degree must be positive");
  for (const auto& p : generators) {
    if (p.size() != degree) throw GroupError("generator has wrong length");
    std::vector<bool> hit(degree, false);
    for (Elem v : p) {
      if (v >= degree || hit[v]) throw GroupError("generator is not a bijection");
      hit[v] = true;
    }
  }
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), Elem{0});
  std::set<Permutation> found{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const Permutation a = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation b = compose(s, a);
      if (found.insert(b).second) {
        check_cap(found.size(), cap, "group_from_generators");
        queue.push_back(std::move(b));
      }
    }
  }
  std::vector<Permutation> elems(found.begin(), found.end());
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Elem>(i));
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  return GroupBuilder::with_permutations(std::move(elems), std::move(table), degree, generators, std::move(name));
}

GroupPtr trivial_group() { return group_from_generators(1, {}, 1, "1"); }

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>((i + 1) % n);
  return group_from_generators(n, n == 1 ? std::vector<Permutation>{} : std::vector<Permutation>{p},
                               default_element_cap(), "C" + std::to_string(n));
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0) throw GroupError("symmetric group degree must be positive");
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), Elem{0});
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Elem>((i + 1) % n);
    gens = {swap, cycle};
  }
  return group_from_generators(n, gens, default_element_cap(), "S" + std::to_string(n));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Elem WreathProduct::encode(std::size_t perm_index, std::span<const Elem> gs) const {
  const std::size_t b = base->order();
  std::size_t idx = 0, scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    idx += gs[i] * scale;
    scale *= b;
  }
  return static_cast<Elem>(perm_index * scale + idx);
}

std::size_t WreathProduct::perm_index(Elem x) const {
  std::size_t scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= base->order();
  return x / scale;
}

std::vector<Elem> WreathProduct::components(Elem x) const {
  std::vector<Elem> gs(n);
  std::size_t v = x;
  for (std::size_t i = 0; i < n; ++i) {
    gs[i] = static_cast<Elem>(v % base->order());
    v /= base->order();
  }
  return gs;
}

WreathProduct wreath_product(const GroupPtr& g, std::size_t n, std::size_t cap) {
  if (n == 0) throw GroupError("wreath product needs n >= 1");
  WreathProduct w;
  w.base = g;
  w.n = n;
  w.perms = all_permutations(n);
  std::size_t power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    power *= g->order();
    check_cap(power, cap, "wreath_product");
  }
  const std::size_t order = power * w.perms.size();
  check_cap(order, cap, "wreath_product");
  std::map<Permutation, std::size_t> perm_idx;
  for (std::size_t i = 0; i < w.perms.size(); ++i) perm_idx.emplace(w.perms[i], i);
  std::vector<Elem> table(order * order);
  std::vector<Elem> out(n);
  Permutation ts(n);
  for (std::size_t x = 0; x < order; ++x) {
    const auto& tau = w.perms[x / power];
    const auto h = w.components(static_cast<Elem>(x));
    for (std::size_t y = 0; y < order; ++y) {
      const auto& sigma = w.perms[y / power];
      const auto gs = w.components(static_cast<Elem>(y));
      for (std::size_t i = 0; i < n; ++i) {
        ts[i] = tau[sigma[i]];
        out[i] = g->mul(h[sigma[i]], gs[i]);
      }
      table[x * order + y] = w.encode(perm_idx.at(ts), out);
    }
  }
  std::string name = (g->name().empty() ? "G" : g->name()) + " wr S" + std::to_string(n);
  w.group = GroupBuilder::trusted(order, std::move(table), std::move(name));
  return w;
}

RootExtension adjoin_central_root(const GroupPtr& g, Elem z, std::size_t k, std::size_t cap) {
  if (k == 0) throw GroupError("root order must be positive");
  if (z >= g->order() || !g->is_central(z)) throw GroupError("adjoin_central_root: element is not central");
  const std::size_t n = g->order();
  const std::size_t order = n * k;
  check_cap(order, cap, "adjoin_central_root");
  std::vector<Elem> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = x / n + y / n;
      Elem prod = g->mul(static_cast<Elem>(x % n), static_cast<Elem>(y % n));
      if (j >= k) prod = g->mul(prod, z);
      table[x * order + y] = static_cast<Elem>((j % k) * n + prod);
    }
  RootExtension r;
  r.base = g;
  r.k = k;
  r.z = z;
  r.phi = k == 1 ? z : static_cast<Elem>(n);
  r.group = GroupBuilder::trusted(order, std::move(table), (g->name().empty() ? "G" : g->name()) + "[root" +
                                                               std::to_string(k) + "]");
  return r;
}

}  // namespace tatek
