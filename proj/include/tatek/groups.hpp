// Explicit finite groups given by multiplication tables, with conjugacy
// classes, centralizers, wreath products and central-root extensions.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatek {

using Elem = std::uint32_t;
using Permutation = std::vector<Elem>;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Enumeration cap for constructed groups and groupoids: 20000 unless the
/// TATE_ELEMENT_CAP environment variable holds a positive integer.
std::size_t default_element_cap();

/// Finite group on elements 0..order()-1, element 0 the identity.
///
/// Conjugacy classes are computed on construction. Class representatives are
/// the least element index of each class and classes are numbered in order of
/// their representatives, so class 0 is always {identity}.
class FinGroup {
 public:
  /// Validates the table (identity, Latin square, associativity).
  static FinGroup from_table(std::size_t order, std::vector<Elem> table, std::string name = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }
  Elem pow(Elem a, long k) const;
  std::size_t element_order(Elem a) const { return element_order_[a]; }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  bool is_central(Elem a) const;

  std::size_t class_count() const { return class_reps_.size(); }
  std::size_t class_of(Elem a) const { return class_of_[a]; }
  Elem class_rep(std::size_t c) const { return class_reps_[c]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
  std::size_t centralizer_order(std::size_t c) const { return order_ / class_sizes_[c]; }
  /// Class of rep(c)^k.
  std::size_t power_class(std::size_t c, long k) const { return class_of(pow(class_rep(c), k)); }
  std::vector<Elem> class_elements(std::size_t c) const;

  std::span<const Elem> table() const { return table_; }
  const std::string& name() const { return name_; }

  /// Permutation realization, present for groups built from generators.
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Permutation of element a, or empty if the group has no permutation realization.
  const Permutation& permutation(Elem a) const;

 private:
  friend class GroupBuilder;
  FinGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::size_t> class_of_;
  std::vector<Elem> class_reps_;
  std::vector<std::size_t> class_sizes_;
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

/// Internal constructor path for tables that are groups by construction.
class GroupBuilder {
 public:
  static GroupPtr trusted(std::size_t order, std::vector<Elem> table, std::string name);
  static GroupPtr with_permutations(std::vector<Permutation> sorted_elements, std::vector<Elem> table,
                                    std::size_t degree, std::vector<Permutation> generators, std::string name);
};

/// A subgroup with its own indexing. Local element i corresponds to ambient
/// element to_ambient[i]; local order follows ambient order, so local 0 is
/// the identity.
struct Subgroup {
  GroupPtr ambient;
  GroupPtr group;
  std::vector<Elem> to_ambient;
  std::vector<std::int64_t> from_ambient;  // -1 for non-members

  bool contains(Elem ambient_elem) const { return from_ambient[ambient_elem] >= 0; }
  Elem local(Elem ambient_elem) const;
};

/// Throws GroupError unless `elements` is closed under multiplication.
Subgroup make_subgroup(const GroupPtr& g, std::vector<Elem> elements);
Subgroup centralizer(const GroupPtr& g, Elem x);
/// The whole group viewed as a subgroup of itself.
Subgroup whole_group(const GroupPtr& g);

struct ConjugacyData {
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> representatives;
  std::vector<Subgroup> centralizers;
};

ConjugacyData conjugacy_data(const GroupPtr& g);

/// Closure of permutation generators on {0..degree-1}. Elements are indexed
/// in lexicographic order of their image lists; products compose right to
/// left, (a*b)(i) = a(b(i)).
GroupPtr group_from_generators(std::size_t degree, const std::vector<Permutation>& generators,
                               std::size_t cap = default_element_cap(), std::string name = {});

GroupPtr trivial_group();
GroupPtr cyclic_group(std::size_t n);
GroupPtr symmetric_group(std::size_t n);

/// All permutations of {0..n-1} in lexicographic order; index 0 is the identity.
std::vector<Permutation> all_permutations(std::size_t n);

/// Wreath product G wr S_n. Element (sigma; g_0..g_{n-1}) has index
/// perm_index(sigma) * |G|^n + sum_i g_i |G|^i and multiplies as
/// (tau; h) * (sigma; g) = (tau sigma; (h_{sigma(i)} g_i)_i),
/// the arrow composition of the symmetric power of pt//G.
struct WreathProduct {
  GroupPtr group;
  GroupPtr base;
  std::size_t n = 0;
  std::vector<Permutation> perms;

  Elem encode(std::size_t perm_index, std::span<const Elem> gs) const;
  std::size_t perm_index(Elem x) const;
  std::vector<Elem> components(Elem x) const;
  const Permutation& perm(Elem x) const { return perms[perm_index(x)]; }
};

WreathProduct wreath_product(const GroupPtr& g, std::size_t n, std::size_t cap = default_element_cap());

/// (G x Z) / <(z^-1, k)> realized on pairs (g, j), j < k, index j*|G| + g.
struct RootExtension {
  GroupPtr group;
  GroupPtr base;
  std::size_t k = 1;
  Elem z = 0;
  Elem phi = 0;

  Elem encode(Elem g, std::size_t j) const { return static_cast<Elem>(j * base->order() + g); }
  Elem base_part(Elem x) const { return static_cast<Elem>(x % base->order()); }
  std::size_t root_part(Elem x) const { return x / base->order(); }
};

RootExtension adjoin_central_root(const GroupPtr& g, Elem z, std::size_t k,
                                  std::size_t cap = default_element_cap());

}  // namespace tatek
