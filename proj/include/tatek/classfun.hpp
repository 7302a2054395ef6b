// n-class functions: cyclotomic-valued functions on the isomorphism classes
// of the n-fold inertia groupoid, with restriction and weighted transfer.
#pragma once

#include "tatek/exactnum.hpp"
#include "tatek/groupoids.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tatek {

/// Lambda^n(X) with the tower Lambda^1 .. Lambda^n kept for decoding.
struct IteratedInertia {
  GpdPtr base;
  std::size_t n = 0;
  std::vector<Inertia> levels;  // levels[j] = Lambda(Lambda^j X)

  const GpdPtr& top() const { return n == 0 ? base : levels.back().presented.gpd; }
  std::size_t class_count() const { return top()->component_count(); }
  std::size_t automorphism_order(std::size_t cls) const { return top()->component(cls).vertex->order(); }

  /// An arrow of Lambda^j X pushed down to X by forgetting the loop data.
  Arrow to_base(std::size_t j, const Arrow& a) const;
  /// (x, g_1..g_n) for an object of Lambda^n X; g_i are loops at x in X.
  std::pair<std::size_t, std::vector<Arrow>> tuple(std::size_t obj) const;
  /// Component of Lambda^n X containing the tuple (x, g_1..g_n).
  std::size_t class_of_tuple(std::size_t x, const std::vector<Elem>& gs) const;
};

using IteratedInertiaPtr = std::shared_ptr<const IteratedInertia>;

IteratedInertiaPtr iterated_inertia(const GpdPtr& x, std::size_t n);

/// Lambda^n f as the list of functors at each level (index n is the top).
std::vector<GroupoidFunctor> iterated_inertia_functor(const IteratedInertia& source, const IteratedInertia& target,
                                                      const GroupoidFunctor& f);

/// Map on iso classes induced by Lambda^n f.
std::vector<std::size_t> class_map(const IteratedInertia& source, const IteratedInertia& target,
                                   const GroupoidFunctor& f);

struct NClassFunction {
  IteratedInertiaPtr domain;
  std::vector<Cyclotomic> values;  // per iso class of Lambda^n

  static NClassFunction constant(const IteratedInertiaPtr& d, const Cyclotomic& c);
  static NClassFunction indicator(const IteratedInertiaPtr& d, std::size_t cls);

  std::size_t n() const { return domain->n; }
  bool is_integral() const;

  friend NClassFunction operator+(const NClassFunction& a, const NClassFunction& b);
  friend NClassFunction operator*(const NClassFunction& a, const NClassFunction& b);
  friend bool operator==(const NClassFunction& a, const NClassFunction& b) { return a.values == b.values; }
};

/// Pullback along Lambda^n f; `source_domain` is Lambda^n of the source of f.
NClassFunction restrict(const NClassFunction& chi, const GroupoidFunctor& f, const IteratedInertiaPtr& source_domain);

struct TransferResult {
  NClassFunction value;
  bool faithful = false;
  /// Meaningful when the functor is faithful and chi is integral.
  bool integral = true;
};

/// f_!(chi)(g) = sum over classes [h] over [g] of |aut g| / |aut h| chi(h).
TransferResult transfer(const NClassFunction& chi, const GroupoidFunctor& f, const IteratedInertiaPtr& target_domain);

/// sum over classes of chi(x) psi(x) / |aut x|
Cyclotomic pairing(const NClassFunction& chi, const NClassFunction& psi);

/// True when every vertex group homomorphism of f is injective.
bool is_faithful(const GroupoidFunctor& f);

struct PushPullResult {
  bool passes = true;
  std::size_t functions_checked = 0;
  std::optional<std::string> counterexample;
};

/// Checks u^* a_! = b_! v^* on the indicator functions of the classes of Lambda^n Y.
PushPullResult push_pull_check(const FibredSquare& square, std::size_t n);

}  // namespace tatek
