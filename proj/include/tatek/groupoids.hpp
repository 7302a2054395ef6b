// Finite groupoids and the constructions built on them: translation
// groupoids, inertia, power maps, root groupoids, symmetric powers, the
// long-cycle groupoids Phi_k, fibred products, and an equivalence checker.
//
// Storage model. A finite groupoid is determined up to isomorphism by its
// connected components, each with a vertex group V. FinGroupoid stores
// exactly that: arrow x -> y of a component is the coordinate triple
// (x, y, v) with v in V, and (y, z, w) o (x, y, v) = (x, z, w v). Every
// construction is first described by a "native" presentation (objects and
// arrows in the construction's own terms) and then converted to coordinates
// by present(), which keeps the codec so functors can be written natively.
#pragma once

#include "tatek/exactnum.hpp"
#include "tatek/groups.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tatek {

class GroupoidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  std::size_t src = 0;
  std::size_t tgt = 0;
  Elem elem = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class FinGroupoid {
 public:
  struct Component {
    std::size_t rep = 0;  // least object index in the component
    GroupPtr vertex;
    std::vector<std::size_t> objects;
  };

  FinGroupoid() = default;
  /// Objects 0..n-1 with component labels (any values, renumbered by least
  /// object) and the vertex group of each label.
  FinGroupoid(const std::vector<std::size_t>& component_labels, const std::map<std::size_t, GroupPtr>& vertex_groups);

  /// Builds a groupoid from an explicit arrow list and composition table
  /// (compose[g * arrows + f] = g o f, or SIZE_MAX when tgt(f) != src(g)).
  /// Validates category axioms and invertibility.
  static FinGroupoid from_table(std::size_t objects, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                                const std::vector<std::size_t>& compose);

  std::size_t object_count() const { return comp_of_.size(); }
  std::size_t component_count() const { return comps_.size(); }
  std::size_t component_of(std::size_t x) const { return comp_of_[x]; }
  const Component& component(std::size_t c) const { return comps_[c]; }
  const FinGroup& vertex_group(std::size_t x) const { return *comps_[comp_of_[x]].vertex; }
  std::size_t automorphism_order(std::size_t x) const { return vertex_group(x).order(); }

  Arrow identity(std::size_t x) const { return {x, x, 0}; }
  Arrow compose(const Arrow& g, const Arrow& f) const;  // g o f
  Arrow inverse(const Arrow& f) const;
  Arrow power(const Arrow& loop, long k) const;
  std::size_t hom_size(std::size_t x, std::size_t y) const;
  std::vector<Arrow> hom(std::size_t x, std::size_t y) const;
  std::size_t arrow_count() const;
  bool is_valid(const Arrow& a) const;

  /// sum over iso classes of 1/|Aut|
  Rational cardinality() const;

 private:
  std::vector<std::size_t> comp_of_;
  std::vector<Component> comps_;
};

using GpdPtr = std::shared_ptr<const FinGroupoid>;

/// A natural automorphism of the identity functor: one automorphism per object.
struct CenterElement {
  std::vector<Arrow> assignment;

  /// Naturality, i.e. each value lies in the center of its vertex group and
  /// is the same coordinate on every object of a component.
  bool is_natural(const FinGroupoid& g) const;
  /// The central vertex-group element of component c.
  Elem value_on_component(const FinGroupoid& g, std::size_t c) const;
  CenterElement power(const FinGroupoid& g, long k) const;
  std::size_t order(const FinGroupoid& g) const;
};

/// Functor stored by its values on a skeleton: object map, the image of a
/// chosen arrow rep(c) -> x for every x, and the homomorphism on vertex
/// groups. These determine the image of every arrow.
class GroupoidFunctor {
 public:
  GroupoidFunctor() = default;
  GroupoidFunctor(GpdPtr source, GpdPtr target, std::vector<std::size_t> object_map,
                  std::vector<Arrow> transport_images, std::vector<std::vector<Arrow>> vertex_images);

  static GroupoidFunctor identity(const GpdPtr& g);

  const GpdPtr& source() const { return source_; }
  const GpdPtr& target() const { return target_; }
  std::size_t map_object(std::size_t x) const { return object_map_[x]; }
  Arrow map_arrow(const Arrow& a) const;

  /// Checks endpoints, identities and composition on the skeleton data.
  void validate() const;

  friend GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f);  // g o f

 private:
  GpdPtr source_, target_;
  std::vector<std::size_t> object_map_;
  std::vector<Arrow> transport_images_;
  std::vector<std::vector<Arrow>> vertex_images_;
};

GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f);

// ---------------------------------------------------------------------------
// Native presentations.
//
// A Native type provides:
//   using NArrow, Key (ordered);
//   size_t object_count() const;
//   size_t source(const NArrow&) const; size_t target(const NArrow&) const;
//   std::vector<NArrow> neighbors(size_t) const;  // arrows out, generating connectivity
//   std::vector<NArrow> loops(size_t) const;      // every automorphism, each once
//   NArrow compose(const NArrow& g, const NArrow& f) const;  // g o f
//   NArrow inverse(const NArrow&) const;
//   NArrow identity(size_t) const;
//   Key key(const NArrow& loop) const;            // injective on loops at one object
// ---------------------------------------------------------------------------

template <class N>
struct Presented {
  using NArrow = typename N::NArrow;
  using Key = typename N::Key;

  N native;
  GpdPtr gpd;
  std::vector<std::size_t> native_object;          // groupoid object -> native object
  std::vector<std::int64_t> groupoid_object;       // native object -> groupoid object or -1
  std::vector<NArrow> transport;                   // per object: rep -> object
  std::vector<std::vector<NArrow>> vertex_native;  // per component: loops at rep, by element
  std::vector<std::map<Key, Elem>> vertex_index;

  std::size_t object_of(std::size_t native_obj) const {
    const auto v = groupoid_object.at(native_obj);
    if (v < 0) throw GroupoidError("native object is outside the presented groupoid");
    return static_cast<std::size_t>(v);
  }

  Arrow encode(const NArrow& a) const {
    const std::size_t s = object_of(native.source(a)), t = object_of(native.target(a));
    const std::size_t c = gpd->component_of(s);
    if (gpd->component_of(t) != c) throw GroupoidError("encode: arrow joins different components");
    const NArrow loop = native.compose(native.inverse(transport[t]), native.compose(a, transport[s]));
    const auto it = vertex_index[c].find(native.key(loop));
    if (it == vertex_index[c].end()) throw GroupoidError("encode: loop not found in vertex group");
    return {s, t, it->second};
  }

  NArrow decode(const Arrow& a) const {
    const std::size_t c = gpd->component_of(a.src);
    return native.compose(transport[a.tgt], native.compose(vertex_native[c][a.elem], native.inverse(transport[a.src])));
  }
};

/// Converts a native presentation to coordinates. If `subset` is given (sorted
/// native object indices), the result is the full subgroupoid on it.
template <class N>
Presented<N> present(N native, std::optional<std::vector<std::size_t>> subset = std::nullopt) {
  using NArrow = typename N::NArrow;
  Presented<N> p{std::move(native), nullptr, {}, {}, {}, {}, {}};
  const N& nat = p.native;
  const std::size_t total = nat.object_count();
  std::vector<std::size_t> objs;
  if (subset) {
    objs = *subset;
  } else {
    objs.resize(total);
    for (std::size_t i = 0; i < total; ++i) objs[i] = i;
  }
  p.native_object = objs;
  p.groupoid_object.assign(total, -1);
  for (std::size_t i = 0; i < objs.size(); ++i) p.groupoid_object[objs[i]] = static_cast<std::int64_t>(i);

  std::vector<std::size_t> labels(objs.size(), SIZE_MAX);
  std::map<std::size_t, GroupPtr> groups;
  p.transport.resize(objs.size(), nat.identity(objs.empty() ? 0 : objs[0]));
  std::vector<std::int64_t> visited_by(total, -1);
  std::vector<std::optional<NArrow>> ambient_transport(total);
  std::size_t comp = 0;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (labels[i] != SIZE_MAX) continue;
    const std::size_t rep = objs[i];
    if (visited_by[rep] >= 0) throw GroupoidError("present: inconsistent connectivity");
    std::deque<std::size_t> queue{rep};
    visited_by[rep] = static_cast<std::int64_t>(comp);
    ambient_transport[rep] = nat.identity(rep);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      const auto gi = p.groupoid_object[x];
      if (gi >= 0) {
        labels[gi] = comp;
        p.transport[gi] = *ambient_transport[x];
      }
      for (const NArrow& a : nat.neighbors(x)) {
        const std::size_t y = nat.target(a);
        if (visited_by[y] >= 0) continue;
        visited_by[y] = static_cast<std::int64_t>(comp);
        ambient_transport[y] = nat.compose(a, *ambient_transport[x]);
        queue.push_back(y);
      }
    }
    // Vertex group at rep.
    std::vector<NArrow> loops = nat.loops(rep);
    const NArrow id = nat.identity(rep);
    const auto id_key = nat.key(id);
    auto id_it = std::find_if(loops.begin(), loops.end(), [&](const NArrow& l) { return nat.key(l) == id_key; });
    if (id_it == loops.end()) throw GroupoidError("present: identity missing from loops");
    std::iter_swap(loops.begin(), id_it);
    std::map<typename N::Key, Elem> index;
    for (std::size_t e = 0; e < loops.size(); ++e)
      if (!index.emplace(nat.key(loops[e]), static_cast<Elem>(e)).second)
        throw GroupoidError("present: duplicate loop");
    const std::size_t m = loops.size();
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const auto it = index.find(nat.key(nat.compose(loops[a], loops[b])));
        if (it == index.end()) throw GroupoidError("present: loops not closed under composition");
        table[a * m + b] = it->second;
      }
    groups[comp] = GroupBuilder::trusted(m, std::move(table), {});
    p.vertex_native.push_back(std::move(loops));
    p.vertex_index.push_back(std::move(index));
    ++comp;
  }
  p.gpd = std::make_shared<const FinGroupoid>(labels, groups);
  return p;
}

/// Builds the functor with native object and arrow maps between two presentations.
template <class A, class B, class ObjFn, class ArrowFn>
GroupoidFunctor make_functor(const Presented<A>& src, const Presented<B>& tgt, ObjFn obj_fn, ArrowFn arrow_fn) {
  const FinGroupoid& g = *src.gpd;
  std::vector<std::size_t> object_map(g.object_count());
  std::vector<Arrow> transports(g.object_count());
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    object_map[x] = tgt.object_of(obj_fn(src.native_object[x]));
    transports[x] = tgt.encode(arrow_fn(src.transport[x]));
  }
  std::vector<std::vector<Arrow>> vertex(g.component_count());
  for (std::size_t c = 0; c < g.component_count(); ++c)
    for (const auto& loop : src.vertex_native[c]) vertex[c].push_back(tgt.encode(arrow_fn(loop)));
  GroupoidFunctor f(src.gpd, tgt.gpd, std::move(object_map), std::move(transports), std::move(vertex));
  f.validate();
  return f;
}

/// A coordinate groupoid viewed as its own native presentation.
struct CoordNative {
  using NArrow = Arrow;
  using Key = Elem;
  GpdPtr g;

  std::size_t object_count() const { return g->object_count(); }
  std::size_t source(const Arrow& a) const { return a.src; }
  std::size_t target(const Arrow& a) const { return a.tgt; }
  std::vector<Arrow> neighbors(std::size_t x) const;
  std::vector<Arrow> loops(std::size_t x) const;
  Arrow compose(const Arrow& a, const Arrow& b) const { return g->compose(a, b); }
  Arrow inverse(const Arrow& a) const { return g->inverse(a); }
  Arrow identity(std::size_t x) const { return g->identity(x); }
  Key key(const Arrow& a) const { return a.elem; }
};

Presented<CoordNative> present_coordinates(const GpdPtr& g);

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

/// M//G for an action table act[g * m_count + m] = g.m. Native arrow (m, g): m -> g.m.
struct TranslationNative {
  struct NArrow {
    std::size_t src;
    Elem g;
  };
  using Key = Elem;
  GroupPtr group;
  std::size_t set_size = 0;
  std::vector<std::size_t> action;

  std::size_t object_count() const { return set_size; }
  std::size_t source(const NArrow& a) const { return a.src; }
  std::size_t target(const NArrow& a) const { return action[std::size_t{a.g} * set_size + a.src]; }
  std::vector<NArrow> neighbors(std::size_t m) const;
  std::vector<NArrow> loops(std::size_t m) const;
  NArrow compose(const NArrow& g, const NArrow& f) const { return {f.src, group->mul(g.g, f.g)}; }
  NArrow inverse(const NArrow& f) const { return {target(f), group->inv(f.g)}; }
  NArrow identity(std::size_t m) const { return {m, 0}; }
  Key key(const NArrow& a) const { return a.g; }
};

/// Throws GroupoidError if `action` violates the action axioms.
Presented<TranslationNative> translation_groupoid(const GroupPtr& g, std::size_t set_size,
                                                  std::vector<std::size_t> action);
/// pt//G
Presented<TranslationNative> point_quotient(const GroupPtr& g);

/// Inertia groupoid of a coordinate groupoid X: objects (x, a), a in Aut(x),
/// numbered offset(x) + a; native arrow (src object, arrow h of X).
struct InertiaNative {
  struct NArrow {
    std::size_t src;
    Arrow h;
  };
  using Key = Elem;
  GpdPtr base;
  std::vector<std::size_t> offset;  // per base object

  InertiaNative() = default;
  explicit InertiaNative(GpdPtr x);
  std::size_t object_count() const { return offset.empty() ? 0 : offset.back(); }
  std::size_t object(std::size_t x, Elem a) const { return offset[x] + a; }
  std::size_t base_object(std::size_t obj) const;
  Elem automorphism(std::size_t obj) const { return static_cast<Elem>(obj - offset[base_object(obj)]); }

  std::size_t source(const NArrow& a) const { return a.src; }
  std::size_t target(const NArrow& a) const;
  std::vector<NArrow> neighbors(std::size_t obj) const;
  std::vector<NArrow> loops(std::size_t obj) const;
  NArrow compose(const NArrow& g, const NArrow& f) const { return {f.src, base->compose(g.h, f.h)}; }
  NArrow inverse(const NArrow& f) const { return {target(f), base->inverse(f.h)}; }
  NArrow identity(std::size_t obj) const;
  Key key(const NArrow& a) const { return a.h.elem; }
};

struct Inertia {
  Presented<InertiaNative> presented;
  CenterElement xi;  // xi^1: (x, a) -> a
};

Inertia inertia(const GpdPtr& x);

/// Lambda(f): Lambda(X) -> Lambda(Y).
GroupoidFunctor inertia_functor(const Inertia& source, const Inertia& target, const GroupoidFunctor& f);

/// k-th power map (Lambda X, xi^k) -> (Lambda X, xi^1): (x, a) -> (x, a^k), h -> h.
GroupoidFunctor power_map(const Inertia& lx, long k);

/// Checks Pi^k o xi^k = xi^1 o Pi^k on every object.
bool power_map_compatible(const Inertia& lx, const GroupoidFunctor& pk, long k);

/// X[xi^{1/k}]: same objects, every vertex group V replaced by the central
/// root extension (V x Z)/<(z^-1, k)>. Arrow coordinates are j*|V| + v for the
/// pair (v, j).
struct RootGroupoid {
  GpdPtr gpd;
  std::vector<RootExtension> extensions;  // per component
  CenterElement phi;
  std::size_t k = 1;
};

RootGroupoid root_groupoid(const GpdPtr& x, const CenterElement& xi, std::size_t k);

/// Tuples (x_1..x_r) of objects of X with sum of deg(x_i) in [min_total,
/// max_total] and arrows (sigma; g_1..g_r), g_i: x_i -> y_{sigma(i)}. With
/// deg = 1 and min = max = n this is the symmetric power S_n X.
struct SymmetricNative {
  struct NArrow {
    std::size_t src;
    Permutation sigma;
    std::vector<Arrow> g;
  };
  using Key = std::vector<std::uint64_t>;
  GpdPtr base;
  std::vector<std::size_t> degree;  // per base object, >= 1
  std::vector<std::vector<std::size_t>> tuples;
  std::map<std::vector<std::size_t>, std::size_t> tuple_index;

  SymmetricNative() = default;
  SymmetricNative(GpdPtr x, std::vector<std::size_t> deg, std::size_t min_total, std::size_t max_total,
                  std::size_t cap);

  std::size_t object_count() const { return tuples.size(); }
  std::size_t object_of(const std::vector<std::size_t>& t) const;
  std::size_t source(const NArrow& a) const { return a.src; }
  std::size_t target(const NArrow& a) const;
  std::vector<NArrow> neighbors(std::size_t obj) const;
  std::vector<NArrow> loops(std::size_t obj) const;
  NArrow compose(const NArrow& g, const NArrow& f) const;
  NArrow inverse(const NArrow& f) const;
  NArrow identity(std::size_t obj) const;
  Key key(const NArrow& a) const;
};

/// S_n X; n = 0 gives the one-object trivial groupoid.
Presented<SymmetricNative> symmetric_power(const GpdPtr& x, std::size_t n, std::size_t cap = default_element_cap());
/// S_0 X u ... u S_n X.
Presented<SymmetricNative> truncated_symmetric(const GpdPtr& x, std::size_t n_max,
                                               std::size_t cap = default_element_cap());

/// Phi_k(X): the full subgroupoid of Lambda(S_k X) on objects whose
/// automorphism has permutation the long cycle i -> i+1 mod k.
struct PhiGroupoid {
  std::size_t k = 1;
  GpdPtr base;
  Presented<SymmetricNative> sym;
  Inertia lambda_sym;
  Presented<InertiaNative> phi;  // restriction of lambda_sym.presented
  CenterElement varphi;

  /// (x_1..x_k) and (g_1..g_k), g_i: x_i -> x_{i+1}, of a Phi_k object.
  std::pair<std::vector<std::size_t>, std::vector<Arrow>> cycle_data(std::size_t obj) const;
};

PhiGroupoid phi_groupoid(const GpdPtr& x, std::size_t k, std::size_t cap = default_element_cap());

/// E_k: Phi_k(X) -> Lambda(X)[xi^{1/k}] and its quasi-inverse F_k.
struct EkEquivalence {
  PhiGroupoid phi;
  Inertia lambda;
  RootGroupoid root;
  GroupoidFunctor e_k;
  GroupoidFunctor f_k;
};

EkEquivalence equivalence_e_k(const GpdPtr& x, std::size_t k, std::size_t cap = default_element_cap());

/// Q: S(Phi(X)) -> Lambda(S(X)) truncated at total degree n_max.
struct QEquivalence {
  std::size_t n_max = 0;
  std::vector<PhiGroupoid> phis;  // Phi_1..Phi_{n_max}
  GpdPtr phi_union;
  std::vector<std::size_t> phi_degree;  // per object of phi_union
  Presented<SymmetricNative> sym_phi;
  Presented<SymmetricNative> sym_x;
  Inertia lambda_sym_x;
  GroupoidFunctor q;
  /// Q S(varphi) = xi^1 Q on every object.
  bool intertwines_center = false;
};

QEquivalence equivalence_q(const GpdPtr& x, std::size_t n_max, std::size_t cap = default_element_cap());

/// X x_Z Y for u: X -> Z and a: Y -> Z. Objects (x, y, g: u(x) -> a(y));
/// arrows (h, k) with g' u(h) = a(k) g.
struct FibredNative {
  struct NArrow {
    std::size_t src;
    Arrow h;
    Arrow k;
  };
  using Key = std::pair<Elem, Elem>;
  GroupoidFunctor u, a;
  struct Obj {
    std::size_t x, y;
    Arrow g;
  };
  std::vector<Obj> objs;
  std::map<std::tuple<std::size_t, std::size_t, Elem>, std::size_t> index;

  FibredNative() = default;
  FibredNative(GroupoidFunctor u_, GroupoidFunctor a_);
  std::size_t object_count() const { return objs.size(); }
  std::size_t object_of(std::size_t x, std::size_t y, const Arrow& g) const;
  std::size_t source(const NArrow& f) const { return f.src; }
  std::size_t target(const NArrow& f) const;
  std::vector<NArrow> neighbors(std::size_t obj) const;
  std::vector<NArrow> loops(std::size_t obj) const;
  NArrow compose(const NArrow& g, const NArrow& f) const;
  NArrow inverse(const NArrow& f) const;
  NArrow identity(std::size_t obj) const;
  Key key(const NArrow& f) const { return {f.h.elem, f.k.elem}; }
};

struct FibredSquare {
  GroupoidFunctor u, a;          // X -> Z, Y -> Z
  Presented<FibredNative> product;
  GroupoidFunctor b, v;          // product -> X, product -> Y
};

FibredSquare fibred_product(const GroupoidFunctor& u, const GroupoidFunctor& a);

/// Canonical comparison Lambda(X x_Z Y) -> Lambda X x_{Lambda Z} Lambda Y.
struct InertiaFibreComparison {
  Inertia lambda_product;
  FibredSquare lambda_square;
  GroupoidFunctor comparison;
};

InertiaFibreComparison inertia_fibre_comparison(const FibredSquare& sq);

struct EquivalenceCertificate {
  bool equivalence = false;
  bool essentially_surjective = false;
  bool fully_faithful = false;
  /// source component -> target component of its image
  std::vector<std::size_t> class_matching;
  /// number of (object, object) pairs whose hom-set map was checked directly
  std::size_t hom_pairs_checked = 0;
  bool exhaustive = false;
  Rational source_cardinality;
  Rational target_cardinality;
  std::string failure;
};

/// Decides whether f is an equivalence. Full faithfulness is decided on the
/// skeleton (vertex-group isomorphisms plus injectivity on components); when
/// the groupoids are small every hom-set map is additionally checked.
EquivalenceCertificate equivalence_check(const GroupoidFunctor& f, std::size_t exhaustive_limit = 200000);

/// Disjoint union of coordinate groupoids; object offsets returned alongside.
std::pair<GpdPtr, std::vector<std::size_t>> disjoint_union(const std::vector<GpdPtr>& parts);

/// Functor between pt//H and pt//G induced by a subgroup inclusion.
GroupoidFunctor subgroup_inclusion(const Presented<TranslationNative>& h_pt, const Presented<TranslationNative>& g_pt,
                                   const Subgroup& h);

}  // namespace tatek
