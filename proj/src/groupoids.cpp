#include "tatek/groupoids.hpp"

#include <numeric>
#include <set>

namespace tatek {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinGroupoid

FinGroupoid::FinGroupoid(const std::vector<std::size_t>& labels, const std::map<std::size_t, GroupPtr>& groups) {
  comp_of_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, fresh] = renumber.emplace(labels[x], comps_.size());
    if (fresh) {
      const auto g = groups.find(labels[x]);
      if (g == groups.end() || !g->second) throw GroupoidError("missing vertex group for component");
      comps_.push_back({x, g->second, {}});
    }
    comp_of_[x] = it->second;
    comps_[it->second].objects.push_back(x);
  }
}

FinGroupoid FinGroupoid::from_table(std::size_t objects, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                                    const std::vector<std::size_t>& compose) {
  const std::size_t n = arrows.size();
  if (compose.size() != n * n) throw GroupoidError("composition table has wrong size");
  for (const auto& [s, t] : arrows)
    if (s >= objects || t >= objects) throw GroupoidError("arrow endpoint out of range");
  auto comp = [&](std::size_t g, std::size_t f) { return compose[g * n + f]; };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t h = comp(g, f);
      if (arrows[f].second != arrows[g].first) {
        if (h != SIZE_MAX) throw GroupoidError("composite defined for non-composable arrows");
        continue;
      }
      if (h >= n) throw GroupoidError("composite missing for composable arrows");
      if (arrows[h].first != arrows[f].first || arrows[h].second != arrows[g].second)
        throw GroupoidError("composite has wrong endpoints");
    }
  std::vector<std::size_t> ident(objects, SIZE_MAX);
  for (std::size_t e = 0; e < n; ++e) {
    const auto [s, t] = arrows[e];
    if (s != t || ident[s] != SIZE_MAX) continue;
    bool unit = true;
    for (std::size_t f = 0; f < n && unit; ++f) {
      if (arrows[f].second == s && comp(e, f) != f) unit = false;
      if (arrows[f].first == s && comp(f, e) != f) unit = false;
    }
    if (unit) ident[s] = e;
  }
  for (std::size_t x = 0; x < objects; ++x)
    if (ident[x] == SIZE_MAX) throw GroupoidError("object without identity");
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (arrows[h].first != arrows[g].second) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (arrows[g].first != arrows[f].second) continue;
        if (comp(comp(h, g), f) != comp(h, comp(g, f))) throw GroupoidError("composition is not associative");
      }
    }
  std::vector<std::size_t> parent(objects);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t f = 0; f < n; ++f) {
    const auto [s, t] = arrows[f];
    bool invertible = false;
    for (std::size_t g = 0; g < n && !invertible; ++g)
      if (arrows[g].first == t && arrows[g].second == s && comp(g, f) == ident[s] && comp(f, g) == ident[t])
        invertible = true;
    if (!invertible) throw GroupoidError("arrow is not invertible");
    parent[find_root(parent, s)] = find_root(parent, t);
  }
  std::vector<std::size_t> labels(objects);
  std::map<std::size_t, GroupPtr> groups;
  for (std::size_t x = 0; x < objects; ++x) {
    labels[x] = find_root(parent, x);
    if (groups.count(labels[x])) continue;
    std::vector<std::size_t> loops{ident[x]};
    for (std::size_t f = 0; f < n; ++f)
      if (f != ident[x] && arrows[f].first == x && arrows[f].second == x) loops.push_back(f);
    std::map<std::size_t, Elem> pos;
    for (std::size_t i = 0; i < loops.size(); ++i) pos[loops[i]] = static_cast<Elem>(i);
    std::vector<Elem> table(loops.size() * loops.size());
    for (std::size_t a = 0; a < loops.size(); ++a)
      for (std::size_t b = 0; b < loops.size(); ++b) table[a * loops.size() + b] = pos.at(comp(loops[a], loops[b]));
    groups[labels[x]] = std::make_shared<const FinGroup>(FinGroup::from_table(loops.size(), std::move(table)));
  }
  return FinGroupoid(labels, groups);
}

Arrow FinGroupoid::compose(const Arrow& g, const Arrow& f) const {
  if (f.tgt != g.src) throw GroupoidError("compose: arrows are not composable");
  return {f.src, g.tgt, vertex_group(f.src).mul(g.elem, f.elem)};
}

Arrow FinGroupoid::inverse(const Arrow& f) const { return {f.tgt, f.src, vertex_group(f.src).inv(f.elem)}; }

Arrow FinGroupoid::power(const Arrow& loop, long k) const {
  if (loop.src != loop.tgt) throw GroupoidError("power: arrow is not an automorphism");
  return {loop.src, loop.src, vertex_group(loop.src).pow(loop.elem, k)};
}

std::size_t FinGroupoid::hom_size(std::size_t x, std::size_t y) const {
  return comp_of_[x] == comp_of_[y] ? vertex_group(x).order() : 0;
}

std::vector<Arrow> FinGroupoid::hom(std::size_t x, std::size_t y) const {
  std::vector<Arrow> out;
  const std::size_t m = hom_size(x, y);
  for (std::size_t e = 0; e < m; ++e) out.push_back({x, y, static_cast<Elem>(e)});
  return out;
}

std::size_t FinGroupoid::arrow_count() const {
  std::size_t total = 0;
  for (const auto& c : comps_) total += c.objects.size() * c.objects.size() * c.vertex->order();
  return total;
}

bool FinGroupoid::is_valid(const Arrow& a) const {
  return a.src < object_count() && a.tgt < object_count() && comp_of_[a.src] == comp_of_[a.tgt] &&
         a.elem < vertex_group(a.src).order();
}

Rational FinGroupoid::cardinality() const {
  Rational sum;
  for (const auto& c : comps_) sum += Rational(1, static_cast<long>(c.vertex->order()));
  return sum;
}

// ---------------------------------------------------------------------------
// CenterElement

bool CenterElement::is_natural(const FinGroupoid& g) const {
  if (assignment.size() != g.object_count()) return false;
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    const Arrow& a = assignment[x];
    if (a.src != x || a.tgt != x || !g.is_valid(a)) return false;
    if (!g.vertex_group(x).is_central(a.elem)) return false;
    if (a.elem != assignment[g.component(g.component_of(x)).rep].elem) return false;
  }
  return true;
}

Elem CenterElement::value_on_component(const FinGroupoid& g, std::size_t c) const {
  return assignment.at(g.component(c).rep).elem;
}

CenterElement CenterElement::power(const FinGroupoid& g, long k) const {
  CenterElement out;
  for (const auto& a : assignment) out.assignment.push_back(g.power(a, k));
  return out;
}

std::size_t CenterElement::order(const FinGroupoid& g) const {
  std::size_t o = 1;
  for (const auto& a : assignment)
    o = static_cast<std::size_t>(lcm(static_cast<long>(o), static_cast<long>(g.vertex_group(a.src).element_order(a.elem))));
  return o;
}

// ---------------------------------------------------------------------------
// GroupoidFunctor

GroupoidFunctor::GroupoidFunctor(GpdPtr source, GpdPtr target, std::vector<std::size_t> object_map,
                                 std::vector<Arrow> transport_images, std::vector<std::vector<Arrow>> vertex_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      transport_images_(std::move(transport_images)),
      vertex_images_(std::move(vertex_images)) {}

GroupoidFunctor GroupoidFunctor::identity(const GpdPtr& g) {
  std::vector<std::size_t> obj(g->object_count());
  std::vector<Arrow> transports(g->object_count());
  std::vector<std::vector<Arrow>> vertex(g->component_count());
  for (std::size_t x = 0; x < g->object_count(); ++x) {
    obj[x] = x;
    transports[x] = {g->component(g->component_of(x)).rep, x, 0};
  }
  for (std::size_t c = 0; c < g->component_count(); ++c) {
    const std::size_t r = g->component(c).rep;
    for (std::size_t e = 0; e < g->component(c).vertex->order(); ++e) vertex[c].push_back({r, r, static_cast<Elem>(e)});
  }
  return GroupoidFunctor(g, g, std::move(obj), std::move(transports), std::move(vertex));
}

Arrow GroupoidFunctor::map_arrow(const Arrow& a) const {
  const FinGroupoid& t = *target_;
  const std::size_t c = source_->component_of(a.src);
  if (source_->component_of(a.tgt) != c) throw GroupoidError("map_arrow: invalid arrow");
  return t.compose(transport_images_[a.tgt], t.compose(vertex_images_[c].at(a.elem), t.inverse(transport_images_[a.src])));
}

void GroupoidFunctor::validate() const {
  const FinGroupoid& s = *source_;
  const FinGroupoid& t = *target_;
  if (object_map_.size() != s.object_count() || transport_images_.size() != s.object_count() ||
      vertex_images_.size() != s.component_count())
    throw GroupoidError("functor data has wrong shape");
  for (std::size_t x = 0; x < s.object_count(); ++x)
    if (object_map_[x] >= t.object_count()) throw GroupoidError("functor object image out of range");
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const auto& comp = s.component(c);
    const std::size_t fr = object_map_[comp.rep];
    const auto& img = vertex_images_[c];
    const FinGroup& v = *comp.vertex;
    if (img.size() != v.order()) throw GroupoidError("vertex image has wrong size");
    for (const auto& a : img)
      if (a.src != fr || a.tgt != fr || !t.is_valid(a)) throw GroupoidError("vertex image is not a loop at F(rep)");
    if (img[0] != t.identity(fr)) throw GroupoidError("functor does not preserve identities");
    for (std::size_t a = 0; a < v.order(); ++a)
      for (std::size_t b = 0; b < v.order(); ++b)
        if (t.compose(img[a], img[b]) != img[v.mul(static_cast<Elem>(a), static_cast<Elem>(b))])
          throw GroupoidError("functor does not preserve composition");
    for (std::size_t x : comp.objects) {
      const Arrow& tr = transport_images_[x];
      if (tr.src != fr || tr.tgt != object_map_[x] || !t.is_valid(tr))
        throw GroupoidError("transport image has wrong endpoints");
    }
    if (transport_images_[comp.rep] != t.identity(fr)) throw GroupoidError("functor does not preserve identities");
  }
}

GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f) {
  if (f.target_ != g.source_) throw GroupoidError("compose: functors are not composable");
  std::vector<std::size_t> obj(f.object_map_.size());
  std::vector<Arrow> transports(f.transport_images_.size());
  for (std::size_t x = 0; x < obj.size(); ++x) {
    obj[x] = g.map_object(f.object_map_[x]);
    transports[x] = g.map_arrow(f.transport_images_[x]);
  }
  std::vector<std::vector<Arrow>> vertex(f.vertex_images_.size());
  for (std::size_t c = 0; c < vertex.size(); ++c)
    for (const auto& a : f.vertex_images_[c]) vertex[c].push_back(g.map_arrow(a));
  return GroupoidFunctor(f.source_, g.target_, std::move(obj), std::move(transports), std::move(vertex));
}

// ---------------------------------------------------------------------------
// Coordinates as a native presentation

std::vector<Arrow> CoordNative::neighbors(std::size_t x) const {
  std::vector<Arrow> out;
  for (std::size_t y : g->component(g->component_of(x)).objects) out.push_back({x, y, 0});
  return out;
}

std::vector<Arrow> CoordNative::loops(std::size_t x) const { return g->hom(x, x); }

Presented<CoordNative> present_coordinates(const GpdPtr& g) {
  auto p = present(CoordNative{g});
  p.gpd = g;  // identical coordinates; keep the caller's object
  return p;
}

// ---------------------------------------------------------------------------
// Translation groupoids

std::vector<TranslationNative::NArrow> TranslationNative::neighbors(std::size_t m) const {
  std::vector<NArrow> out;
  for (std::size_t g = 0; g < group->order(); ++g) out.push_back({m, static_cast<Elem>(g)});
  return out;
}

std::vector<TranslationNative::NArrow> TranslationNative::loops(std::size_t m) const {
  std::vector<NArrow> out;
  for (std::size_t g = 0; g < group->order(); ++g)
    if (action[g * set_size + m] == m) out.push_back({m, static_cast<Elem>(g)});
  return out;
}

Presented<TranslationNative> translation_groupoid(const GroupPtr& g, std::size_t set_size,
                                                  std::vector<std::size_t> action) {
  const std::size_t n = g->order();
  if (action.size() != n * set_size) throw GroupoidError("action table has wrong size");
  for (std::size_t m = 0; m < set_size; ++m)
    if (action[m] != m) throw GroupoidError("identity does not act trivially");
  for (std::size_t x : action)
    if (x >= set_size) throw GroupoidError("action value out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g->mul(static_cast<Elem>(a), static_cast<Elem>(b));
      for (std::size_t m = 0; m < set_size; ++m)
        if (action[ab * set_size + m] != action[a * set_size + action[b * set_size + m]])
          throw GroupoidError("action is not compatible with multiplication");
    }
  return present(TranslationNative{g, set_size, std::move(action)});
}

Presented<TranslationNative> point_quotient(const GroupPtr& g) {
  return translation_groupoid(g, 1, std::vector<std::size_t>(g->order(), 0));
}

// ---------------------------------------------------------------------------
// Inertia

InertiaNative::InertiaNative(GpdPtr x) : base(std::move(x)) {
  offset.push_back(0);
  for (std::size_t o = 0; o < base->object_count(); ++o) offset.push_back(offset.back() + base->automorphism_order(o));
}

std::size_t InertiaNative::base_object(std::size_t obj) const {
  if (obj >= object_count()) throw GroupoidError("inertia object out of range");
  return static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), obj) - offset.begin()) - 1;
}

std::size_t InertiaNative::target(const NArrow& f) const {
  const std::size_t x = base_object(f.src);
  const Arrow loop{x, x, automorphism(f.src)};
  const Arrow conj = base->compose(f.h, base->compose(loop, base->inverse(f.h)));
  return object(f.h.tgt, conj.elem);
}

std::vector<InertiaNative::NArrow> InertiaNative::neighbors(std::size_t obj) const {
  const std::size_t x = base_object(obj);
  std::vector<NArrow> out;
  for (std::size_t y : base->component(base->component_of(x)).objects) out.push_back({obj, {x, y, 0}});
  for (const auto& s : base->hom(x, x)) out.push_back({obj, s});
  return out;
}

std::vector<InertiaNative::NArrow> InertiaNative::loops(std::size_t obj) const {
  const std::size_t x = base_object(obj);
  const Elem a = automorphism(obj);
  const FinGroup& v = base->vertex_group(x);
  std::vector<NArrow> out;
  for (std::size_t s = 0; s < v.order(); ++s)
    if (v.commute(static_cast<Elem>(s), a)) out.push_back({obj, {x, x, static_cast<Elem>(s)}});
  return out;
}

InertiaNative::NArrow InertiaNative::identity(std::size_t obj) const {
  const std::size_t x = base_object(obj);
  return {obj, base->identity(x)};
}

Inertia inertia(const GpdPtr& x) {
  Inertia out{present(InertiaNative(x)), {}};
  const auto& nat = out.presented.native;
  for (std::size_t o = 0; o < out.presented.gpd->object_count(); ++o) {
    const std::size_t n = out.presented.native_object[o];
    const std::size_t b = nat.base_object(n);
    out.xi.assignment.push_back(out.presented.encode({n, {b, b, nat.automorphism(n)}}));
  }
  return out;
}

GroupoidFunctor inertia_functor(const Inertia& source, const Inertia& target, const GroupoidFunctor& f) {
  if (f.source() != source.presented.native.base || f.target() != target.presented.native.base)
    throw GroupoidError("inertia_functor: functor does not match the inertia groupoids");
  const auto& sn = source.presented.native;
  const auto& tn = target.presented.native;
  auto obj_fn = [&](std::size_t o) {
    const std::size_t x = sn.base_object(o);
    const Arrow img = f.map_arrow({x, x, sn.automorphism(o)});
    return tn.object(img.src, img.elem);
  };
  return make_functor(source.presented, target.presented, obj_fn,
                      [&](const InertiaNative::NArrow& a) -> InertiaNative::NArrow {
                        return {obj_fn(a.src), f.map_arrow(a.h)};
                      });
}

GroupoidFunctor power_map(const Inertia& lx, long k) {
  const auto& nat = lx.presented.native;
  auto obj_fn = [&](std::size_t o) {
    const std::size_t x = nat.base_object(o);
    return nat.object(x, nat.base->vertex_group(x).pow(nat.automorphism(o), k));
  };
  return make_functor(lx.presented, lx.presented, obj_fn,
                      [&](const InertiaNative::NArrow& a) -> InertiaNative::NArrow { return {obj_fn(a.src), a.h}; });
}

bool power_map_compatible(const Inertia& lx, const GroupoidFunctor& pk, long k) {
  const auto xik = lx.xi.power(*lx.presented.gpd, k);
  for (std::size_t o = 0; o < lx.presented.gpd->object_count(); ++o)
    if (pk.map_arrow(xik.assignment[o]) != lx.xi.assignment[pk.map_object(o)]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Root groupoids

RootGroupoid root_groupoid(const GpdPtr& x, const CenterElement& xi, std::size_t k) {
  if (k == 0) throw GroupoidError("root degree must be positive");
  if (!xi.is_natural(*x)) throw GroupoidError("root_groupoid: xi is not a center element");
  RootGroupoid out;
  out.k = k;
  std::vector<std::size_t> labels(x->object_count());
  std::map<std::size_t, GroupPtr> groups;
  for (std::size_t c = 0; c < x->component_count(); ++c) {
    out.extensions.push_back(adjoin_central_root(x->component(c).vertex, xi.value_on_component(*x, c), k));
    groups[c] = out.extensions.back().group;
    for (std::size_t o : x->component(c).objects) labels[o] = c;
  }
  out.gpd = std::make_shared<const FinGroupoid>(labels, groups);
  for (std::size_t o = 0; o < x->object_count(); ++o)
    out.phi.assignment.push_back({o, o, out.extensions[x->component_of(o)].phi});
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric powers

SymmetricNative::SymmetricNative(GpdPtr x, std::vector<std::size_t> deg, std::size_t min_total, std::size_t max_total,
                                 std::size_t cap)
    : base(std::move(x)), degree(std::move(deg)) {
  if (degree.size() != base->object_count()) throw GroupoidError("degree vector has wrong size");
  for (std::size_t d : degree)
    if (d == 0) throw GroupoidError("object degrees must be positive");
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t total) -> void {
    if (total >= min_total) {
      tuples.push_back(cur);
      if (tuples.size() > cap) throw CapExceeded("symmetric power exceeds the element cap");
    }
    for (std::size_t o = 0; o < base->object_count(); ++o) {
      if (total + degree[o] > max_total) continue;
      cur.push_back(o);
      self(self, total + degree[o]);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index[tuples[i]] = i;
  std::size_t longest = 0;
  for (const auto& t : tuples) longest = std::max(longest, t.size());
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= longest; ++i) {
    fact *= i;
    if (fact > cap) throw CapExceeded("symmetric power exceeds the element cap");
  }
}

std::size_t SymmetricNative::object_of(const std::vector<std::size_t>& t) const {
  const auto it = tuple_index.find(t);
  if (it == tuple_index.end()) throw GroupoidError("tuple is not an object of the symmetric power");
  return it->second;
}

std::size_t SymmetricNative::target(const NArrow& a) const {
  std::vector<std::size_t> y(a.g.size());
  for (std::size_t i = 0; i < a.g.size(); ++i) y[a.sigma[i]] = a.g[i].tgt;
  return object_of(y);
}

std::vector<SymmetricNative::NArrow> SymmetricNative::neighbors(std::size_t obj) const {
  const auto& t = tuples[obj];
  const std::size_t r = t.size();
  std::vector<NArrow> out;
  Permutation id(r);
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<Arrow> ids;
  for (std::size_t x : t) ids.push_back(base->identity(x));
  for (std::size_t i = 0; i + 1 < r; ++i) {
    Permutation s = id;
    std::swap(s[i], s[i + 1]);
    out.push_back({obj, s, ids});
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t y : base->component(base->component_of(t[i])).objects) {
      if (y == t[i] || degree[y] != degree[t[i]]) continue;
      auto g = ids;
      g[i] = {t[i], y, 0};
      out.push_back({obj, id, g});
    }
  return out;
}

std::vector<SymmetricNative::NArrow> SymmetricNative::loops(std::size_t obj) const {
  const auto& t = tuples[obj];
  const std::size_t r = t.size();
  std::vector<NArrow> out;
  for (const auto& sigma : all_permutations(r)) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) ok = base->component_of(t[i]) == base->component_of(t[sigma[i]]);
    if (!ok) continue;
    std::vector<std::size_t> sizes(r);
    for (std::size_t i = 0; i < r; ++i) sizes[i] = base->automorphism_order(t[i]);
    std::vector<Elem> digits(r, 0);
    while (true) {
      std::vector<Arrow> g(r);
      for (std::size_t i = 0; i < r; ++i) g[i] = {t[i], t[sigma[i]], digits[i]};
      out.push_back({obj, sigma, std::move(g)});
      if (out.size() > default_element_cap()) throw CapExceeded("symmetric power automorphisms exceed the element cap");
      std::size_t i = 0;
      while (i < r && ++digits[i] == sizes[i]) digits[i++] = 0;
      if (i == r) break;
    }
  }
  return out;
}

SymmetricNative::NArrow SymmetricNative::compose(const NArrow& h, const NArrow& g) const {
  const std::size_t r = g.g.size();
  NArrow out{g.src, Permutation(r), std::vector<Arrow>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    out.sigma[i] = h.sigma[g.sigma[i]];
    out.g[i] = base->compose(h.g[g.sigma[i]], g.g[i]);
  }
  return out;
}

SymmetricNative::NArrow SymmetricNative::inverse(const NArrow& f) const {
  const std::size_t r = f.g.size();
  NArrow out{target(f), Permutation(r), std::vector<Arrow>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    out.sigma[f.sigma[i]] = static_cast<Elem>(i);
    out.g[f.sigma[i]] = base->inverse(f.g[i]);
  }
  return out;
}

SymmetricNative::NArrow SymmetricNative::identity(std::size_t obj) const {
  const auto& t = tuples[obj];
  NArrow out{obj, Permutation(t.size()), {}};
  std::iota(out.sigma.begin(), out.sigma.end(), Elem{0});
  for (std::size_t x : t) out.g.push_back(base->identity(x));
  return out;
}

SymmetricNative::Key SymmetricNative::key(const NArrow& a) const {
  Key k;
  for (Elem s : a.sigma) k.push_back(s);
  for (const auto& g : a.g) k.push_back(g.elem);
  return k;
}

Presented<SymmetricNative> symmetric_power(const GpdPtr& x, std::size_t n, std::size_t cap) {
  return present(SymmetricNative(x, std::vector<std::size_t>(x->object_count(), 1), n, n, cap));
}

Presented<SymmetricNative> truncated_symmetric(const GpdPtr& x, std::size_t n_max, std::size_t cap) {
  return present(SymmetricNative(x, std::vector<std::size_t>(x->object_count(), 1), 0, n_max, cap));
}

// ---------------------------------------------------------------------------
// Phi_k and the equivalences E_k, F_k, Q

namespace {

bool is_long_cycle(const Permutation& s) {
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i)
    if (s[i] != (i + 1) % k) return false;
  return true;
}

Permutation long_cycle(std::size_t k) {
  Permutation s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Elem>((i + 1) % k);
  return s;
}

}  // namespace

std::pair<std::vector<std::size_t>, std::vector<Arrow>> PhiGroupoid::cycle_data(std::size_t obj) const {
  const auto& nat = phi.native;
  const std::size_t n = phi.native_object[obj];
  const std::size_t b = nat.base_object(n);
  const auto loop = sym.decode({b, b, nat.automorphism(n)});
  return {sym.native.tuples[sym.native_object[b]], loop.g};
}

PhiGroupoid phi_groupoid(const GpdPtr& x, std::size_t k, std::size_t cap) {
  if (k == 0) throw GroupoidError("Phi_k needs k >= 1");
  PhiGroupoid out{k, x, symmetric_power(x, k, cap), {}, {}, {}};
  out.lambda_sym = inertia(out.sym.gpd);
  const auto& lnat = out.lambda_sym.presented.native;
  if (lnat.object_count() > cap) throw CapExceeded("Phi_k ambient inertia exceeds the element cap");
  std::vector<std::size_t> subset;
  for (std::size_t n = 0; n < lnat.object_count(); ++n) {
    const std::size_t b = lnat.base_object(n);
    if (is_long_cycle(out.sym.decode({b, b, lnat.automorphism(n)}).sigma)) subset.push_back(n);
  }
  out.phi = present(InertiaNative(out.sym.gpd), subset);
  for (std::size_t o = 0; o < out.phi.gpd->object_count(); ++o) {
    const std::size_t n = out.phi.native_object[o];
    const std::size_t b = lnat.base_object(n);
    out.varphi.assignment.push_back(out.phi.encode({n, {b, b, lnat.automorphism(n)}}));
  }
  return out;
}

EkEquivalence equivalence_e_k(const GpdPtr& x, std::size_t k, std::size_t cap) {
  EkEquivalence out{phi_groupoid(x, k, cap), inertia(x), {}, {}, {}};
  out.root = root_groupoid(out.lambda.presented.gpd, out.lambda.xi, k);
  const auto rp = present_coordinates(out.root.gpd);
  const PhiGroupoid& phi = out.phi;
  const auto& pn = phi.phi.native;
  const auto& ln = out.lambda.presented.native;
  const FinGroupoid& sg = *phi.sym.gpd;

  auto e_obj = [&](std::size_t n) {
    const std::size_t b = pn.base_object(n);
    const auto loop = phi.sym.decode({b, b, pn.automorphism(n)});
    Arrow hat = loop.g[0];
    for (std::size_t i = 1; i < k; ++i) hat = x->compose(loop.g[i], hat);
    return out.lambda.presented.object_of(ln.object(hat.src, hat.elem));
  };
  auto e_arrow = [&](const InertiaNative::NArrow& a) -> Arrow {
    const std::size_t b = pn.base_object(a.src);
    const Arrow loop{b, b, pn.automorphism(a.src)};
    const std::size_t m = phi.sym.decode(a.h).sigma.at(0);
    const Arrow shifted = sg.compose(a.h, sg.power(loop, -static_cast<long>(m)));
    const auto plain = phi.sym.decode(shifted);
    const Arrow in_lambda = out.lambda.presented.encode({e_obj(a.src), plain.g[0]});
    const auto& ext = out.root.extensions[out.root.gpd->component_of(in_lambda.src)];
    return {in_lambda.src, in_lambda.tgt, ext.encode(in_lambda.elem, m)};
  };
  out.e_k = make_functor(phi.phi, rp, e_obj, e_arrow);

  auto f_obj = [&](std::size_t r) {
    const std::size_t base_x = ln.base_object(r);
    const std::size_t t = phi.sym.native.object_of(std::vector<std::size_t>(k, base_x));
    std::vector<Arrow> g(k, x->identity(base_x));
    g[0].elem = ln.automorphism(r);
    const Arrow loop = phi.sym.encode({t, long_cycle(k), g});
    return pn.object(t, loop.elem);
  };
  auto f_arrow = [&](const Arrow& a) -> InertiaNative::NArrow {
    const auto& ext = out.root.extensions[out.root.gpd->component_of(a.src)];
    const auto h = out.lambda.presented.decode({a.src, a.tgt, ext.base_part(a.elem)}).h;
    const std::size_t src = f_obj(a.src);
    const std::size_t t = phi.sym.native.object_of(std::vector<std::size_t>(k, h.src));
    Permutation id(k);
    std::iota(id.begin(), id.end(), Elem{0});
    const Arrow diag = phi.sym.encode({t, id, std::vector<Arrow>(k, h)});
    const std::size_t b = pn.base_object(src);
    const Arrow loop{b, b, pn.automorphism(src)};
    return {src, sg.compose(diag, sg.power(loop, static_cast<long>(ext.root_part(a.elem))))};
  };
  out.f_k = make_functor(rp, phi.phi, f_obj, f_arrow);
  return out;
}

std::pair<GpdPtr, std::vector<std::size_t>> disjoint_union(const std::vector<GpdPtr>& parts) {
  std::vector<std::size_t> labels, offsets;
  std::map<std::size_t, GroupPtr> groups;
  std::size_t comp_base = 0;
  for (const auto& p : parts) {
    offsets.push_back(labels.size());
    for (std::size_t o = 0; o < p->object_count(); ++o) labels.push_back(comp_base + p->component_of(o));
    for (std::size_t c = 0; c < p->component_count(); ++c) groups[comp_base + c] = p->component(c).vertex;
    comp_base += p->component_count();
  }
  offsets.push_back(labels.size());
  return {std::make_shared<const FinGroupoid>(labels, groups), offsets};
}

QEquivalence equivalence_q(const GpdPtr& x, std::size_t n_max, std::size_t cap) {
  QEquivalence out;
  out.n_max = n_max;
  std::vector<GpdPtr> parts;
  for (std::size_t k = 1; k <= n_max; ++k) {
    out.phis.push_back(phi_groupoid(x, k, cap));
    parts.push_back(out.phis.back().phi.gpd);
  }
  auto [un, offsets] = disjoint_union(parts);
  out.phi_union = un;
  for (std::size_t k = 1; k <= n_max; ++k)
    for (std::size_t o = offsets[k - 1]; o < offsets[k]; ++o) out.phi_degree.push_back(k);
  auto part_of = [&](std::size_t o) {
    return static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), o) - offsets.begin()) - 1;
  };

  out.sym_phi = present(SymmetricNative(out.phi_union, out.phi_degree, 0, n_max, cap));
  out.sym_x = truncated_symmetric(x, n_max, cap);
  out.lambda_sym_x = inertia(out.sym_x.gpd);
  const auto& spn = out.sym_phi.native;
  const auto& sxn = out.sym_x.native;
  const auto& ln = out.lambda_sym_x.presented.native;

  struct Concat {
    std::vector<std::size_t> tuple;
    Permutation sigma;
    std::vector<Arrow> g;
    std::vector<std::size_t> block_offset;
  };
  auto concat = [&](std::size_t native_obj) {
    Concat c;
    for (std::size_t y : spn.tuples[native_obj]) {
      const std::size_t part = part_of(y);
      const auto [xs, gs] = out.phis[part].cycle_data(y - offsets[part]);
      const std::size_t off = c.tuple.size(), kk = xs.size();
      c.block_offset.push_back(off);
      for (std::size_t p = 0; p < kk; ++p) {
        c.tuple.push_back(xs[p]);
        c.sigma.push_back(static_cast<Elem>(off + (p + 1) % kk));
        c.g.push_back(gs[p]);
      }
    }
    return c;
  };
  auto q_obj = [&](std::size_t native_obj) {
    const Concat c = concat(native_obj);
    const std::size_t t = sxn.object_of(c.tuple);
    const Arrow loop = out.sym_x.encode({t, c.sigma, c.g});
    return ln.object(t, loop.elem);
  };
  auto q_arrow = [&](const SymmetricNative::NArrow& a) -> InertiaNative::NArrow {
    const Concat cs = concat(a.src), ct = concat(spn.target(a));
    const std::size_t n = cs.tuple.size();
    SymmetricNative::NArrow big{sxn.object_of(cs.tuple), Permutation(n), std::vector<Arrow>(n)};
    for (std::size_t j = 0; j < a.g.size(); ++j) {
      const Arrow& f = a.g[j];
      const std::size_t part = part_of(f.src);
      const auto& ph = out.phis[part];
      const Arrow local{f.src - offsets[part], f.tgt - offsets[part], f.elem};
      const auto in_sym = ph.sym.decode(ph.phi.decode(local).h);
      for (std::size_t p = 0; p < in_sym.g.size(); ++p) {
        big.sigma[cs.block_offset[j] + p] = static_cast<Elem>(ct.block_offset[a.sigma[j]] + in_sym.sigma[p]);
        big.g[cs.block_offset[j] + p] = in_sym.g[p];
      }
    }
    return {q_obj(a.src), out.sym_x.encode(big)};
  };
  out.q = make_functor(out.sym_phi, out.lambda_sym_x.presented, q_obj, q_arrow);

  out.intertwines_center = true;
  for (std::size_t o = 0; o < out.sym_phi.gpd->object_count(); ++o) {
    const std::size_t n = out.sym_phi.native_object[o];
    auto s_phi = spn.identity(n);
    for (std::size_t j = 0; j < s_phi.g.size(); ++j) {
      const std::size_t y = spn.tuples[n][j];
      const std::size_t part = part_of(y);
      Arrow v = out.phis[part].varphi.assignment[y - offsets[part]];
      v.src += offsets[part];
      v.tgt += offsets[part];
      s_phi.g[j] = v;
    }
    if (out.q.map_arrow(out.sym_phi.encode(s_phi)) != out.lambda_sym_x.xi.assignment[out.q.map_object(o)])
      out.intertwines_center = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fibred products

FibredNative::FibredNative(GroupoidFunctor u_, GroupoidFunctor a_) : u(std::move(u_)), a(std::move(a_)) {
  if (u.target() != a.target()) throw GroupoidError("fibred product: functors have different targets");
  const FinGroupoid& z = *u.target();
  for (std::size_t x = 0; x < u.source()->object_count(); ++x)
    for (std::size_t y = 0; y < a.source()->object_count(); ++y) {
      const std::size_t ux = u.map_object(x), ay = a.map_object(y);
      for (const Arrow& g : z.hom(ux, ay)) {
        index[{x, y, g.elem}] = objs.size();
        objs.push_back({x, y, g});
      }
    }
}

std::size_t FibredNative::object_of(std::size_t x, std::size_t y, const Arrow& g) const {
  const auto it = index.find({x, y, g.elem});
  if (it == index.end()) throw GroupoidError("not an object of the fibred product");
  return it->second;
}

std::size_t FibredNative::target(const NArrow& f) const {
  const FinGroupoid& z = *u.target();
  const Arrow g = z.compose(a.map_arrow(f.k), z.compose(objs[f.src].g, z.inverse(u.map_arrow(f.h))));
  return object_of(f.h.tgt, f.k.tgt, g);
}

std::vector<FibredNative::NArrow> FibredNative::neighbors(std::size_t obj) const {
  const auto& o = objs[obj];
  const FinGroupoid& xg = *u.source();
  const FinGroupoid& yg = *a.source();
  std::vector<NArrow> out;
  for (std::size_t x2 : xg.component(xg.component_of(o.x)).objects) out.push_back({obj, {o.x, x2, 0}, yg.identity(o.y)});
  for (const Arrow& s : xg.hom(o.x, o.x)) out.push_back({obj, s, yg.identity(o.y)});
  for (std::size_t y2 : yg.component(yg.component_of(o.y)).objects) out.push_back({obj, xg.identity(o.x), {o.y, y2, 0}});
  for (const Arrow& t : yg.hom(o.y, o.y)) out.push_back({obj, xg.identity(o.x), t});
  return out;
}

std::vector<FibredNative::NArrow> FibredNative::loops(std::size_t obj) const {
  const auto& o = objs[obj];
  const FinGroupoid& z = *u.target();
  std::vector<NArrow> out;
  for (const Arrow& s : u.source()->hom(o.x, o.x))
    for (const Arrow& t : a.source()->hom(o.y, o.y))
      if (z.compose(a.map_arrow(t), o.g) == z.compose(o.g, u.map_arrow(s))) out.push_back({obj, s, t});
  return out;
}

FibredNative::NArrow FibredNative::compose(const NArrow& g, const NArrow& f) const {
  return {f.src, u.source()->compose(g.h, f.h), a.source()->compose(g.k, f.k)};
}

FibredNative::NArrow FibredNative::inverse(const NArrow& f) const {
  return {target(f), u.source()->inverse(f.h), a.source()->inverse(f.k)};
}

FibredNative::NArrow FibredNative::identity(std::size_t obj) const {
  return {obj, u.source()->identity(objs[obj].x), a.source()->identity(objs[obj].y)};
}

FibredSquare fibred_product(const GroupoidFunctor& u, const GroupoidFunctor& a) {
  FibredSquare sq{u, a, present(FibredNative(u, a)), {}, {}};
  const auto& pn = sq.product.native;
  sq.b = make_functor(sq.product, present_coordinates(u.source()), [&](std::size_t o) { return pn.objs[o].x; },
                      [](const FibredNative::NArrow& f) { return f.h; });
  sq.v = make_functor(sq.product, present_coordinates(a.source()), [&](std::size_t o) { return pn.objs[o].y; },
                      [](const FibredNative::NArrow& f) { return f.k; });
  return sq;
}

InertiaFibreComparison inertia_fibre_comparison(const FibredSquare& sq) {
  const Inertia lx = inertia(sq.u.source());
  const Inertia ly = inertia(sq.a.source());
  const Inertia lz = inertia(sq.u.target());
  const auto lu = inertia_functor(lx, lz, sq.u);
  const auto la = inertia_functor(ly, lz, sq.a);
  InertiaFibreComparison out{inertia(sq.product.gpd), fibred_product(lu, la), {}};
  const auto& lpn = out.lambda_product.presented.native;
  const auto& target_native = out.lambda_square.product.native;
  const auto& pn = sq.product.native;

  auto obj_fn = [&](std::size_t n) {
    const std::size_t p = lpn.base_object(n);
    const auto loop = sq.product.decode({p, p, lpn.automorphism(n)});
    const std::size_t lxo = lx.presented.native.object(loop.h.src, loop.h.elem);
    const std::size_t lyo = ly.presented.native.object(loop.k.src, loop.k.elem);
    const Arrow g = lz.presented.encode({lu.map_object(lxo), pn.objs[sq.product.native_object[p]].g});
    return target_native.object_of(lxo, lyo, g);
  };
  auto arrow_fn = [&](const InertiaNative::NArrow& f) -> FibredNative::NArrow {
    const std::size_t src = obj_fn(f.src);
    const auto& tobj = target_native.objs[src];
    const auto pa = sq.product.decode(f.h);
    return {src, lx.presented.encode({tobj.x, pa.h}), ly.presented.encode({tobj.y, pa.k})};
  };
  out.comparison = make_functor(out.lambda_product.presented, out.lambda_square.product, obj_fn, arrow_fn);
  return out;
}

// ---------------------------------------------------------------------------
// Equivalences

EquivalenceCertificate equivalence_check(const GroupoidFunctor& f, std::size_t exhaustive_limit) {
  const FinGroupoid& s = *f.source();
  const FinGroupoid& t = *f.target();
  EquivalenceCertificate cert;
  cert.source_cardinality = s.cardinality();
  cert.target_cardinality = t.cardinality();
  cert.fully_faithful = true;
  std::vector<bool> hit(t.component_count(), false);
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const auto& comp = s.component(c);
    const std::size_t fr = f.map_object(comp.rep);
    const std::size_t d = t.component_of(fr);
    cert.class_matching.push_back(d);
    if (hit[d] && cert.fully_faithful) {
      cert.fully_faithful = false;
      cert.failure = "two source classes map to the same target class";
    }
    hit[d] = true;
    std::set<Elem> images;
    for (std::size_t e = 0; e < comp.vertex->order(); ++e)
      images.insert(f.map_arrow({comp.rep, comp.rep, static_cast<Elem>(e)}).elem);
    if ((images.size() != comp.vertex->order() || t.automorphism_order(fr) != comp.vertex->order()) &&
        cert.fully_faithful) {
      cert.fully_faithful = false;
      cert.failure = "automorphism groups are not mapped isomorphically";
    }
  }
  cert.essentially_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (!cert.essentially_surjective && cert.failure.empty()) cert.failure = "not essentially surjective";

  std::size_t work = 0;
  for (std::size_t c = 0; c < s.component_count(); ++c)
    work += s.component(c).objects.size() * s.component(c).objects.size() * s.component(c).vertex->order();
  if (work <= exhaustive_limit) {
    cert.exhaustive = true;
    for (std::size_t x = 0; x < s.object_count(); ++x)
      for (std::size_t y = 0; y < s.object_count(); ++y) {
        ++cert.hom_pairs_checked;
        std::set<Elem> images;
        for (const Arrow& a : s.hom(x, y)) {
          const Arrow b = f.map_arrow(a);
          if (b.src != f.map_object(x) || b.tgt != f.map_object(y)) {
            cert.fully_faithful = false;
            if (cert.failure.empty()) cert.failure = "arrow image has wrong endpoints";
          }
          images.insert(b.elem);
        }
        if (images.size() != s.hom_size(x, y) || t.hom_size(f.map_object(x), f.map_object(y)) != s.hom_size(x, y)) {
          cert.fully_faithful = false;
          if (cert.failure.empty()) cert.failure = "hom-set map is not bijective";
        }
      }
  }
  cert.equivalence = cert.fully_faithful && cert.essentially_surjective;
  return cert;
}

GroupoidFunctor subgroup_inclusion(const Presented<TranslationNative>& h_pt, const Presented<TranslationNative>& g_pt,
                                   const Subgroup& h) {
  if (h_pt.native.group != h.group || g_pt.native.group != h.ambient || h_pt.native.set_size != 1 ||
      g_pt.native.set_size != 1)
    throw GroupoidError("subgroup_inclusion: groupoids do not match the subgroup");
  return make_functor(h_pt, g_pt, [](std::size_t) { return std::size_t{0}; },
                      [&](const TranslationNative::NArrow& a) -> TranslationNative::NArrow {
                        return {0, h.to_ambient[a.g]};
                      });
}

}  // namespace tatek
