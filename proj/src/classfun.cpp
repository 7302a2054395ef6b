#include "tatek/classfun.hpp"

#include <set>

namespace tatek {

Arrow IteratedInertia::to_base(std::size_t j, const Arrow& a) const {
  if (j == 0) return a;
  return to_base(j - 1, levels[j - 1].presented.decode(a).h);
}

std::pair<std::size_t, std::vector<Arrow>> IteratedInertia::tuple(std::size_t obj) const {
  std::vector<Arrow> gs(n);
  std::size_t o = obj;
  for (std::size_t j = n; j > 0; --j) {
    const auto& nat = levels[j - 1].presented.native;
    const std::size_t native = levels[j - 1].presented.native_object[o];
    const std::size_t p = nat.base_object(native);
    gs[j - 1] = to_base(j - 1, {p, p, nat.automorphism(native)});
    o = p;
  }
  return {o, gs};
}

std::size_t IteratedInertia::class_of_tuple(std::size_t x, const std::vector<Elem>& gs) const {
  if (gs.size() != n) throw GroupoidError("tuple length does not match the inertia level");
  std::vector<std::size_t> objs{x};  // objs[j] = object of Lambda^j
  auto lift = [&](auto&& self, std::size_t j, Elem g) -> Arrow {
    if (j == 0) return {x, x, g};
    return levels[j - 1].presented.encode({levels[j - 1].presented.native_object[objs[j]], self(self, j - 1, g)});
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Arrow loop = lift(lift, j, gs[j]);
    const auto& p = levels[j].presented;
    objs.push_back(p.object_of(p.native.object(objs[j], loop.elem)));
  }
  return top()->component_of(objs.back());
}

IteratedInertiaPtr iterated_inertia(const GpdPtr& x, std::size_t n) {
  auto out = std::make_shared<IteratedInertia>();
  out->base = x;
  out->n = n;
  GpdPtr cur = x;
  for (std::size_t j = 0; j < n; ++j) {
    out->levels.push_back(inertia(cur));
    cur = out->levels.back().presented.gpd;
    if (cur->object_count() > default_element_cap()) throw CapExceeded("iterated inertia exceeds the element cap");
  }
  return out;
}

std::vector<GroupoidFunctor> iterated_inertia_functor(const IteratedInertia& source, const IteratedInertia& target,
                                                      const GroupoidFunctor& f) {
  if (source.n != target.n) throw GroupoidError("inertia levels differ");
  std::vector<GroupoidFunctor> out{f};
  for (std::size_t j = 0; j < source.n; ++j)
    out.push_back(inertia_functor(source.levels[j], target.levels[j], out.back()));
  return out;
}

std::vector<std::size_t> class_map(const IteratedInertia& source, const IteratedInertia& target,
                                   const GroupoidFunctor& f) {
  const auto top = iterated_inertia_functor(source, target, f).back();
  const FinGroupoid& s = *source.top();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.component_count(); ++c)
    out.push_back(target.top()->component_of(top.map_object(s.component(c).rep)));
  return out;
}

NClassFunction NClassFunction::constant(const IteratedInertiaPtr& d, const Cyclotomic& c) {
  return {d, std::vector<Cyclotomic>(d->class_count(), c)};
}

NClassFunction NClassFunction::indicator(const IteratedInertiaPtr& d, std::size_t cls) {
  NClassFunction f{d, std::vector<Cyclotomic>(d->class_count())};
  f.values.at(cls) = Cyclotomic(1);
  return f;
}

bool NClassFunction::is_integral() const {
  for (const auto& v : values)
    if (!v.is_integral()) return false;
  return true;
}

NClassFunction operator+(const NClassFunction& a, const NClassFunction& b) {
  if (a.domain != b.domain) throw GroupoidError("class functions on different groupoids");
  NClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

NClassFunction operator*(const NClassFunction& a, const NClassFunction& b) {
  if (a.domain != b.domain) throw GroupoidError("class functions on different groupoids");
  NClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

NClassFunction restrict(const NClassFunction& chi, const GroupoidFunctor& f, const IteratedInertiaPtr& source_domain) {
  if (f.target() != chi.domain->base || f.source() != source_domain->base || source_domain->n != chi.n())
    throw GroupoidError("restrict: functor does not match the class function");
  const auto cm = class_map(*source_domain, *chi.domain, f);
  NClassFunction out{source_domain, {}};
  for (std::size_t c : cm) out.values.push_back(chi.values[c]);
  return out;
}

bool is_faithful(const GroupoidFunctor& f) {
  const FinGroupoid& s = *f.source();
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const auto& comp = s.component(c);
    std::set<Elem> images;
    for (std::size_t e = 0; e < comp.vertex->order(); ++e)
      images.insert(f.map_arrow({comp.rep, comp.rep, static_cast<Elem>(e)}).elem);
    if (images.size() != comp.vertex->order()) return false;
  }
  return true;
}

TransferResult transfer(const NClassFunction& chi, const GroupoidFunctor& f, const IteratedInertiaPtr& target_domain) {
  if (f.source() != chi.domain->base || f.target() != target_domain->base || target_domain->n != chi.n())
    throw GroupoidError("transfer: functor does not match the class function");
  const auto cm = class_map(*chi.domain, *target_domain, f);
  TransferResult out{{target_domain, std::vector<Cyclotomic>(target_domain->class_count())}, is_faithful(f), true};
  for (std::size_t h = 0; h < cm.size(); ++h) {
    const Rational w(static_cast<long>(target_domain->automorphism_order(cm[h])),
                     static_cast<long>(chi.domain->automorphism_order(h)));
    out.value.values[cm[h]] += chi.values[h] * w;
  }
  out.integral = out.value.is_integral();
  return out;
}

Cyclotomic pairing(const NClassFunction& chi, const NClassFunction& psi) {
  if (chi.domain != psi.domain) throw GroupoidError("pairing: class functions on different groupoids");
  Cyclotomic sum;
  for (std::size_t c = 0; c < chi.values.size(); ++c)
    sum += chi.values[c] * psi.values[c] * Rational(1, static_cast<long>(chi.domain->automorphism_order(c)));
  return sum;
}

PushPullResult push_pull_check(const FibredSquare& sq, std::size_t n) {
  const auto lx = iterated_inertia(sq.u.source(), n);
  const auto ly = iterated_inertia(sq.a.source(), n);
  const auto lz = iterated_inertia(sq.u.target(), n);
  const auto lp = iterated_inertia(sq.product.gpd, n);
  PushPullResult out;
  for (std::size_t c = 0; c < ly->class_count(); ++c) {
    const auto ind = NClassFunction::indicator(ly, c);
    const auto lhs = restrict(transfer(ind, sq.a, lz).value, sq.u, lx);
    const auto rhs = transfer(restrict(ind, sq.v, lp), sq.b, lx).value;
    ++out.functions_checked;
    if (lhs.values != rhs.values && out.passes) {
      out.passes = false;
      out.counterexample = "indicator of class " + std::to_string(c) + " of the n-fold inertia of Y";
    }
  }
  return out;
}

}  // namespace tatek
