#include "tatek/tate.hpp"

#include <algorithm>

namespace tatek {

namespace {

void same_context(const TateElement& a, const TateElement& b) {
  if (a.context() != b.context()) throw TateError("Tate elements live over different groups");
}

// chi on cent.group pulled back along x -> s x s^-1 from the subgroup `sub`
// (both subgroups of the same ambient group).
VirtualCharacter transport(const VirtualCharacter& chi, const Subgroup& from, const Subgroup& to, Elem s) {
  const FinGroup& amb = *to.ambient;
  return VirtualCharacter::from_function(to.group, [&](Elem x) {
    const Elem y = amb.conj(s, to.to_ambient[x]);
    if (!from.contains(y)) throw TateError("transport: element leaves the subgroup");
    return chi.at(from.local(y));
  });
}

std::vector<long> divisors(long m) {
  std::vector<long> out;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

TateTSeries zero_tseries(const TateContextPtr& ctx, std::size_t order) {
  return TateTSeries(order, TateElement::zero(ctx));
}

// t -> t^k on a series of lower order, re-truncated at `order`.
TateTSeries spread(const TateTSeries& s, std::size_t k, std::size_t order) {
  TateTSeries out(order, s.zero);
  for (std::size_t n = 0; n <= s.order() && n * k <= order; ++n) out.coeffs[n * k] = s.coeffs[n];
  return out;
}

TateTSeries hecke_log(const TateElement& f, std::size_t order) {
  auto h = zero_tseries(f.context(), order);
  for (std::size_t m = 1; m <= order; ++m) h.coeffs[m] = hecke(f, static_cast<long>(m));
  return h;
}

}  // namespace

TateContextPtr make_tate_context(const GroupPtr& g) {
  auto ctx = std::make_shared<TateContext>();
  ctx->group = g;
  for (std::size_t c = 0; c < g->class_count(); ++c) ctx->centralizers.push_back(centralizer(g, g->class_rep(c)));
  ctx->conjugator.assign(g->order(), 0);
  std::vector<bool> done(g->order(), false);
  for (Elem s = 0; s < g->order(); ++s)
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      // s rep s^-1 = x  means  s^-1 x s = rep
      const Elem x = g->conj(s, g->class_rep(c));
      if (!done[x]) {
        done[x] = true;
        ctx->conjugator[x] = g->inv(s);
      }
    }
  return ctx;
}

TateElement::TateElement(TateContextPtr ctx, std::vector<CharSeries> components)
    : ctx_(std::move(ctx)), comps_(std::move(components)) {
  if (comps_.size() != ctx_->class_count()) throw TateError("one series per conjugacy class is required");
  for (std::size_t c = 0; c < comps_.size(); ++c)
    for (const auto& [n, chi] : comps_[c].terms()) {
      if (chi.group != ctx_->centralizers[c].group)
        throw TateError("coefficient is not a character of the centralizer");
      if (!(comps_[c].exponent(n) * Rational(static_cast<long>(ctx_->rep_order(c)))).is_integer())
        throw TateError("exponent outside (1/|g|)Z");
    }
  share_bound();
}

void TateElement::share_bound() {
  const Bound b = known_below();
  for (auto& s : comps_) s = s.truncated(b);
}

TateElement TateElement::zero(const TateContextPtr& ctx, const Bound& known_below) {
  return {ctx, std::vector<CharSeries>(ctx->class_count(), CharSeries(1, known_below))};
}

TateElement TateElement::constant(const TateContextPtr& ctx, const Cyclotomic& d) {
  std::vector<CharSeries> comps;
  for (const auto& cent : ctx->centralizers) {
    CharSeries s(1);
    s.add(0, VirtualCharacter::constant(cent.group, d));
    comps.push_back(s);
  }
  return {ctx, std::move(comps)};
}

TateElement TateElement::from_representation(const TateContextPtr& ctx, const VirtualCharacter& chi) {
  if (chi.group != ctx->group) throw TateError("representation lives on a different group");
  std::vector<CharSeries> comps;
  for (std::size_t c = 0; c < ctx->class_count(); ++c) {
    const Subgroup& cent = ctx->centralizers[c];
    const VirtualCharacter res = VirtualCharacter::from_function(cent.group, [&](Elem x) { return chi.at(cent.to_ambient[x]); });
    const long r = static_cast<long>(ctx->rep_order(c));
    CharSeries s(r);
    for (long n = 0; n < r; ++n) s.add(n, central_eigenprojection(res, cent.local(ctx->rep(c)), Rational(n, r)));
    comps.push_back(s.reduced());
  }
  return {ctx, std::move(comps)};
}

Bound TateElement::known_below() const {
  Bound b;
  for (const auto& s : comps_) b = min(b, s.known_below());
  return b;
}

bool TateElement::is_laurent() const {
  return std::any_of(comps_.begin(), comps_.end(), [](const CharSeries& s) { return !s.empty() && s.terms().begin()->first < 0; });
}

TateElement TateElement::truncated(const Bound& e) const {
  TateElement out = *this;
  for (auto& s : out.comps_) s = s.truncated(e);
  return out;
}

TateElement TateElement::scaled(const Rational& r) const {
  TateElement out = *this;
  for (auto& s : out.comps_) s = s.scaled(r);
  return out;
}

TateElement operator+(const TateElement& a, const TateElement& b) {
  same_context(a, b);
  TateElement out = a;
  for (std::size_t c = 0; c < out.comps_.size(); ++c) out.comps_[c] = a.comps_[c] + b.comps_[c];
  out.share_bound();
  return out;
}

TateElement operator-(const TateElement& a, const TateElement& b) { return a + b.scaled(Rational(-1)); }

TateElement operator*(const TateElement& a, const TateElement& b) {
  same_context(a, b);
  TateElement out = a;
  for (std::size_t c = 0; c < out.comps_.size(); ++c) out.comps_[c] = a.comps_[c] * b.comps_[c];
  out.share_bound();
  return out;
}

bool operator==(const TateElement& a, const TateElement& b) { return a.ctx_ == b.ctx_ && a.comps_ == b.comps_; }

bool Coeff<TateElement>::is_zero(const TateElement& t) {
  return std::all_of(t.components().begin(), t.components().end(), [](const CharSeries& s) { return s.empty(); });
}

TateElement Coeff<TateElement>::inverse(const TateElement& t) {
  std::vector<CharSeries> comps;
  for (const auto& s : t.components()) comps.push_back(invert(s));
  return {t.context(), std::move(comps)};
}

std::optional<RotationViolation> validate_rotation(const TateElement& f) {
  const auto& ctx = *f.context();
  for (std::size_t c = 0; c < ctx.class_count(); ++c) {
    const Subgroup& cent = ctx.centralizers[c];
    const FinGroup& cg = *cent.group;
    const Elem g = cent.local(ctx.rep(c));
    const CharSeries& s = f.component(c);
    for (const auto& [n, chi] : s.terms()) {
      const Rational a = s.exponent(n);
      const long den = a.denominator().get_si(), num = a.numerator().get_si();
      const Cyclotomic z = Cyclotomic::root_of_unity(den, mod(num, den));
      for (std::size_t k = 0; k < cg.class_count(); ++k) {
        const Elem h = cg.class_rep(k);
        if (chi.at(cg.mul(g, h)) != z * chi.at(h)) return RotationViolation{c, ctx.rep(c), a, cent.to_ambient[h]};
      }
    }
  }
  return std::nullopt;
}

ScalarSeries character_eval(const TateElement& f, Elem g, Elem h) {
  const auto& ctx = *f.context();
  const FinGroup& grp = *ctx.group;
  if (g >= grp.order() || h >= grp.order() || !grp.commute(g, h)) throw TateError("character_eval needs commuting elements");
  const std::size_t c = grp.class_of(g);
  const Elem s = ctx.conjugator[g];
  const Elem hh = grp.conj(s, h);
  const Subgroup& cent = ctx.centralizers[c];
  const Elem local = cent.local(hh);
  return f.component(c).map_coefficients([&](const VirtualCharacter& chi) { return chi.at(local); });
}

TateElement beta(const TateElement& f, long k) {
  if (k < 1) throw TateError("beta needs k >= 1");
  const auto& ctxp = f.context();
  const auto& ctx = *ctxp;
  const FinGroup& grp = *ctx.group;
  std::vector<CharSeries> comps;
  for (std::size_t c = 0; c < ctx.class_count(); ++c) {
    const Elem g = ctx.rep(c);
    const Elem gk = grp.pow(g, k);
    const std::size_t src = grp.class_of(gk);
    const Elem s = ctx.conjugator[gk];
    const Subgroup& cent = ctx.centralizers[c];
    const Subgroup& src_cent = ctx.centralizers[src];
    const long r = static_cast<long>(grp.element_order(g));
    const CharSeries& in = f.component(src);
    CharSeries out(r, in.known_below().scaled(Rational(1, k)));
    for (const auto& [n, chi] : in.terms()) {
      const Rational a = in.exponent(n) * Rational(1, k);
      const Rational ar = a * Rational(r);
      if (!ar.is_integer()) continue;
      const VirtualCharacter res = transport(chi, src_cent, cent, s);
      out.add(ar.to_long(), central_eigenprojection(res, cent.local(g), a));
    }
    comps.push_back(out.reduced());
  }
  return {ctxp, std::move(comps)};
}

TateElement beta_by_characters(const TateElement& f, long k) {
  if (k < 1) throw TateError("beta needs k >= 1");
  const FinGroup& grp = *f.context()->group;
  return from_character_values(f.context(), f.known_below().scaled(Rational(1, k)), [&](std::size_t c, Elem h) {
    const Elem g = f.context()->rep(c);
    const Elem ginv = grp.inv(g);
    ScalarSeries acc(1, f.known_below().scaled(Rational(1, k)));
    Elem gb = 0;  // g^-b
    for (long b = 0; b < k; ++b) {
      const ScalarSeries v = character_eval(f, grp.pow(g, k), grp.mul(gb, h));
      acc = acc + twist_substitute(v, Rational(1, k), v.denominator() * k, b);
      gb = grp.mul(gb, ginv);
    }
    return acc.scaled(Rational(1, k));
  });
}

TateElement adams_tate(const TateElement& f, long m) {
  if (m < 1) throw TateError("Adams operations need m >= 1");
  std::vector<CharSeries> comps;
  for (const auto& s : f.components())
    comps.push_back(s.rescaled(Rational(m)).map_coefficients([&](const VirtualCharacter& chi) { return adams(chi, m); }));
  return {f.context(), std::move(comps)};
}

TateElement hecke(const TateElement& f, long m) {
  if (m < 1) throw TateError("Hecke operators need m >= 1");
  TateElement acc = TateElement::zero(f.context());
  for (long d : divisors(m)) {
    const long a = m / d;
    acc = acc + adams_tate(beta(f, d), a).scaled(Rational(1, a));
  }
  return acc;
}

TateElement hecke_by_characters(const TateElement& f, long m) {
  if (m < 1) throw TateError("Hecke operators need m >= 1");
  const FinGroup& grp = *f.context()->group;
  const Bound out_bound = f.known_below().scaled(Rational(1, m));
  return from_character_values(f.context(), out_bound, [&](std::size_t c, Elem h) {
    const Elem g = f.context()->rep(c);
    const Elem ginv = grp.inv(g);
    ScalarSeries acc(1, out_bound);
    for (long d : divisors(m)) {
      const long a = m / d;
      const Elem ha = grp.pow(h, a);
      Elem gb = 0;
      for (long b = 0; b < d; ++b) {
        const ScalarSeries v = character_eval(f, grp.pow(g, d), grp.mul(gb, ha));
        acc = acc + twist_substitute(v, Rational(a, d), v.denominator() * d, b);
        gb = grp.mul(gb, ginv);
      }
    }
    return acc.scaled(Rational(1, m));
  });
}

TateTSeries atiyah_symmetric_tate(const TateElement& f, std::size_t order) {
  auto l = zero_tseries(f.context(), order);
  for (std::size_t m = 1; m <= order; ++m)
    l.coeffs[m] = adams_tate(f, static_cast<long>(m)).scaled(Rational(1, static_cast<long>(m)));
  return texp(l, TateElement::one(f.context()));
}

TateTSeries symmetric_tate_product(const TateElement& f, std::size_t order) {
  auto out = zero_tseries(f.context(), order);
  out.coeffs[0] = TateElement::one(f.context());
  for (std::size_t k = 1; k <= order; ++k)
    out = out * spread(atiyah_symmetric_tate(beta(f, static_cast<long>(k)), order / k), k, order);
  return out;
}

TateTSeries symmetric_tate_hecke(const TateElement& f, std::size_t order) {
  return texp(hecke_log(f, order), TateElement::one(f.context()));
}

TateTSeries exterior_tate_inverse(const TateElement& f, std::size_t order) {
  return tinverse(symmetric_tate_product(f, order).substitute_power(1, -1));
}

TateTSeries exterior_tate_hecke(const TateElement& f, std::size_t order) {
  return texp(hecke_log(f, order).scaled(Rational(-1)), TateElement::one(f.context())).substitute_power(1, -1);
}

bool agree_to_common_bound(const TateElement& a, const TateElement& b) {
  const Bound e = min(a.known_below(), b.known_below());
  return a.truncated(e) == b.truncated(e);
}

bool agree_to_common_bound(const TateTSeries& a, const TateTSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (!agree_to_common_bound(a.coeffs[i], b.coeffs[i])) return false;
  return true;
}

TateElement induction_tate(const TateElement& f, const Subgroup& h, const TateContextPtr& g_ctx) {
  if (f.context()->group != h.group || g_ctx->group != h.ambient)
    throw TateError("induction: element, subgroup and ambient group do not match");
  const FinGroup& grp = *g_ctx->group;
  const Rational weight(1, static_cast<long>(h.group->order()));
  return from_character_values(g_ctx, f.known_below(), [&](std::size_t c, Elem x) {
    const Elem g = g_ctx->rep(c);
    ScalarSeries acc(1, f.known_below());
    for (Elem s = 0; s < grp.order(); ++s) {
      const Elem sinv = grp.inv(s);
      const Elem g1 = grp.conj(sinv, g), x1 = grp.conj(sinv, x);
      if (!h.contains(g1) || !h.contains(x1)) continue;
      acc = acc + character_eval(f, h.local(g1), h.local(x1));
    }
    return acc.scaled(weight);
  });
}

TateElement induction_tate_centralizer(const TateElement& f, const Subgroup& h, const TateContextPtr& g_ctx) {
  if (f.context()->group != h.group || g_ctx->group != h.ambient)
    throw TateError("induction: element, subgroup and ambient group do not match");
  const FinGroup& grp = *g_ctx->group;
  const auto& h_ctx = *f.context();
  std::vector<CharSeries> comps;
  for (std::size_t c = 0; c < g_ctx->class_count(); ++c) {
    const Subgroup& cg = g_ctx->centralizers[c];
    CharSeries acc(static_cast<long>(g_ctx->rep_order(c)), f.known_below());
    for (std::size_t ch = 0; ch < h_ctx.class_count(); ++ch) {
      const Elem x = h.to_ambient[h_ctx.rep(ch)];
      if (grp.class_of(x) != c) continue;
      const Elem s = g_ctx->conjugator[x];  // s x s^-1 = rep(c)
      // C_H(x) conjugated into C_G(rep c), as a subgroup of the latter
      const Subgroup& ch_cent = h_ctx.centralizers[ch];
      std::vector<Elem> elems;
      for (Elem y : ch_cent.to_ambient) elems.push_back(cg.local(grp.conj(s, h.to_ambient[y])));
      const Subgroup image = make_subgroup(cg.group, elems);
      const Elem sinv = grp.inv(s);
      acc = acc + f.component(ch).map_coefficients([&](const VirtualCharacter& chi) {
        const VirtualCharacter moved = VirtualCharacter::from_function(image.group, [&](Elem e) {
          const Elem amb = grp.conj(sinv, cg.to_ambient[image.to_ambient[e]]);
          return chi.at(ch_cent.local(h.local(amb)));
        });
        return induce(moved, image);
      });
    }
    comps.push_back(acc);
  }
  return {g_ctx, std::move(comps)};
}

std::vector<ThetaComponent> s_map_theta(const TateElement& f, long k) {
  if (k < 1) throw TateError("s_k needs k >= 1");
  const auto& ctx = *f.context();
  std::vector<ThetaComponent> out;
  for (std::size_t c = 0; c < ctx.class_count(); ++c) {
    const Subgroup& cent = ctx.centralizers[c];
    ThetaComponent tc{adjoin_central_root(cent.group, cent.local(ctx.rep(c)), static_cast<std::size_t>(k)), {}};
    const CharSeries& s = f.component(c);
    CharSeries lifted(s.denominator() * k, s.known_below().scaled(Rational(1, k)));
    for (const auto& [n, chi] : s.terms()) {
      const Rational b = s.exponent(n) * Rational(1, k);
      const long den = b.denominator().get_si(), num = b.numerator().get_si();
      lifted.add(n, VirtualCharacter::from_function(tc.ext.group, [&](Elem x) {
        const long j = static_cast<long>(tc.ext.root_part(x));
        return Cyclotomic::root_of_unity(den, mod(num * j, den)) * chi.at(tc.ext.base_part(x));
      }));
    }
    tc.series = lifted.reduced();
    out.push_back(std::move(tc));
  }
  return out;
}

bool theta_rotation_holds(const ThetaComponent& c) {
  const FinGroup& e = *c.ext.group;
  for (const auto& [n, chi] : c.series.terms()) {
    const Rational b = c.series.exponent(n);
    const long den = b.denominator().get_si(), num = b.numerator().get_si();
    const Cyclotomic z = Cyclotomic::root_of_unity(den, mod(num, den));
    for (std::size_t k = 0; k < e.class_count(); ++k) {
      const Elem x = e.class_rep(k);
      if (chi.at(e.mul(c.ext.phi, x)) != z * chi.at(x)) return false;
    }
  }
  return true;
}

}  // namespace tatek
