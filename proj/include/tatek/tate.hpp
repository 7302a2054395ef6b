// Elements of equivariant Tate K-theory of pt//G: for each conjugacy class
// [g] a q-series of virtual characters of the centralizer C_G(g), exponents
// in (1/|g|)Z, subject to the rotation condition. Operations: beta_k, Adams,
// Hecke, symmetric and exterior powers, induction and the root map s_k.
#pragma once

#include "tatek/charring.hpp"
#include "tatek/groups.hpp"
#include "tatek/qgraded.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace tatek {

class TateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Conjugacy data of G shared by all elements over G.
struct TateContext {
  GroupPtr group;
  std::vector<Subgroup> centralizers;  // per class, centralizer of the class representative
  std::vector<Elem> conjugator;        // per element g, least s with s g s^-1 = rep[g]

  std::size_t class_count() const { return centralizers.size(); }
  Elem rep(std::size_t c) const { return group->class_rep(c); }
  std::size_t rep_order(std::size_t c) const { return group->element_order(rep(c)); }
};

using TateContextPtr = std::shared_ptr<const TateContext>;

TateContextPtr make_tate_context(const GroupPtr& g);

using CharSeries = QSeries<VirtualCharacter>;
using ScalarSeries = QSeries<Cyclotomic>;

class TateElement {
 public:
  TateElement() = default;
  TateElement(TateContextPtr ctx, std::vector<CharSeries> components);

  static TateElement zero(const TateContextPtr& ctx, const Bound& known_below = {});
  /// d times the trivial character in degree 0 on every component.
  static TateElement constant(const TateContextPtr& ctx, const Cyclotomic& d);
  static TateElement one(const TateContextPtr& ctx) { return constant(ctx, Cyclotomic(1)); }
  /// A G-representation: at [g] its restriction to C_G(g) split into
  /// g-eigenspaces, the exp(2 pi i a)-part placed in degree a in [0, 1).
  static TateElement from_representation(const TateContextPtr& ctx, const VirtualCharacter& chi);

  const TateContextPtr& context() const { return ctx_; }
  const std::vector<CharSeries>& components() const { return comps_; }
  const CharSeries& component(std::size_t c) const { return comps_.at(c); }
  Bound known_below() const;
  /// Some component has a negative exponent.
  bool is_laurent() const;

  TateElement truncated(const Bound& e) const;
  TateElement scaled(const Rational& r) const;

  friend TateElement operator+(const TateElement& a, const TateElement& b);
  friend TateElement operator-(const TateElement& a, const TateElement& b);
  friend TateElement operator*(const TateElement& a, const TateElement& b);
  friend bool operator==(const TateElement& a, const TateElement& b);
  friend bool operator!=(const TateElement& a, const TateElement& b) { return !(a == b); }

 private:
  void share_bound();

  TateContextPtr ctx_;
  std::vector<CharSeries> comps_;
};

template <>
struct Coeff<TateElement> {
  static bool is_zero(const TateElement& t);
  static TateElement scale(const TateElement& t, const Rational& r) { return t.scaled(r); }
  static TateElement inverse(const TateElement& t);
  static TateElement one_like(const TateElement& t) { return TateElement::one(t.context()); }
};

struct RotationViolation {
  std::size_t cls = 0;
  Elem g = 0;
  Rational exponent;
  Elem h = 0;  // ambient element where chi(g h) != exp(2 pi i a) chi(h)
};

/// First violation of the rotation condition, by class then exponent then h.
std::optional<RotationViolation> validate_rotation(const TateElement& f);

/// F(g, h; q) for commuting g, h: the [g] component evaluated at h.
ScalarSeries character_eval(const TateElement& f, Elem g, Elem h);

/// Assembles an element from scalar series for each class c and each class of
/// C_G(rep c), given by its representative as an ambient element.
template <class Fn>
TateElement from_character_values(const TateContextPtr& ctx, const Bound& known_below, Fn fn);

/// beta_k: restrict the [g^k] component to C_G(g), rescale exponents by 1/k
/// and project onto the matching eigenspaces of g. Bound E/k.
TateElement beta(const TateElement& f, long k);
/// (1/k) sum_{b<k} F(g^k, g^-b h; (tau + b)/k)
TateElement beta_by_characters(const TateElement& f, long k);

/// Coefficient chi at q^a becomes psi_m chi at q^{m a}. Bound m E.
TateElement adams_tate(const TateElement& f, long m);

/// T_m = sum_{a d = m} (1/a) psi_a beta_d. Bound E/m.
TateElement hecke(const TateElement& f, long m);
/// (1/m) sum_{a d = m} sum_{b<d} F(g^d, g^-b h^a; (a tau + b)/d)
TateElement hecke_by_characters(const TateElement& f, long m);

using TateTSeries = TSeries<TateElement>;

/// exp(sum_m psi_m(F) t^m / m) to t^order.
TateTSeries atiyah_symmetric_tate(const TateElement& f, std::size_t order);
/// prod_k S^Atiyah_{t^k}(beta_k F)
TateTSeries symmetric_tate_product(const TateElement& f, std::size_t order);
/// exp(sum_m T_m(F) t^m)
TateTSeries symmetric_tate_hecke(const TateElement& f, std::size_t order);
/// (S^Tate_{-t} F)^-1
TateTSeries exterior_tate_inverse(const TateElement& f, std::size_t order);
/// exp(-sum_m T_m(F) t^m) at t -> -t
TateTSeries exterior_tate_hecke(const TateElement& f, std::size_t order);

/// Coefficientwise comparison after truncating both sides to their common bound.
bool agree_to_common_bound(const TateTSeries& a, const TateTSeries& b);
bool agree_to_common_bound(const TateElement& a, const TateElement& b);

/// Induction along pt//H -> pt//G by the averaged character formula
/// (1/|H|) sum over s with s^-1 g s, s^-1 h s in H of F(s^-1 g s, s^-1 h s).
/// `h` is H as a subgroup of G; f lives over h.group.
TateElement induction_tate(const TateElement& f, const Subgroup& h, const TateContextPtr& g_ctx);
/// Sum over the H-classes fusing into [g] of ind from C_H to C_G of the component.
TateElement induction_tate_centralizer(const TateElement& f, const Subgroup& h, const TateContextPtr& g_ctx);

/// The [g] component of s_k: exponents divided by k, coefficients lifted to
/// C_G(g) with a k-th root of g adjoined, chi^(h, j) = exp(2 pi i a j / k) chi(h).
struct ThetaComponent {
  RootExtension ext;
  CharSeries series;
};

std::vector<ThetaComponent> s_map_theta(const TateElement& f, long k);
/// The lifted coefficient at q^b is an exp(2 pi i b)-eigenvector of the adjoined root.
bool theta_rotation_holds(const ThetaComponent& c);

// ---------------------------------------------------------------------------

template <class Fn>
TateElement from_character_values(const TateContextPtr& ctx, const Bound& known_below, Fn fn) {
  std::vector<CharSeries> comps;
  for (std::size_t c = 0; c < ctx->class_count(); ++c) {
    const Subgroup& cent = ctx->centralizers[c];
    const FinGroup& cg = *cent.group;
    const long r = static_cast<long>(ctx->rep_order(c));
    std::map<long, VirtualCharacter> terms;
    Bound bound = known_below;
    for (std::size_t k = 0; k < cg.class_count(); ++k) {
      const ScalarSeries s = fn(c, cent.to_ambient[cg.class_rep(k)]);
      bound = min(bound, s.known_below());
      for (const auto& [n, v] : s.terms()) {
        const Rational e = s.exponent(n) * Rational(r);
        if (!e.is_integer()) throw TateError("character values have an exponent outside (1/|g|)Z");
        auto it = terms.try_emplace(e.to_long(), VirtualCharacter::zero(cent.group)).first;
        it->second.values[k] += v;
      }
    }
    CharSeries out(r, bound);
    for (const auto& [n, chi] : terms) out.add(n, chi);
    comps.push_back(out.reduced());
  }
  return {ctx, std::move(comps)};
}

}  // namespace tatek
