// Truncated Laurent series in q with exponents in (1/N)Z and explicit
// precision bounds, truncated power series in a formal variable t, and
// polynomials in a formal variable w.
#pragma once

#include "tatek/charring.hpp"
#include "tatek/exactnum.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatek {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent bound: a rational or +infinity (series known exactly).
class Bound {
 public:
  Bound() = default;  // infinity
  Bound(Rational v) : value_(std::move(v)), finite_(true) {}  // NOLINT(google-explicit-constructor)
  Bound(long v) : Bound(Rational(v)) {}                          // NOLINT(google-explicit-constructor)

  static Bound infinity() { return {}; }
  static Bound parse(const std::string& s);

  bool is_infinite() const { return !finite_; }
  const Rational& value() const;
  /// exponent e is below the bound
  bool covers(const Rational& e) const { return !finite_ || e < value_; }
  Bound scaled(const Rational& positive) const { return finite_ ? Bound(value_ * positive) : Bound(); }
  std::string str() const { return finite_ ? value_.str() : "inf"; }

  friend Bound min(const Bound& a, const Bound& b);
  friend Bound operator+(const Bound& a, const Bound& b);
  friend bool operator==(const Bound& a, const Bound& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator<(const Bound& a, const Bound& b) { return a.finite_ && (!b.finite_ || a.value_ < b.value_); }
  friend bool operator<=(const Bound& a, const Bound& b) { return !(b < a); }

 private:
  Rational value_;
  bool finite_ = false;
};

/// Coefficient ring operations beyond +, -, *.
template <class C>
struct Coeff;

template <>
struct Coeff<Rational> {
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static Rational scale(const Rational& c, const Rational& r) { return c * r; }
  static Rational inverse(const Rational& c) { return Rational(1) / c; }
  static Rational one_like(const Rational&) { return Rational(1); }
};

template <>
struct Coeff<Cyclotomic> {
  static bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
  static Cyclotomic scale(const Cyclotomic& c, const Rational& r) { return c * r; }
  static Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }
  static Cyclotomic one_like(const Cyclotomic&) { return Cyclotomic(1); }
};

template <>
struct Coeff<VirtualCharacter> {
  static bool is_zero(const VirtualCharacter& c);
  static VirtualCharacter scale(const VirtualCharacter& c, const Rational& r) { return c * Cyclotomic(r); }
  /// Pointwise inverse; throws ArithmeticError if some value vanishes.
  static VirtualCharacter inverse(const VirtualCharacter& c);
  static VirtualCharacter one_like(const VirtualCharacter& c) { return VirtualCharacter::trivial(c.group); }
};

/// Sum of c_n q^{n/N} over stored n, exact for exponents below known_below.
template <class C>
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(long denominator, Bound known_below = {}) : den_(denominator), known_(std::move(known_below)) {
    if (den_ <= 0) throw std::invalid_argument("series denominator must be positive");
  }
  static QSeries monomial(const C& c, const Rational& exponent, Bound known_below = {}) {
    QSeries s(exponent.denominator().get_si(), std::move(known_below));
    s.add(exponent.numerator().get_si(), c);
    return s;
  }

  long denominator() const { return den_; }
  const std::map<long, C>& terms() const { return terms_; }
  const Bound& known_below() const { return known_; }
  Rational exponent(long num) const { return Rational(num, den_); }
  bool empty() const { return terms_.empty(); }

  /// min(least stored exponent, known_below)
  Bound low() const {
    if (terms_.empty()) return known_;
    return min(known_, Bound(exponent(terms_.begin()->first)));
  }

  /// Adds c q^{num/N}; terms at or above the bound are dropped.
  void add(long num, const C& c) {
    if (!known_.covers(exponent(num))) return;
    auto it = terms_.find(num);
    if (it == terms_.end()) {
      if (!Coeff<C>::is_zero(c)) terms_.emplace(num, c);
      return;
    }
    it->second += c;
    if (Coeff<C>::is_zero(it->second)) terms_.erase(it);
  }

  /// Coefficient at exponent e, or nullptr if zero; throws if e is not covered.
  const C* find(const Rational& e) const {
    if (!known_.covers(e)) throw PrecisionError("coefficient at q^" + e.str() + " is beyond the known bound " + known_.str());
    const Rational n = e * Rational(den_);
    if (!n.is_integer()) return nullptr;
    const auto it = terms_.find(n.to_long());
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Same series over the denominator m (a multiple of the current one).
  QSeries with_denominator(long m) const {
    if (m % den_ != 0) throw std::invalid_argument("new denominator must be a multiple of the old one");
    QSeries out(m, known_);
    for (const auto& [n, c] : terms_) out.terms_.emplace(n * (m / den_), c);
    return out;
  }

  /// Smallest denominator that still expresses every stored exponent.
  QSeries reduced() const {
    long g = den_;
    for (const auto& [n, c] : terms_) g = gcd(g, n);
    if (g == 1) return *this;
    QSeries out(den_ / g, known_);
    for (const auto& [n, c] : terms_) out.terms_.emplace(n / g, c);
    return out;
  }

  QSeries truncated(const Bound& e) const {
    QSeries out(den_, min(known_, e));
    for (const auto& [n, c] : terms_)
      if (out.known_.covers(exponent(n))) out.terms_.emplace(n, c);
    return out;
  }

  template <class Fn>
  auto map_coefficients(Fn fn) const {
    using D = decltype(fn(std::declval<const C&>()));
    QSeries<D> out(den_, known_);
    for (const auto& [n, c] : terms_) out.add(n, fn(c));
    return out;
  }

  QSeries scaled(const Rational& r) const {
    return map_coefficients([&](const C& c) { return Coeff<C>::scale(c, r); });
  }

  /// q^{n/N} -> q^{a n / N}, a > 0; the bound scales by a.
  QSeries rescaled(const Rational& a) const {
    if (a.sign() <= 0) throw std::invalid_argument("exponent scale must be positive");
    const long p = a.numerator().get_si(), r = a.denominator().get_si();
    QSeries out(den_ * r, known_.scaled(a));
    for (const auto& [n, c] : terms_) out.add(n * p, c);
    return out.reduced();
  }

  QSeries operator-() const { return scaled(Rational(-1)); }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, false); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, true); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const long m = lcm(a.den_, b.den_);
    const QSeries x = a.with_denominator(m), y = b.with_denominator(m);
    const Bound bound = min(x.known_ + y.low(), y.known_ + x.low());
    QSeries out(m, bound);
    for (const auto& [i, ci] : x.terms_)
      for (const auto& [j, cj] : y.terms_) out.add(i + j, ci * cj);
    return out.reduced();
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    if (!(a.known_ == b.known_)) return false;
    const QSeries x = a.reduced(), y = b.reduced();
    return x.den_ == y.den_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

 private:
  static QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
    const long m = lcm(a.den_, b.den_);
    QSeries out(m, min(a.known_, b.known_));
    const QSeries x = a.with_denominator(m), y = b.with_denominator(m);
    for (const auto& [n, c] : x.terms_) out.add(n, c);
    for (const auto& [n, c] : y.terms_) out.add(n, subtract ? Coeff<C>::scale(c, Rational(-1)) : c);
    return out.reduced();
  }

  long den_ = 1;
  std::map<long, C> terms_;
  Bound known_;
};

/// Multiplicative inverse. The leading coefficient must be a unit; for an
/// input known below E with leading exponent e the result is known below
/// E - 2e. `target` bounds the work when the input is exact but not a
/// monomial (the expansion would not terminate otherwise).
template <class C>
QSeries<C> invert(const QSeries<C>& f, const Bound& target = {}) {
  if (f.empty()) throw ArithmeticError("invert: series has no known leading term");
  const long den = f.denominator();
  const long n0 = f.terms().begin()->first;
  const Rational e0 = f.exponent(n0);
  Bound out_bound = min(f.known_below() + Bound(-e0 - e0), target);
  if (f.terms().size() > 1 && out_bound.is_infinite())
    throw PrecisionError("invert: exact non-monomial series needs a target bound");
  const C inv0 = Coeff<C>::inverse(f.terms().begin()->second);
  QSeries<C> out(den, out_bound);
  if (f.terms().size() == 1) {
    out.add(-n0, inv0);
    return out;
  }
  // g_{-n0+j} = inv0 * (delta_j0 - sum_{i=1..j} f_{n0+i} g_{-n0+j-i})
  const Rational span = (out_bound.value() + e0) * Rational(den);
  const long steps = span.is_integer() ? span.to_long() : span.floor().get_si() + 1;
  std::vector<std::optional<C>> g(static_cast<std::size_t>(std::max(0L, steps)));
  for (long j = 0; j < steps; ++j) {
    std::optional<C> acc;
    for (const auto& [n, c] : f.terms()) {
      const long i = n - n0;
      if (i == 0) continue;
      if (i > j) break;
      if (!g[j - i]) continue;
      C term = c * *g[j - i];
      if (acc) *acc += term;
      else acc = std::move(term);
    }
    if (j == 0) {
      g[0] = inv0;
    } else if (acc) {
      g[j] = Coeff<C>::scale(inv0 * *acc, Rational(-1));
    }
    if (g[j]) out.add(j - n0, *g[j]);
  }
  return out.reduced();
}

/// exp(f) for f with all exponents positive; known below the input bound.
template <class C>
QSeries<C> exp(const QSeries<C>& f, const C& one) {
  if (!f.empty() && f.terms().begin()->first <= 0) throw ArithmeticError("exp: series must have positive exponents");
  if (f.known_below().is_infinite() && !f.empty())
    throw PrecisionError("exp: exact non-zero series needs a finite bound");
  QSeries<C> out(f.denominator(), f.known_below());
  out.add(0, one);
  if (f.empty()) return out;
  // n e_n = sum_k k f_k e_{n-k} in numerator units
  const Rational span = f.known_below().value() * Rational(f.denominator());
  const long steps = span.is_integer() ? span.to_long() : span.floor().get_si() + 1;
  std::vector<std::optional<C>> e(static_cast<std::size_t>(std::max(1L, steps)));
  e[0] = one;
  for (long n = 1; n < steps; ++n) {
    std::optional<C> acc;
    for (const auto& [k, c] : f.terms()) {
      if (k > n) break;
      if (!e[n - k]) continue;
      C term = Coeff<C>::scale(c * *e[n - k], Rational(k));
      if (acc) *acc += term;
      else acc = std::move(term);
    }
    if (acc) {
      e[n] = Coeff<C>::scale(*acc, Rational(1, n));
      out.add(n, *e[n]);
    }
  }
  return out.reduced();
}

/// log(f) for f = 1 + (positive exponents).
template <class C>
QSeries<C> log(const QSeries<C>& f) {
  if (f.empty() || f.terms().begin()->first != 0) throw ArithmeticError("log: constant term must be 1");
  const C& c0 = f.terms().begin()->second;
  if (!(c0 == Coeff<C>::one_like(c0))) throw ArithmeticError("log: constant term must be 1");
  QSeries<C> out(f.denominator(), f.known_below());
  if (f.terms().size() == 1) return out;
  if (f.known_below().is_infinite()) throw PrecisionError("log: exact non-constant series needs a finite bound");
  const Rational span = f.known_below().value() * Rational(f.denominator());
  const long steps = span.is_integer() ? span.to_long() : span.floor().get_si() + 1;
  // n f_n = sum_{k=1..n} k l_k f_{n-k}
  std::vector<std::optional<C>> l(static_cast<std::size_t>(std::max(1L, steps)));
  for (long n = 1; n < steps; ++n) {
    std::optional<C> acc;
    if (const auto it = f.terms().find(n); it != f.terms().end()) acc = Coeff<C>::scale(it->second, Rational(n));
    for (long k = 1; k < n; ++k) {
      if (!l[k]) continue;
      const auto it = f.terms().find(n - k);
      if (it == f.terms().end()) continue;
      C term = Coeff<C>::scale(*l[k] * it->second, Rational(-k));
      if (acc) *acc += term;
      else acc = std::move(term);
    }
    if (acc) {
      l[n] = Coeff<C>::scale(*acc, Rational(1, n));
      out.add(n, *l[n]);
    }
  }
  return out.reduced();
}

/// q^{n/N} -> zeta^n q^{a n/N} with zeta = exp(2 pi i root_k / root_order):
/// the expansion of tau -> (a' tau + b)/d for a = a'/d, zeta = zeta_{N d}^{b}.
template <class C>
QSeries<C> twist_substitute(const QSeries<C>& f, const Rational& a, long root_order, long root_k) {
  if (a.sign() <= 0) throw std::invalid_argument("twist_substitute: scale must be positive");
  const long p = a.numerator().get_si(), r = a.denominator().get_si();
  QSeries<C> out(f.denominator() * r, f.known_below().scaled(a));
  for (const auto& [n, c] : f.terms()) out.add(n * p, c * Cyclotomic::root_of_unity(root_order, mod(root_k * (n % root_order), root_order)));
  return out.reduced();
}

template <class C>
struct Coeff<QSeries<C>> {
  static bool is_zero(const QSeries<C>& s) { return s.empty(); }
  static QSeries<C> scale(const QSeries<C>& s, const Rational& r) { return s.scaled(r); }
  static QSeries<C> inverse(const QSeries<C>& s) { return invert(s); }
};

// ---------------------------------------------------------------------------
// Polynomials in w.

template <class C>
struct Poly {
  std::vector<C> coeffs;  // coeffs[i] is the coefficient of w^i; no trailing zeros

  static Poly constant(const C& c) { return Poly{{c}}.trimmed(); }
  static Poly monomial(const C& c, std::size_t deg) {
    Poly p;
    p.coeffs.assign(deg + 1, Coeff<C>::scale(c, Rational(0)));
    p.coeffs[deg] = c;
    return p.trimmed();
  }

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Poly trimmed() const {
    Poly p = *this;
    while (!p.coeffs.empty() && Coeff<C>::is_zero(p.coeffs.back())) p.coeffs.pop_back();
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a.coeffs.size() >= b.coeffs.size() ? a : b;
    const Poly& other = a.coeffs.size() >= b.coeffs.size() ? b : a;
    for (std::size_t i = 0; i < other.coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    return out.trimmed();
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(Rational(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return Poly{};
    Poly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Coeff<C>::scale(a.coeffs[0], Rational(0)));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out.trimmed();
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly scaled(const Rational& r) const {
    Poly out = *this;
    for (auto& c : out.coeffs) c = Coeff<C>::scale(c, r);
    return out.trimmed();
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.trimmed().coeffs == b.trimmed().coeffs; }
};

template <class C>
struct Coeff<Poly<C>> {
  static bool is_zero(const Poly<C>& p) { return p.trimmed().coeffs.empty(); }
  static Poly<C> scale(const Poly<C>& p, const Rational& r) { return p.scaled(r); }
  static Poly<C> inverse(const Poly<C>& p) {
    const Poly<C> t = p.trimmed();
    if (t.coeffs.size() != 1) throw ArithmeticError("only constant polynomials are invertible");
    return Poly<C>::constant(Coeff<C>::inverse(t.coeffs[0]));
  }
  static Poly<C> one_like(const Poly<C>&) { return Poly<C>::constant(C(1)); }
};

/// p(x) by Horner's rule; `one` is the unit of the series ring.
template <class C, class S>
S evaluate(const Poly<C>& p, const S& x, const S& one) {
  S acc = one.scaled(Rational(0));
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + one.map_coefficients([&](const auto& u) { return u * *it; });
  return acc;
}

// ---------------------------------------------------------------------------
// Truncated power series in t.

/// coeffs[n] is the coefficient of t^n for n <= order(); higher terms unknown.
template <class C>
struct TSeries {
  std::vector<C> coeffs;
  C zero;

  TSeries(std::size_t order, C zero_value) : coeffs(order + 1, zero_value), zero(std::move(zero_value)) {}
  std::size_t order() const { return coeffs.size() - 1; }

  friend TSeries operator+(const TSeries& a, const TSeries& b) {
    TSeries out(std::min(a.order(), b.order()), a.zero);
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs[n] = a.coeffs[n] + b.coeffs[n];
    return out;
  }
  friend TSeries operator-(const TSeries& a, const TSeries& b) { return a + b.scaled(Rational(-1)); }
  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    TSeries out(std::min(a.order(), b.order()), a.zero);
    for (std::size_t n = 0; n <= out.order(); ++n)
      for (std::size_t i = 0; i <= n; ++i) out.coeffs[n] = out.coeffs[n] + a.coeffs[i] * b.coeffs[n - i];
    return out;
  }
  TSeries scaled(const Rational& r) const {
    TSeries out = *this;
    for (auto& c : out.coeffs) c = Coeff<C>::scale(c, r);
    return out;
  }
  /// t -> c t^k (c = +1 or -1), truncated at the same order
  TSeries substitute_power(std::size_t k, int sign = 1) const {
    TSeries out(order(), zero);
    for (std::size_t n = 0; n * k <= order(); ++n)
      out.coeffs[n * k] = (sign < 0 && n % 2) ? Coeff<C>::scale(coeffs[n], Rational(-1)) : coeffs[n];
    return out;
  }
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs == b.coeffs; }
};

/// exp(f) for f with zero constant term: e_n = (1/n) sum_k k f_k e_{n-k}.
template <class C>
TSeries<C> texp(const TSeries<C>& f, const C& one) {
  TSeries<C> out(f.order(), f.zero);
  out.coeffs[0] = one;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc = f.zero;
    for (std::size_t k = 1; k <= n; ++k) acc = acc + Coeff<C>::scale(f.coeffs[k] * out.coeffs[n - k], Rational(static_cast<long>(k)));
    out.coeffs[n] = Coeff<C>::scale(acc, Rational(1, static_cast<long>(n)));
  }
  return out;
}

/// log(f) for f with constant term one: l_n = f_n - (1/n) sum_{k<n} k l_k f_{n-k}.
template <class C>
TSeries<C> tlog(const TSeries<C>& f) {
  if (!(f.coeffs[0] == Coeff<C>::one_like(f.coeffs[0]))) throw ArithmeticError("tlog: constant term must be 1");
  TSeries<C> out(f.order(), f.zero);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc = f.zero;
    for (std::size_t k = 1; k < n; ++k) acc = acc + Coeff<C>::scale(out.coeffs[k] * f.coeffs[n - k], Rational(static_cast<long>(k)));
    out.coeffs[n] = f.coeffs[n] - Coeff<C>::scale(acc, Rational(1, static_cast<long>(n)));
  }
  return out;
}

/// 1/f for f with invertible constant term: g_n = -g_0 sum_{k=1..n} f_k g_{n-k}.
template <class C>
TSeries<C> tinverse(const TSeries<C>& f) {
  TSeries<C> out(f.order(), f.zero);
  out.coeffs[0] = Coeff<C>::inverse(f.coeffs[0]);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc = f.zero;
    for (std::size_t k = 1; k <= n; ++k) acc = acc + f.coeffs[k] * out.coeffs[n - k];
    out.coeffs[n] = Coeff<C>::scale(out.coeffs[0] * acc, Rational(-1));
  }
  return out;
}

}  // namespace tatek
