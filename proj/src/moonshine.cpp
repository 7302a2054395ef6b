#include "tatek/moonshine.hpp"

#include <algorithm>

namespace tatek {

namespace {

ScalarSeries one_series() { return ScalarSeries::monomial(Cyclotomic(1), Rational(0)); }

void require_integral_exponents(const ScalarSeries& f, const char* what) {
  if (f.reduced().denominator() != 1) throw std::invalid_argument(std::string(what) + ": exponents must be integers");
}

// sum_{ad=m} (1/a) sum_j coeff(jd, a) q^{aj}
template <class CoeffAt>
ScalarSeries hecke_sum(const std::map<long, long>& support, const Bound& known, long m, CoeffAt coeff) {
  ScalarSeries out(1, known.scaled(Rational(1, m)));
  for (long d = 1; d <= m; ++d) {
    if (m % d) continue;
    const long a = m / d;
    for (const auto& [n, unused] : support) {
      if (mod(n, d)) continue;
      out.add(a * (n / d), coeff(n, a) * Rational(1, a));
    }
  }
  return out;
}

// The coefficient of q^e in s, treating absent terms as 0.
Cyclotomic coefficient(const ScalarSeries& s, long e) {
  const Cyclotomic* c = s.find(Rational(e));
  return c ? *c : Cyclotomic(0);
}

std::optional<Mismatch> compare_range(const ScalarSeries& lhs, const ScalarSeries& rhs, long from, long to) {
  for (long e = from; e <= to; ++e) {
    const Cyclotomic l = coefficient(lhs, e), r = coefficient(rhs, e);
    if (l != r) return Mismatch{Rational(e), l, r};
  }
  return std::nullopt;
}

long lowest_exponent(const ScalarSeries& s, long fallback) {
  if (s.empty()) return fallback;
  return std::min(fallback, s.exponent(s.terms().begin()->first).floor().get_si());
}

}  // namespace

McKayThompson McKayThompson::from_scalar(const ScalarSeries& f) {
  require_integral_exponents(f, "McKay-Thompson series");
  const GroupPtr g = trivial_group();
  return {g, f.reduced().map_coefficients([&](const Cyclotomic& c) { return VirtualCharacter::constant(g, c); })};
}

McKayThompson McKayThompson::from_tate(const TateElement& f) {
  const CharSeries& s = f.component(0);
  if (s.reduced().denominator() != 1) throw std::invalid_argument("McKay-Thompson series: exponents must be integers");
  return {f.context()->centralizers[0].group, s.reduced()};
}

ScalarSeries McKayThompson::thompson(Elem h) const {
  if (h >= group->order()) throw std::invalid_argument("element out of range");
  return series.map_coefficients([&](const VirtualCharacter& chi) { return chi.at(h); });
}

ScalarSeries j_oracle(long order) {
  if (order < 0) throw std::invalid_argument("j_oracle: order must be non-negative");
  if (static_cast<std::size_t>(order) > default_element_cap()) throw CapExceeded("j_oracle: order exceeds the cap");
  using RS = QSeries<Rational>;
  const long len = order + 1;  // work below q^len, then shift by q^-1
  const Bound b(len);
  // prod_{n>=1} (1 - q^n), raised to the 24th power
  RS eta(1, b);
  eta.add(0, Rational(1));
  for (long n = 1; n < len; ++n) {
    RS factor(1, b);
    factor.add(0, Rational(1));
    factor.add(n, Rational(-1));
    eta = eta * factor;
  }
  RS eta24(1, b);
  eta24.add(0, Rational(1));
  RS sq = eta;
  for (int e = 24; e > 0; e >>= 1) {
    if (e & 1) eta24 = eta24 * sq;
    sq = sq * sq;
  }
  RS e4(1, b);
  e4.add(0, Rational(1));
  for (long n = 1; n < len; ++n) {
    long sigma3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma3 += d * d * d;
    e4.add(n, Rational(240 * sigma3));
  }
  RS j = e4 * e4 * e4 * invert(eta24) * RS::monomial(Rational(1), Rational(-1));
  j.add(0, Rational(-744));
  return j.map_coefficients([](const Rational& r) { return Cyclotomic(r); });
}

std::vector<FaberPolynomial> faber(const ScalarSeries& f, long m_max) {
  if (m_max < 1) return {};
  require_integral_exponents(f, "faber");
  const ScalarSeries fr = f.reduced();
  if (fr.empty() || fr.terms().begin()->first != -1 || fr.terms().begin()->second != Cyclotomic(1))
    throw std::invalid_argument("faber: series must start with q^-1");
  if (!fr.known_below().covers(Rational(m_max - 1)))
    throw PrecisionError("faber: series must be known below q^" + std::to_string(m_max));
  using P = FaberPolynomial;
  const P one = P::constant(Cyclotomic(1));
  // t (F(t) - w) = 1 + (a_0 - w) t + a_1 t^2 + ...
  TSeries<P> s(static_cast<std::size_t>(m_max), P{});
  s.coeffs[0] = one;
  s.coeffs[1] = P::constant(coefficient(fr, 0)) - P::monomial(Cyclotomic(1), 1);
  for (long n = 1; n + 1 <= m_max; ++n) s.coeffs[n + 1] = P::constant(coefficient(fr, n));
  const auto l = tlog(s);
  std::vector<P> out;
  for (long m = 1; m <= m_max; ++m) {
    out.push_back(l.coeffs[m].scaled(Rational(-m)));
    if (!faber_characterization_holds(out.back(), m, fr))
      throw ArithmeticError("faber: Phi_" + std::to_string(m) + " fails its characterization");
  }
  return out;
}

bool faber_characterization_holds(const FaberPolynomial& phi, long m, const ScalarSeries& f) {
  const ScalarSeries v = evaluate(phi, f, one_series());
  ScalarSeries expected(1);
  expected.add(-m, Cyclotomic(1));
  return !compare_range(v, expected, std::min(-m, lowest_exponent(v, -m)), 0);
}

ScalarSeries hecke_classical(const ScalarSeries& f, long m) {
  if (m < 1) throw std::invalid_argument("Hecke operators need m >= 1");
  require_integral_exponents(f, "hecke_classical");
  const ScalarSeries fr = f.reduced();
  std::map<long, long> support;
  for (const auto& [n, c] : fr.terms()) support.emplace(n, 0);
  return hecke_sum(support, fr.known_below(), m, [&](long n, long) { return fr.terms().at(n); });
}

McKayThompson replicate(const McKayThompson& f, long a) {
  return {f.group, f.series.map_coefficients([&](const VirtualCharacter& chi) { return adams(chi, a); })};
}

ScalarSeries replicable_hecke(const McKayThompson& f, Elem h, long m) {
  if (m < 1) throw std::invalid_argument("Hecke operators need m >= 1");
  const CharSeries s = f.series.reduced();
  if (s.denominator() != 1) throw std::invalid_argument("replicable_hecke: exponents must be integers");
  std::map<long, long> support;
  for (const auto& [n, c] : s.terms()) support.emplace(n, 0);
  const FinGroup& g = *f.group;
  return hecke_sum(support, s.known_below(), m, [&](long n, long a) { return s.terms().at(n).at(g.pow(h, a)); });
}

bool ReplicabilityReport::replicable() const {
  return std::all_of(faber_vs_hecke.begin(), faber_vs_hecke.end(), [](const auto& v) { return v.pass; }) &&
         std::all_of(two_variable.begin(), two_variable.end(), [](const auto& v) { return v.pass; });
}

ReplicabilityReport replicability_check(const McKayThompson& f, long m_max, long q_bound) {
  if (m_max < 1) throw std::invalid_argument("replicability_check: m_max must be positive");
  ReplicabilityReport report{m_max, q_bound, {}, {}};
  const FinGroup& g = *f.group;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const Elem h = g.class_rep(c);
    const ScalarSeries fh = f.thompson(h).reduced();
    const auto phis = faber(fh, m_max);
    std::vector<ScalarSeries> hecke_terms;
    for (long m = 1; m <= m_max + 1; ++m) hecke_terms.push_back(replicable_hecke(f, h, m));

    for (long m = 1; m <= m_max; ++m) {
      const ScalarSeries lhs = evaluate(phis[m - 1], fh, one_series());
      const ScalarSeries rhs = hecke_terms[m - 1].scaled(Rational(m));
      const long from = std::min({-m, lowest_exponent(lhs, -m), lowest_exponent(rhs, -m)});
      const auto mismatch = compare_range(lhs, rhs, from, q_bound);
      report.faber_vs_hecke.push_back({c, h, m, !mismatch, mismatch});
    }

    // Lambda_{-t} = exp(-sum_m T_m t^m); t^{-1} Lambda_{-t} against F(t) - F(q).
    TSeries<ScalarSeries> log_part(static_cast<std::size_t>(m_max + 1), ScalarSeries());
    for (long m = 1; m <= m_max + 1; ++m) log_part.coeffs[m] = -hecke_terms[m - 1];
    const auto lambda = texp(log_part, one_series());
    TwoVariableVerdict tv{c, h, true, std::nullopt, std::nullopt};
    for (long k = -1; k <= m_max && tv.pass; ++k) {
      ScalarSeries lhs(1);
      if (k == -1) lhs = one_series();
      else if (k == 0) lhs = ScalarSeries::monomial(coefficient(fh, 0), Rational(0)) - fh;
      else lhs = ScalarSeries::monomial(coefficient(fh, k), Rational(0));
      const ScalarSeries& rhs = lambda.coeffs[static_cast<std::size_t>(k + 1)];
      const long from = std::min({-(m_max + 1), lowest_exponent(lhs, -1), lowest_exponent(rhs, -1)});
      if (auto mismatch = compare_range(lhs, rhs, from, q_bound)) {
        tv.pass = false;
        tv.t_exponent = k;
        tv.first_mismatch = mismatch;
      }
    }
    report.two_variable.push_back(tv);
  }
  return report;
}

}  // namespace tatek
