// McKay-Thompson series: Faber polynomials, the weight-0 Hecke operators built
// from coefficient Adams replicates, the j-function, and replicability checks.
#pragma once

#include "tatek/qgraded.hpp"
#include "tatek/tate.hpp"

#include <optional>
#include <vector>

namespace tatek {

/// A graded virtual character sum_n chi_n q^n of G (integral exponents). Its
/// value at h is the Thompson series sum_n chi_n(h) q^n.
struct McKayThompson {
  GroupPtr group;
  CharSeries series;

  static McKayThompson from_scalar(const ScalarSeries& f);
  /// The identity component of a Tate element.
  static McKayThompson from_tate(const TateElement& f);

  ScalarSeries thompson(Elem h) const;
};

using FaberPolynomial = Poly<Cyclotomic>;

/// j - 744 from E_4^3 / Delta, known below `order`.
ScalarSeries j_oracle(long order);

/// Phi_1..Phi_{m_max} from -sum_m Phi_m(w) t^m / m = log(t (F(t) - w)).
/// F must be q^-1 + a_0 + a_1 q + ... known below at least m_max. Each Phi_m
/// is checked against Phi_m(F(q)) = q^-m + O(q); ArithmeticError otherwise.
std::vector<FaberPolynomial> faber(const ScalarSeries& f, long m_max);
/// Phi(F(q)) - q^-m vanishes in degrees <= 0.
bool faber_characterization_holds(const FaberPolynomial& phi, long m, const ScalarSeries& f);

/// sum_{ad=m} (1/a) sum_j c_{jd} q^{aj}; known below E/m.
ScalarSeries hecke_classical(const ScalarSeries& f, long m);

/// Coefficient-only Adams: chi_n -> psi_a chi_n, exponents unchanged.
McKayThompson replicate(const McKayThompson& f, long a);

/// T_m(F)(h) = sum_{ad=m} (1/a) sum_j c_{jd}(h^a) q^{aj}, the Hecke operator
/// through the replicates F^(a).
ScalarSeries replicable_hecke(const McKayThompson& f, Elem h, long m);

struct Mismatch {
  Rational exponent;
  Cyclotomic lhs;
  Cyclotomic rhs;
};

struct FaberHeckeVerdict {
  std::size_t cls = 0;
  Elem h = 0;
  long m = 0;
  bool pass = true;
  std::optional<Mismatch> first_mismatch;
};

struct TwoVariableVerdict {
  std::size_t cls = 0;
  Elem h = 0;
  bool pass = true;
  std::optional<long> t_exponent;  // coefficient of t^k where the first mismatch occurs
  std::optional<Mismatch> first_mismatch;
};

struct ReplicabilityReport {
  long m_max = 0;
  long q_bound = 0;
  std::vector<FaberHeckeVerdict> faber_vs_hecke;
  std::vector<TwoVariableVerdict> two_variable;

  bool replicable() const;
};

/// For every class [h] of G and m <= m_max: Phi_m(F_h(q)) = m T_m(F)(h)(q)
/// in q-degrees <= q_bound; and F_h(t) - F_h(q) = t^-1 Lambda_{-t}(F)(h)
/// with Lambda_{-t} = exp(-sum T_m t^m), t-degrees -1..m_max, q-degrees
/// <= q_bound. Throws PrecisionError when the input bound is too low.
ReplicabilityReport replicability_check(const McKayThompson& f, long m_max, long q_bound);

}  // namespace tatek
