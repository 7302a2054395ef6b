// Exact scalars: arbitrary-precision rationals and elements of cyclotomic
// fields Q(zeta_N) stored in the power basis modulo the N-th cyclotomic
// polynomial.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tatek {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rational parse(const std::string& s);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  /// Requires is_integer() and a value that fits in long.
  long to_long() const;
  /// floor(this)
  mpz_class floor() const;

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

long gcd(long a, long b);
long lcm(long a, long b);
long euler_phi(long n);
/// Least non-negative residue.
long mod(long a, long n);

/// Element of Q(zeta_N), N = conductor(), as sum_i coeffs()[i] * zeta_N^i
/// with i < phi(N).
///
/// Binary operations embed both operands into Q(zeta_lcm). Elements that are
/// rational are normalized to conductor 1, so rationals never carry a stray
/// conductor; no other conductor reduction is attempted.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}  // NOLINT
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}                // NOLINT
  /// Coefficients in the power basis of Q(zeta_N); length must be phi(N).
  Cyclotomic(long conductor, std::vector<Rational> coeffs);

  /// e^{2 pi i k / N}
  static Cyclotomic root_of_unity(long n, long k);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /// Throws ArithmeticError if not rational.
  const Rational& to_rational() const;
  /// True if every coefficient is an integer. In the power basis this is
  /// exactly membership in Z[zeta_N].
  bool is_integral() const;

  /// Same element written over Q(zeta_M); requires conductor() | M.
  std::vector<Rational> coeffs_at(long m) const;

  /// Galois automorphism zeta_N -> zeta_N^j, gcd(j, N) = 1.
  Cyclotomic galois(long j) const;
  Cyclotomic conj() const { return galois(-1); }
  /// Throws ArithmeticError on zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic pow(long e) const;

  /// Human-readable form such as "1/2 + 3*z8^3" (z8 = e^{2 pi i/8}).
  std::string str() const;

 private:
  void normalize();

  long conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Real and imaginary parts rounded to `digits` places after the point.
/// Display only; never feeds back into exact computations.
std::pair<std::string, std::string> complex_approximation(const Cyclotomic& x, int digits);

}  // namespace tatek
