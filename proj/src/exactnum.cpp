#include "tatek/exactnum.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tatek {

Rational::Rational(long n, long d) {
  if (d == 0) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw ArithmeticError("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }
long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
struct CyclotomicPoly {
  long n;
  long phi;
  std::vector<long> coeffs;  // size phi + 1, monic
};

std::vector<long> compute_cyclotomic(long n);

const CyclotomicPoly& cyclotomic_poly(long n) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CyclotomicPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto p = std::make_unique<CyclotomicPoly>();
  p->n = n;
  p->coeffs = compute_cyclotomic(n);
  p->phi = static_cast<long>(p->coeffs.size()) - 1;
  return *cache.emplace(n, std::move(p)).first->second;
}

// x^n - 1 divided by every Phi_d, d | n, d < n.
std::vector<long> compute_cyclotomic(long n) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> den = compute_cyclotomic(d);
    const long dd = static_cast<long>(den.size()) - 1;
    const long dn = static_cast<long>(num.size()) - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
      const long c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

// Reduce a polynomial in zeta modulo Phi_n, returning exactly phi(n) coefficients.
std::vector<Rational> reduce(std::vector<Rational> p, long n) {
  const auto& cp = cyclotomic_poly(n);
  for (long i = static_cast<long>(p.size()) - 1; i >= cp.phi; --i) {
    if (p[i].is_zero()) continue;
    const Rational c = p[i];
    for (long j = 0; j < cp.phi; ++j) {
      if (cp.coeffs[j] != 0) p[i - cp.phi + j] -= c * Rational(cp.coeffs[j]);
    }
    p[i] = Rational();
  }
  p.resize(cp.phi);
  return p;
}

}  // namespace

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  if (static_cast<long>(coeffs_.size()) != euler_phi(conductor))
    throw std::invalid_argument("cyclotomic coefficient vector must have length phi(N)");
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: N must be positive");
  const long e = mod(k, n);
  std::vector<Rational> p(e + 1);
  p[e] = Rational(1);
  Cyclotomic z;
  z.conductor_ = n;
  z.coeffs_ = reduce(std::move(p), n);
  z.normalize();
  return z;
}

void Cyclotomic::normalize() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return;
  Rational c = coeffs_.empty() ? Rational() : coeffs_[0];
  conductor_ = 1;
  coeffs_.assign(1, c);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

const Rational& Cyclotomic::to_rational() const {
  if (conductor_ != 1) throw ArithmeticError("cyclotomic " + str() + " is not rational");
  return coeffs_[0];
}

bool Cyclotomic::is_integral() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

std::vector<Rational> Cyclotomic::coeffs_at(long m) const {
  if (m % conductor_ != 0) throw std::invalid_argument("coeffs_at: conductor must divide target level");
  if (m == conductor_) return coeffs_;
  const long step = m / conductor_;
  std::vector<Rational> p(static_cast<std::size_t>((coeffs_.size() - 1) * step + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return reduce(std::move(p), m);
}

Cyclotomic Cyclotomic::galois(long j) const {
  if (conductor_ == 1) return *this;
  if (gcd(mod(j, conductor_), conductor_) != 1)
    throw std::invalid_argument("galois: exponent not coprime to conductor");
  std::vector<Rational> p(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    p[mod(static_cast<long>(i) * j, conductor_)] += coeffs_[i];
  Cyclotomic r;
  r.conductor_ = conductor_;
  r.coeffs_ = reduce(std::move(p), conductor_);
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in cyclotomic field");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // x * prod_{j != 1} sigma_j(x) is the field norm, a nonzero rational.
  Cyclotomic others(1);
  for (long j = 2; j < conductor_; ++j)
    if (gcd(j, conductor_) == 1) others *= galois(j);
  const Cyclotomic norm = *this * others;
  return others * (Rational(1) / norm.to_rational());
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    const long m = lcm(conductor_, o.conductor_);
    auto a = coeffs_at(m);
    const auto b = o.coeffs_at(m);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    conductor_ = m;
    coeffs_ = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  if (r.is_zero()) normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor_ == 1) return *this *= o.coeffs_[0];
  if (conductor_ == 1) {
    const Rational r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  const long m = lcm(conductor_, o.conductor_);
  const auto a = coeffs_at(m);
  const auto b = o.coeffs_at(m);
  std::vector<Rational> p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) p[i + j] += a[i] * b[j];
  }
  conductor_ = m;
  coeffs_ = reduce(std::move(p), m);
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const long m = lcm(a.conductor_, b.conductor_);
  return a.coeffs_at(m) == b.coeffs_at(m);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Cyclotomic::str() const {
  if (conductor_ == 1) return coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.sign() < 0 ? -c : c;
    if (i == 0) {
      os << a;
    } else {
      if (a != Rational(1)) os << a << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

std::pair<std::string, std::string> complex_approximation(const Cyclotomic& x, int digits) {
  using Float = boost::multiprecision::cpp_dec_float_100;
  if (digits < 1) throw std::invalid_argument("complex_approximation: digits must be >= 1");
  if (digits > 80) throw std::invalid_argument("complex_approximation: at most 80 digits supported");
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  Float re = 0, im = 0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rational& c = x.coeffs()[i];
    if (c.is_zero()) continue;
    const Float value = Float(c.numerator().get_str()) / Float(c.denominator().get_str());
    const Float angle = two_pi * Float(static_cast<long>(i)) / Float(x.conductor());
    re += value * cos(angle);
    im += value * sin(angle);
  }
  auto format = [digits](const Float& v) {
    std::string s = v.str(digits, std::ios::fixed);
    if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
  };
  return {format(re), format(im)};
}

}  // namespace tatek
