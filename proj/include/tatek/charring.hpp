// Virtual characters of finite groups and the lambda-ring operations on them.
#pragma once

#include "tatek/exactnum.hpp"
#include "tatek/groups.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace tatek {

class CharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Class function on a finite group, one value per conjugacy class.
struct VirtualCharacter {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  static VirtualCharacter constant(const GroupPtr& g, const Cyclotomic& c);
  static VirtualCharacter trivial(const GroupPtr& g) { return constant(g, Cyclotomic(1)); }
  static VirtualCharacter zero(const GroupPtr& g) { return constant(g, Cyclotomic(0)); }
  static VirtualCharacter regular(const GroupPtr& g);
  /// Fixed-point count of the permutation realization.
  static VirtualCharacter permutation(const GroupPtr& g);
  /// Sign of the permutation realization.
  static VirtualCharacter sign(const GroupPtr& g);
  /// Evaluates fn on class representatives.
  static VirtualCharacter from_function(const GroupPtr& g, const std::function<Cyclotomic(Elem)>& fn);

  const Cyclotomic& at(Elem g) const { return values[group->class_of(g)]; }
  const Cyclotomic& dimension() const { return values[0]; }
  bool is_integral() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(const Cyclotomic& c);
  VirtualCharacter operator-() const;
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(VirtualCharacter a, const VirtualCharacter& b) { return a *= b; }
  friend VirtualCharacter operator*(VirtualCharacter a, const Cyclotomic& c) { return a *= c; }
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);
};

/// (1/|G|) sum_g chi(g) conj(psi(g))
Cyclotomic inner_product(const VirtualCharacter& chi, const VirtualCharacter& psi);

/// True when every inner product with the supplied irreducibles is a
/// non-negative integer and the irreducibles account for chi completely.
bool is_genuine(const VirtualCharacter& chi, const std::vector<VirtualCharacter>& irreducibles);

/// psi_m(chi)(g) = chi(g^m), m >= 1
VirtualCharacter adams(const VirtualCharacter& chi, long m);

/// S^0..S^{n_max} by the Newton recursion; throws CharacterError if a result
/// is not integral (the input was not a virtual character).
std::vector<VirtualCharacter> symmetric_powers(const VirtualCharacter& chi, std::size_t n_max);
/// lambda^0..lambda^{n_max}, same certification.
std::vector<VirtualCharacter> exterior_powers(const VirtualCharacter& chi, std::size_t n_max);

/// Induction from the subgroup h (chi lives on h.group) to h.ambient.
VirtualCharacter induce(const VirtualCharacter& chi, const Subgroup& h);

/// Projection onto the exp(2 pi i a)-eigenspace of the central element z.
VirtualCharacter central_eigenprojection(const VirtualCharacter& chi, Elem z, const Rational& a);

/// Character of S_n acting on V^{tensor n} with G^n, on G wr S_n: at
/// (sigma; g) the product over cycles of chi evaluated on the product of the
/// g_i around the cycle.
VirtualCharacter atiyah_power_wreath(const VirtualCharacter& chi, const WreathProduct& w);

/// The groups G wr S_n for n = 0..n_max (degree 0 is the trivial group).
struct WreathTower {
  GroupPtr base;
  GroupPtr degree_zero;
  std::vector<WreathProduct> levels;  // levels[n - 1] = G wr S_n

  const GroupPtr& group(std::size_t n) const { return n == 0 ? degree_zero : levels.at(n - 1).group; }
  std::size_t max_degree() const { return levels.size(); }
};

WreathTower wreath_tower(const GroupPtr& g, std::size_t n_max, std::size_t cap = default_element_cap());

/// P_0..P_{n_max}; P_0 is the unit on the trivial group.
std::vector<VirtualCharacter> atiyah_powers(const VirtualCharacter& chi, const WreathTower& tower);

/// Induction of p x q from G wr S_a x G wr S_b to G wr S_{a+b}.
VirtualCharacter bullet_product(const WreathTower& tower, const VirtualCharacter& p, std::size_t a,
                                const VirtualCharacter& q, std::size_t b);

}  // namespace tatek
