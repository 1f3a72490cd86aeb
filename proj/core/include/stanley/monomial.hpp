#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "stanley/ring.hpp"

namespace stanley {

using Exponent = std::int32_t;

/// Exponent vector x^a. Length is the ring's variable count; the all-zero
/// vector is the unit monomial.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial unit(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int i, Exponent e = 1);

  int nvars() const { return static_cast<int>(exps_.size()); }
  Exponent operator[](int i) const { return exps_[i]; }
  Exponent& operator[](int i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_unit() const;
  Exponent degree() const;
  Exponent max_exponent() const;
  VarSet support() const;
  bool is_squarefree() const;
  // Single variable raised to a positive power.
  bool is_pure_power() const;

  // Keep only the coordinates in `vars`; everything else goes to zero.
  Monomial restricted(VarSet vars) const;
  Monomial squarefree_part() const;

  // Dense re-indexing onto the members of `vars` (in increasing order).
  Monomial compressed(VarSet vars) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

private:
  std::vector<Exponent> exps_;
};

// a | b. Throws RingMismatch if lengths differ.
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// a / gcd(a, b): the generator of (a) : b.
Monomial colon(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const RingCtx& ring);
std::string to_string(const Monomial& m);

}  // namespace stanley
