#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// Irreducible monomial ideal (x_{i1}^{a1}, ..., x_{ir}^{ar}), held as a
/// sparse var -> exponent map sorted by variable.
class IrreducibleComponent {
public:
  using Power = std::pair<int, Exponent>;

  explicit IrreducibleComponent(std::vector<Power> powers);
  // Requires every generator of `ideal` to be a pure power.
  static IrreducibleComponent from_ideal(const MonomialIdeal& ideal);

  const std::vector<Power>& powers() const { return powers_; }
  VarSet support() const { return support_; }
  int rank() const { return static_cast<int>(powers_.size()); }
  // Exponent on variable i, 0 when i is outside the support.
  Exponent exponent(int var) const;

  bool contains(const Monomial& m) const;
  bool contains(const IrreducibleComponent& other) const;
  MonomialIdeal to_ideal(const RingCtx& ring) const;

  // Support (as a sorted index list) first, then exponents.
  bool operator<(const IrreducibleComponent& other) const;
  bool operator==(const IrreducibleComponent& other) const = default;

private:
  std::vector<Power> powers_;
  VarSet support_;
};

/// Irredundant presentation I = Q_1 ∩ ... ∩ Q_s in canonical order.
class Decomposition {
public:
  Decomposition(RingCtx ring, std::vector<IrreducibleComponent> components);

  const RingCtx& ring() const { return ring_; }
  int nvars() const { return ring_.nvars(); }
  int size() const { return static_cast<int>(components_.size()); }
  const std::vector<IrreducibleComponent>& components() const { return components_; }
  const IrreducibleComponent& operator[](int j) const { return components_.at(j); }

  MonomialIdeal component_ideal(int j) const { return components_.at(j).to_ideal(ring_); }
  MonomialIdeal intersection() const;

private:
  RingCtx ring_;
  std::vector<IrreducibleComponent> components_;
};

struct DecomposeOptions {
  // Upper bound on distinct sub-ideals visited by the splitting recursion.
  std::size_t max_nodes = 200000;
};

// Throws DomainError for the zero or unit ideal, ResourceError past max_nodes.
Decomposition decompose(const MonomialIdeal& ideal, const DecomposeOptions& options = {});

// Drops every Q_k whose removal leaves the intersection unchanged. For
// irreducible components ∩_{j≠k} Q_j ⊆ Q_k iff Q_j ⊆ Q_k for some j ≠ k, so
// containment is tested pairwise.
Decomposition prune_irredundant(RingCtx ring, std::vector<IrreducibleComponent> components);

// True iff I is proper, nonzero, and every minimal generator is a pure power.
bool is_irreducible(const MonomialIdeal& ideal);

}  // namespace stanley
