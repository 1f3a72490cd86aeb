#pragma once

#include <span>
#include <string>
#include <vector>

#include "stanley/monomial.hpp"
#include "stanley/ring.hpp"

namespace stanley {

/// Monomial ideal stored by its minimal generating set, sorted
/// lexicographically on exponent vectors. Empty set = zero ideal, {1} = unit.
class MonomialIdeal {
public:
  explicit MonomialIdeal(RingCtx ring);
  MonomialIdeal(RingCtx ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(RingCtx ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(RingCtx ring);

  const RingCtx& ring() const { return ring_; }
  int nvars() const { return ring_.nvars(); }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_squarefree() const;
  // Union of generator supports.
  VarSet support() const;
  // Componentwise max over generators (the lcm of all generators).
  Monomial lcm_of_generators() const;

  bool contains(const Monomial& m) const;
  // Every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& other) const;

private:
  RingCtx ring_;
  std::vector<Monomial> gens_;
};

// Antichain reduction plus canonical sort.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w);
MonomialIdeal radical(const MonomialIdeal& ideal);

// I ∩ K[vars], still expressed in the ambient ring.
MonomialIdeal restrict_to_subring(const MonomialIdeal& ideal, VarSet vars);

// Re-index an ideal whose generators live in K[vars] into the dense ring on
// exactly those variables. Requires vars nonempty and support ⊆ vars.
MonomialIdeal reindex_to_subring(const MonomialIdeal& ideal, VarSet vars);

struct Polarization {
  MonomialIdeal ideal;
  int added_vars = 0;
  // parent[k] = original variable that polarized variable k came from.
  std::vector<int> parent;
};

// x_i^e becomes x_i * x_{i,2} * ... * x_{i,e}; the new variables are appended
// after the original n, grouped by parent variable.
Polarization polarize(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace stanley
