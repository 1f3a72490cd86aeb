#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/size.hpp"

namespace stanley {

inline constexpr int kDefaultMaxBoundComponents = 12;

// Bit j set <=> component j (0-based) belongs to the subset.
using ComponentMask = std::uint32_t;

std::vector<int> mask_indices(ComponentMask mask);

/// One component Q_p fixed as the pivot (x_1^{a_1}, ..., x_r^{a_r}); S' is the
/// polynomial ring on its support and S'' the ring on the remaining variables.
struct SplitContext {
  Decomposition decomposition;
  int pivot = 0;
  int r = 0;
  VarSet s_prime;
  VarSet s_dprime;
  // permutation[k] is the ambient variable placed at position k once the
  // pivot's support is moved to the front (both blocks keep their order).
  std::vector<int> permutation;
};

SplitContext build_split(const Decomposition& d, int pivot);

struct TauData {
  ComponentMask tau = 0;
  VarSet s_tau;  // S' variables outside every sqrt(Q_j), j in tau
  VarSet v_tau;  // S' variables inside some sqrt(Q_j), j in tau
  std::vector<Monomial> m_tau;

  bool constants_only() const { return s_tau.empty(); }
};

// S_tau, V_tau and the finite set M_tau for any proper subset (tau = 0 gives M = {1}).
TauData make_tau(const SplitContext& ctx, ComponentMask tau);
// All 2^s - 2 nonempty proper subsets; empty when s = 1.
std::vector<TauData> enumerate_tau(const SplitContext& ctx);

struct SummandTag {
  enum class Kind { First, Tau };
  Kind kind = Kind::First;
  Monomial key;            // First: u = S'-part of m. Tau: w = V_tau-part of u.
  ComponentMask tau = 0;   // Tau only
  bool in_ideal = false;   // predicted membership of m in I

  bool operator==(const SummandTag&) const = default;
};

// Places m in exactly one summand of the vector-space decomposition of S
// induced by the pivot, and predicts whether m lies in I.
SummandTag classify_monomial(const SplitContext& ctx, const Monomial& m);

struct DirectSumReport {
  int degree_cap = 0;
  std::size_t monomials = 0;
  std::size_t first_summand = 0;
  std::size_t tau_summand = 0;
  std::size_t empty_tau = 0;
  std::size_t in_ideal = 0;
  // The cap does not exceed the largest generator degree of I.
  bool cap_warning = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustively classifies every monomial of degree ≤ degree_cap and checks
/// it against independent per-summand membership tests: exactly one summand
/// claims it, the classifier agrees, the I-part prediction matches I, the
/// tau = ∅ summand is (I ∩ S')S, and each summand is closed under the
/// variables it is a module over.
DirectSumReport verify_direct_sum(const SplitContext& ctx, int degree_cap);

struct BoundOptions {
  SdepthOptions sdepth;
  int max_components = kDefaultMaxBoundComponents;
};

struct BoundTerm {
  ComponentMask tau = 0;
  Monomial w;
  int ideal_part = 0;     // sdepth over S_tau of ∩_{j∉tau}(Q_j : w) ∩ S_tau
  int quotient_part = 0;  // sdepth over S'' of S''/(∩_{j∈tau} Q_j ∩ S'')
  int total = 0;
  bool constants_only = false;  // S_tau = K; ideal_part taken as sdepth_K(K) = 0
};

struct PivotBound {
  int pivot = 0;
  int r = 0;
  int free_dimension = 0;  // n - r
  int value = 0;
  std::vector<BoundTerm> terms;
  std::size_t skipped_zero = 0;  // (tau, w) pairs failing the non-vanishing condition
  bool empty_dprime = false;
};

struct MainBound {
  int value = 0;  // max over the evaluated pivots
  int best_pivot = 0;
  std::vector<PivotBound> per_pivot;
};

PivotBound pivot_bound(const Decomposition& d, int pivot, const BoundOptions& options = {});
// pivot = nullopt evaluates every component as pivot.
MainBound theorem_main_bound(const Decomposition& d, std::optional<int> pivot = std::nullopt,
                             const BoundOptions& options = {});

struct HypothesisViolation {
  int component = 0;
  ComponentMask tau = 0;
};

struct HypothesisReport {
  bool satisfied = true;
  std::vector<HypothesisViolation> violations;
};

// Checks: sqrt(Q_i) ⊆ Σ_{j∈tau} sqrt(Q_j) implies Q_i ⊆ Σ_{j∈tau} Q_j, for all
// i and nonempty tau not containing i.
HypothesisReport hypothesis_check(const Decomposition& d);

struct InequalityReport {
  MonomialIdeal ideal;
  Decomposition decomposition;
  SizeReport size;
  HypothesisReport hypothesis;
  MainBound bound;
  SdepthResult sdepth;
  bool bound_sound = false;        // sdepth ≥ bound
  bool inequality_holds = false;   // sdepth ≥ size
  bool bound_dominates_size = false;  // bound ≥ size
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Size, hypothesis, recursive bound (all pivots) and exact sdepth of S/I.
/// Violations: sdepth < bound; and, under the hypothesis, bound < size or
/// sdepth < size.
InequalityReport size_inequality_check(const MonomialIdeal& ideal, const BoundOptions& options = {});

}  // namespace stanley
