#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

struct SdepthOptions {
  std::size_t max_points = 20000;
  // Largest exponent box ∏(g_i + 1) that will be scanned for points.
  std::size_t max_box = std::size_t{1} << 22;
  std::optional<std::chrono::milliseconds> timeout;
  // Failed search states remembered per target dimension.
  std::size_t max_memo_states = 1 << 20;
  // Total size of the candidate interval lists built per target dimension.
  std::size_t max_candidate_cells = std::size_t{1} << 26;
};

/// Finite model of J/I: the points a ≤ g with x^a ∈ J \ I, in increasing
/// lexicographic order.
struct CharacteristicPoset {
  Monomial cap;
  std::vector<Monomial> points;

  // Number of coordinates where `p` reaches the cap.
  int rho(const Monomial& p) const;
};

struct Interval {
  Monomial lower;
  Monomial upper;
  int dimension = 0;

  bool operator==(const Interval&) const = default;
};

struct StanleyDecomposition {
  Monomial cap;
  std::vector<Interval> intervals;
  int sdepth = 0;
};

struct SdepthResult {
  int value = 0;
  StanleyDecomposition witness;
};

// Componentwise max of generator exponents of I and J, at least 1 everywhere.
Monomial default_cap(const MonomialIdeal& lower, const MonomialIdeal& upper);

// Throws DomainError if I ⊄ J or g is below some generator exponent.
CharacteristicPoset characteristic_points(const MonomialIdeal& lower, const MonomialIdeal& upper,
                                          const Monomial& cap, const SdepthOptions& options = {});

// Disjoint, exact cover of the poset by intervals inside it, with the
// recorded dimensions and sdepth consistent with the cap.
bool is_valid_witness(const CharacteristicPoset& poset, const StanleyDecomposition& witness);

/// Exact sdepth of J/I (lower = I ⊊ upper = J).
///
/// Targets d are tried from an upper bound downwards. Every partition into
/// intervals of dimension ≥ d refines into intervals [c, c + (g - c)|_A] with
/// A a set of non-capped coordinates of size max(0, d - rho(c)), so feasibility
/// of d is an exact-cover problem over those candidates. It is solved by
/// backtracking on the uncovered point with the fewest live candidates.
///
/// Throws DomainError when I = J or I ⊄ J, ResourceError on any cap or
/// timeout.
SdepthResult sdepth_module(const MonomialIdeal& lower, const MonomialIdeal& upper,
                           const SdepthOptions& options = {});
SdepthResult sdepth_module(const MonomialIdeal& lower, const MonomialIdeal& upper, const Monomial& cap,
                           const SdepthOptions& options = {});

// S/I and I as S-modules.
SdepthResult sdepth_quotient(const MonomialIdeal& ideal, const SdepthOptions& options = {});
SdepthResult sdepth_ideal(const MonomialIdeal& ideal, const SdepthOptions& options = {});

// Same, over K[vars] for an ideal whose generators lie in K[vars]. An empty
// `vars` means the constants-only ring K: K/(0) and the ideal (1) = K have
// sdepth 0. nullopt marks the zero module (K/(1), or the zero ideal).
std::optional<int> subring_sdepth_quotient(const MonomialIdeal& ideal, VarSet vars,
                                           const SdepthOptions& options = {});
std::optional<int> subring_sdepth_ideal(const MonomialIdeal& ideal, VarSet vars,
                                        const SdepthOptions& options = {});

}  // namespace stanley
