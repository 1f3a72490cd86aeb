#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the search or decomposition code paths it is used to check.

#include <functional>
#include <random>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley::testing {

// All exponent vectors in n variables of total degree ≤ degree_cap.
std::vector<Monomial> monomials_up_to(int n, int degree_cap);

// Membership straight from the generator list (no minimalization involved).
bool generated_by(const std::vector<Monomial>& gens, const Monomial& m);

// True iff `predicate` and ideal membership agree on every monomial of
// degree ≤ degree_cap.
bool agrees_up_to(const MonomialIdeal& ideal, const std::function<bool(const Monomial&)>& predicate,
                  int degree_cap);

// No generator divides another.
bool is_antichain(const MonomialIdeal& ideal);

// Max over all interval partitions of the point set {a ≤ cap : in_module(a)}
// of the minimum interval dimension, by plain exact-cover enumeration over
// every interval contained in the set. Returns -1 for an empty set.
int naive_sdepth(const Monomial& cap, const std::function<bool(const Monomial&)>& in_module);
// Convenience: J/I with cap = max(1, componentwise max of generator exponents).
int naive_sdepth_module(const MonomialIdeal& lower, const MonomialIdeal& upper);
std::size_t count_module_points(const MonomialIdeal& lower, const MonomialIdeal& upper);

// Smallest number of sets whose union covers the union of all sets, by
// enumerating all 2^s subsets.
int brute_force_min_cover(const std::vector<VarSet>& sets);

// Random ideal with the given shape; exponents uniform on [0, max_exponent].
MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int gens, int max_exponent);
Monomial random_monomial(std::mt19937_64& rng, int n, int max_exponent);

// Relabel variables: result x_{perm[i]} <- x_i.
MonomialIdeal permute_variables(const MonomialIdeal& ideal, const std::vector<int>& perm);

}  // namespace stanley::testing
