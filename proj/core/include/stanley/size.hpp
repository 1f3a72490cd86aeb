#pragma once

#include <span>
#include <vector>

#include "stanley/decomposition.hpp"

namespace stanley {

inline constexpr int kDefaultMaxCoverComponents = 20;

struct SizeReport {
  int n = 0;
  int s = 0;
  int h = 0;  // height of Q_1 + ... + Q_s = |union of supports|
  int v = 0;  // fewest components whose supports already cover that union
  int size = 0;
  std::vector<int> witness;  // 0-based component indices, lexicographically least
};

// Union of the supports of Q_j for j in `indices` (nonempty).
VarSet support_union(const Decomposition& d, std::span<const int> indices);
VarSet support_union(const Decomposition& d);

struct MinCover {
  int v = 0;
  std::vector<int> witness;
};

/// Exact minimum number of components whose supports cover the support of
/// Q_1 + ... + Q_s. Cardinalities are tried in increasing order up to a greedy
/// upper bound; within a cardinality, index subsets are visited in
/// lexicographic order so the reported witness is the least one.
MinCover min_cover(const Decomposition& d, int max_components = kDefaultMaxCoverComponents);

SizeReport size_of(const Decomposition& d, int max_components = kDefaultMaxCoverComponents);
// Throws DomainError on the zero or unit ideal.
SizeReport size_of(const MonomialIdeal& ideal, int max_components = kDefaultMaxCoverComponents);

}  // namespace stanley
