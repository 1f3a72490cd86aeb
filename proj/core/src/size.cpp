#include "stanley/size.hpp"

#include <functional>

#include "stanley/error.hpp"

namespace stanley {

VarSet support_union(const Decomposition& d, std::span<const int> indices) {
  if (indices.empty()) throw DomainError("support_union needs a nonempty index set");
  VarSet out;
  for (int j : indices) out |= d[j].support();
  return out;
}

VarSet support_union(const Decomposition& d) {
  VarSet out;
  for (const auto& q : d.components()) out |= q.support();
  return out;
}

namespace {

int greedy_cover_size(const std::vector<VarSet>& supports, VarSet target) {
  VarSet covered;
  int used = 0;
  while (!target.is_subset_of(covered)) {
    int best_gain = 0;
    VarSet best;
    for (VarSet s : supports) {
      int gain = (s - covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    covered |= best;
    ++used;
  }
  return used;
}

}  // namespace

MinCover min_cover(const Decomposition& d, int max_components) {
  const int s = d.size();
  if (s > max_components) {
    throw ResourceError("minimum cover over " + std::to_string(s) + " components exceeds the cap of " +
                        std::to_string(max_components));
  }
  std::vector<VarSet> supports;
  for (const auto& q : d.components()) supports.push_back(q.support());
  const VarSet target = support_union(d);
  const int upper = greedy_cover_size(supports, target);

  // suffix[k] = union of supports k..s-1, used to cut branches that can no longer cover.
  std::vector<VarSet> suffix(s + 1);
  for (int k = s - 1; k >= 0; --k) suffix[k] = suffix[k + 1] | supports[k];

  std::vector<int> chosen;
  std::function<bool(int, int, VarSet)> search = [&](int start, int remaining, VarSet covered) {
    if (remaining == 0) return target.is_subset_of(covered);
    for (int k = start; k <= s - remaining; ++k) {
      if (!target.is_subset_of(covered | suffix[k])) return false;
      chosen.push_back(k);
      if (search(k + 1, remaining - 1, covered | supports[k])) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int t = 1; t <= upper; ++t) {
    chosen.clear();
    if (search(0, t, VarSet{})) return MinCover{t, chosen};
  }
  throw std::logic_error("greedy cover size was not attained by exact search");
}

SizeReport size_of(const Decomposition& d, int max_components) {
  auto cover = min_cover(d, max_components);
  SizeReport report;
  report.n = d.nvars();
  report.s = d.size();
  report.h = support_union(d).count();
  report.v = cover.v;
  report.size = report.v + report.n - report.h - 1;
  report.witness = std::move(cover.witness);
  return report;
}

SizeReport size_of(const MonomialIdeal& ideal, int max_components) {
  return size_of(decompose(ideal), max_components);
}

}  // namespace stanley
