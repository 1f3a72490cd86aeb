#include "stanley/sdepth.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "stanley/error.hpp"

namespace stanley {

int CharacteristicPoset::rho(const Monomial& p) const {
  int r = 0;
  for (int i = 0; i < p.nvars(); ++i) r += p[i] == cap[i] ? 1 : 0;
  return r;
}

Monomial default_cap(const MonomialIdeal& lower, const MonomialIdeal& upper) {
  Monomial g = lcm(lower.lcm_of_generators(), upper.lcm_of_generators());
  for (int i = 0; i < g.nvars(); ++i) g[i] = std::max<Exponent>(g[i], 1);
  return g;
}

namespace {

std::size_t box_volume(const Monomial& cap, std::size_t limit) {
  std::size_t volume = 1;
  for (int i = 0; i < cap.nvars(); ++i) {
    volume *= static_cast<std::size_t>(cap[i]) + 1;
    if (volume > limit) {
      throw ResourceError("exponent box exceeds " + std::to_string(limit) + " cells");
    }
  }
  return volume;
}

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& bits) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : bits) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class PartitionSearch {
public:
  PartitionSearch(const CharacteristicPoset& poset, const SdepthOptions& options)
      : poset_(poset), options_(options), n_(poset.cap.nvars()) {
    if (options_.timeout) deadline_ = std::chrono::steady_clock::now() + *options_.timeout;
    stride_.assign(n_, 1);
    for (int i = n_ - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * (poset.cap[i + 1] + 1);
    box_to_point_.assign(box_volume(poset.cap, options.max_box), -1);
    for (std::size_t k = 0; k < poset.points.size(); ++k) {
      box_to_point_[linear(poset.points[k])] = static_cast<int>(k);
      rho_.push_back(poset.rho(poset.points[k]));
    }
  }

  // max over P-points above p of rho, minimized over p. Any partition has an
  // interval through the minimizing p whose upper end is one of those points.
  int upper_bound() const {
    const std::size_t count = poset_.points.size();
    std::vector<int> best(count);
    for (std::size_t k = count; k-- > 0;) {
      const Monomial& p = poset_.points[k];
      int b = rho_[k];
      for (int i = 0; i < n_; ++i) {
        if (p[i] < poset_.cap[i]) {
          int next = box_to_point_[linear(p) + stride_[i]];
          if (next >= 0) b = std::max(b, best[next]);
        }
      }
      best[k] = b;
    }
    return count == 0 ? 0 : *std::min_element(best.begin(), best.end());
  }

  std::optional<std::vector<Interval>> find(int target) {
    check_deadline();
    build_candidates(target);
    covered_.assign((poset_.points.size() + 63) / 64, 0);
    failed_.clear();
    chosen_.clear();
    if (!dfs(poset_.points.size())) return std::nullopt;
    std::vector<Interval> out;
    for (int c : chosen_) {
      const Candidate& cand = candidates_[c];
      out.push_back(Interval{poset_.points[cand.points.front()], cand.upper, poset_.rho(cand.upper)});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lower < b.lower; });
    return out;
  }

private:
  struct Candidate {
    std::vector<int> points;  // lower corner first
    Monomial upper;
  };

  std::size_t linear(const Monomial& p) const {
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) idx += stride_[i] * p[i];
    return idx;
  }
  bool is_covered(int k) const { return (covered_[k >> 6] >> (k & 63)) & 1U; }
  void flip(int k) { covered_[k >> 6] ^= std::uint64_t{1} << (k & 63); }

  void check_budget() {
    if (++nodes_ % 1024 == 0) check_deadline();
  }
  void check_deadline() const {
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) {
      throw ResourceError("sdepth search exceeded the time budget of " +
                          std::to_string(options_.timeout->count()) + " ms");
    }
  }

  // Points of [c, c + (g - c)|_A] if all of them lie in P.
  bool collect_box(const Monomial& c, const std::vector<int>& axes, std::vector<int>& out) const {
    out.clear();
    Monomial cur = c;
    while (true) {
      int k = box_to_point_[linear(cur)];
      if (k < 0) return false;
      out.push_back(k);
      std::size_t a = axes.size();
      while (a > 0) {
        int i = axes[a - 1];
        if (cur[i] < poset_.cap[i]) {
          ++cur[i];
          break;
        }
        cur[i] = c[i];
        --a;
      }
      if (a == 0) return true;
    }
  }

  // Every [c, c + (g - c)|_A] inside P with |A| = max(0, target - rho(c)) and A
  // among the coordinates where c is below the cap.
  void build_candidates(int target) {
    candidates_.clear();
    cells_ = 0;
    const std::size_t count = poset_.points.size();
    containing_.assign(count, {});
    std::vector<int> open, pick, axes, box;
    for (std::size_t k = 0; k < count; ++k) {
      const Monomial& c = poset_.points[k];
      const int needed = std::max(0, target - rho_[k]);
      open.clear();
      for (int i = 0; i < n_; ++i) {
        if (c[i] < poset_.cap[i]) open.push_back(i);
      }
      pick.resize(needed);
      axes.resize(needed);
      for (int j = 0; j < needed; ++j) pick[j] = j;
      while (true) {
        for (int j = 0; j < needed; ++j) axes[j] = open[pick[j]];
        if (collect_box(c, axes, box)) {
          Monomial upper = c;
          for (int i : axes) upper[i] = poset_.cap[i];
          cells_ += box.size();
          if (cells_ > options_.max_candidate_cells) {
            throw ResourceError("sdepth candidate intervals exceed " + std::to_string(options_.max_candidate_cells) +
                                " cells");
          }
          const int id = static_cast<int>(candidates_.size());
          for (int q : box) containing_[q].push_back(id);
          candidates_.push_back(Candidate{box, std::move(upper)});
        }
        int j = needed - 1;
        while (j >= 0 && pick[j] == static_cast<int>(open.size()) - needed + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < needed; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
    blocked_.assign(candidates_.size(), 0);
    live_.assign(count, 0);
    for (std::size_t k = 0; k < count; ++k) live_[k] = static_cast<int>(containing_[k].size());
  }

  void place(int id) {
    for (int q : candidates_[id].points) {
      flip(q);
      for (int other : containing_[q]) {
        if (blocked_[other]++ == 0) {
          for (int r : candidates_[other].points) --live_[r];
        }
      }
    }
  }
  void unplace(int id) {
    const auto& pts = candidates_[id].points;
    for (auto q = pts.rbegin(); q != pts.rend(); ++q) {
      for (int other : containing_[*q]) {
        if (--blocked_[other] == 0) {
          for (int r : candidates_[other].points) ++live_[r];
        }
      }
      flip(*q);
    }
  }

  // Exact cover over the candidates, branching on the uncovered point with the
  // fewest remaining candidates.
  bool dfs(std::size_t uncovered) {
    check_budget();
    if (uncovered == 0) return true;
    int best = -1;
    for (std::size_t k = 0; k < live_.size(); ++k) {
      if (is_covered(static_cast<int>(k))) continue;
      if (best < 0 || live_[k] < live_[best]) {
        best = static_cast<int>(k);
        if (live_[k] <= 1) break;
      }
    }
    if (live_[best] == 0) return false;
    if (failed_.contains(covered_)) return false;

    for (int id : containing_[best]) {
      if (blocked_[id] != 0) continue;
      place(id);
      chosen_.push_back(id);
      if (dfs(uncovered - candidates_[id].points.size())) return true;
      chosen_.pop_back();
      unplace(id);
    }
    if (failed_.size() < options_.max_memo_states) failed_.insert(covered_);
    return false;
  }

  const CharacteristicPoset& poset_;
  const SdepthOptions& options_;
  int n_;
  std::vector<std::size_t> stride_;
  std::vector<int> box_to_point_;
  std::vector<int> rho_;
  std::vector<std::uint64_t> covered_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> failed_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> containing_;  // point -> candidates through it
  std::vector<int> blocked_;                  // candidate -> covered points inside it
  std::vector<int> live_;                     // point -> candidates through it with blocked_ == 0
  std::vector<int> chosen_;
  std::size_t cells_ = 0;
  std::size_t nodes_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace

CharacteristicPoset characteristic_points(const MonomialIdeal& lower, const MonomialIdeal& upper,
                                          const Monomial& cap, const SdepthOptions& options) {
  if (!(lower.ring() == upper.ring())) throw RingMismatch("module ideals live in different rings");
  if (cap.nvars() != lower.nvars()) throw RingMismatch("cap vector has the wrong length");
  if (!upper.contains(lower)) {
    throw DomainError("lower ideal " + to_string(lower) + " is not contained in " + to_string(upper));
  }
  if (!divides(lcm(lower.lcm_of_generators(), upper.lcm_of_generators()), cap)) {
    throw DomainError("cap vector is below a generator exponent");
  }

  const int n = cap.nvars();
  box_volume(cap, options.max_box);
  CharacteristicPoset poset{cap, {}};
  Monomial cur(n);
  while (true) {
    if (upper.contains(cur) && !lower.contains(cur)) {
      poset.points.push_back(cur);
      if (poset.points.size() > options.max_points) {
        throw ResourceError("characteristic poset exceeds " + std::to_string(options.max_points) + " points");
      }
    }
    int i = n - 1;
    while (i >= 0 && cur[i] == cap[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return poset;
}

bool is_valid_witness(const CharacteristicPoset& poset, const StanleyDecomposition& witness) {
  if (!(witness.cap == poset.cap) || witness.intervals.empty()) return false;
  std::set<Monomial> remaining(poset.points.begin(), poset.points.end());
  int min_dim = poset.cap.nvars() + 1;
  for (const auto& iv : witness.intervals) {
    if (!divides(iv.lower, iv.upper) || !divides(iv.upper, poset.cap)) return false;
    if (iv.dimension != poset.rho(iv.upper)) return false;
    min_dim = std::min(min_dim, iv.dimension);
    Monomial cur = iv.lower;
    const int n = cur.nvars();
    while (true) {
      if (remaining.erase(cur) != 1) return false;  // outside P or already covered
      int i = n - 1;
      while (i >= 0 && cur[i] == iv.upper[i]) {
        cur[i] = iv.lower[i];
        --i;
      }
      if (i < 0) break;
      ++cur[i];
    }
  }
  return remaining.empty() && min_dim == witness.sdepth;
}

SdepthResult sdepth_module(const MonomialIdeal& lower, const MonomialIdeal& upper, const Monomial& cap,
                           const SdepthOptions& options) {
  if (lower == upper) throw DomainError("J/I is the zero module");
  CharacteristicPoset poset = characteristic_points(lower, upper, cap, options);
  PartitionSearch search(poset, options);
  for (int d = search.upper_bound(); d >= 0; --d) {
    if (auto intervals = search.find(d)) {
      SdepthResult result{d, StanleyDecomposition{cap, std::move(*intervals), d}};
      if (!is_valid_witness(poset, result.witness)) {
        throw std::logic_error("sdepth search produced an invalid Stanley decomposition");
      }
      return result;
    }
  }
  throw std::logic_error("singleton partition must be feasible at dimension 0");
}

SdepthResult sdepth_module(const MonomialIdeal& lower, const MonomialIdeal& upper, const SdepthOptions& options) {
  return sdepth_module(lower, upper, default_cap(lower, upper), options);
}

SdepthResult sdepth_quotient(const MonomialIdeal& ideal, const SdepthOptions& options) {
  return sdepth_module(ideal, MonomialIdeal::unit(ideal.ring()), options);
}

SdepthResult sdepth_ideal(const MonomialIdeal& ideal, const SdepthOptions& options) {
  return sdepth_module(MonomialIdeal::zero(ideal.ring()), ideal, options);
}

std::optional<int> subring_sdepth_quotient(const MonomialIdeal& ideal, VarSet vars, const SdepthOptions& options) {
  if (!ideal.support().is_subset_of(vars)) throw DomainError("ideal is not supported on the subring");
  if (ideal.is_unit()) return std::nullopt;
  if (vars.empty()) return 0;
  return sdepth_quotient(reindex_to_subring(ideal, vars), options).value;
}

std::optional<int> subring_sdepth_ideal(const MonomialIdeal& ideal, VarSet vars, const SdepthOptions& options) {
  if (!ideal.support().is_subset_of(vars)) throw DomainError("ideal is not supported on the subring");
  if (ideal.is_zero()) return std::nullopt;
  if (vars.empty()) return 0;
  return sdepth_ideal(reindex_to_subring(ideal, vars), options).value;
}

}  // namespace stanley
