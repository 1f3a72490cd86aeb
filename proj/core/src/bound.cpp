#include "stanley/bound.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "stanley/error.hpp"

namespace stanley {

std::vector<int> mask_indices(ComponentMask mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

namespace {

ComponentMask full_mask(int s) { return s >= 32 ? ~ComponentMask{0} : (ComponentMask{1} << s) - 1; }

void require_component_count(const Decomposition& d, int cap) {
  if (d.size() > cap) {
    throw ResourceError("decomposition has " + std::to_string(d.size()) + " components; the cap is " +
                        std::to_string(cap));
  }
}

}  // namespace

SplitContext build_split(const Decomposition& d, int pivot) {
  if (pivot < 0 || pivot >= d.size()) {
    throw DomainError("pivot " + std::to_string(pivot + 1) + " is not a component index (s = " +
                      std::to_string(d.size()) + ")");
  }
  SplitContext ctx{d, pivot, 0, {}, {}, {}};
  ctx.s_prime = d[pivot].support();
  ctx.s_dprime = VarSet::all(d.nvars()) - ctx.s_prime;
  ctx.r = ctx.s_prime.count();
  ctx.permutation = ctx.s_prime.indices();
  for (int i : ctx.s_dprime.indices()) ctx.permutation.push_back(i);
  return ctx;
}

TauData make_tau(const SplitContext& ctx, ComponentMask tau) {
  const auto& comps = ctx.decomposition.components();
  const int n = ctx.decomposition.nvars();
  TauData data;
  data.tau = tau;
  VarSet covered;
  for (int j : mask_indices(tau)) covered |= comps[j].support();
  data.v_tau = ctx.s_prime & covered;
  data.s_tau = ctx.s_prime - covered;

  const std::vector<int> members = mask_indices(tau);
  // Exponent of x_i in any element of M_tau stays below min_{j∈tau} a_{i,j}.
  std::vector<int> axes = data.v_tau.indices();
  Monomial bound(n);
  for (int i : axes) {
    Exponent lowest = 0;
    for (int j : members) {
      Exponent a = comps[j].exponent(i);
      if (a > 0 && (lowest == 0 || a < lowest)) lowest = a;
    }
    bound[i] = lowest - 1;
  }
  Monomial cur(n);
  while (true) {
    bool outside = std::none_of(members.begin(), members.end(), [&](int j) { return comps[j].contains(cur); });
    if (outside) data.m_tau.push_back(cur);
    std::size_t a = axes.size();
    while (a > 0 && cur[axes[a - 1]] == bound[axes[a - 1]]) {
      cur[axes[a - 1]] = 0;
      --a;
    }
    if (a == 0) break;
    ++cur[axes[a - 1]];
  }
  return data;
}

std::vector<TauData> enumerate_tau(const SplitContext& ctx) {
  std::vector<TauData> out;
  const ComponentMask full = full_mask(ctx.decomposition.size());
  for (ComponentMask tau = 1; tau < full; ++tau) out.push_back(make_tau(ctx, tau));
  return out;
}

SummandTag classify_monomial(const SplitContext& ctx, const Monomial& m) {
  const auto& comps = ctx.decomposition.components();
  const int s = ctx.decomposition.size();
  const Monomial u = m.restricted(ctx.s_prime);

  ComponentMask tau = 0;
  for (int j = 0; j < s; ++j) {
    if (!comps[j].contains(u)) tau |= ComponentMask{1} << j;
  }
  if (tau == full_mask(s)) {
    return SummandTag{SummandTag::Kind::First, u, 0, false};
  }

  VarSet covered;
  for (int j : mask_indices(tau)) covered |= comps[j].support();
  Monomial w = u.restricted(ctx.s_prime & covered);

  bool in_ideal = true;
  if (tau != 0) {
    const Monomial wv = w * m.restricted(ctx.s_dprime);
    for (int j : mask_indices(tau)) in_ideal = in_ideal && comps[j].contains(wv);
  }
  return SummandTag{SummandTag::Kind::Tau, std::move(w), tau, in_ideal};
}

namespace {

template <typename Visit>
void for_each_monomial(int n, int degree_cap, Visit&& visit) {
  Monomial cur(n);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      visit(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, degree_cap);
}

}  // namespace

DirectSumReport verify_direct_sum(const SplitContext& ctx, int degree_cap) {
  if (degree_cap < 1) throw DomainError("degree cap must be at least 1");
  const Decomposition& d = ctx.decomposition;
  const auto& comps = d.components();
  const RingCtx& ring = d.ring();
  const int n = d.nvars();
  const int s = d.size();
  const ComponentMask full = full_mask(s);
  const MonomialIdeal ideal = d.intersection();

  std::vector<TauData> taus;
  std::vector<std::set<Monomial>> m_sets;
  for (ComponentMask tau = 0; tau < full; ++tau) {
    taus.push_back(make_tau(ctx, tau));
    m_sets.emplace_back(taus.back().m_tau.begin(), taus.back().m_tau.end());
  }

  DirectSumReport report;
  report.degree_cap = degree_cap;
  Exponent top_degree = 0;
  for (const auto& g : ideal.generators()) top_degree = std::max(top_degree, g.degree());
  report.cap_warning = degree_cap <= top_degree;

  constexpr std::size_t kMaxMessages = 50;
  std::size_t failures = 0;
  auto fail = [&](const Monomial& m, const std::string& what) {
    if (++failures <= kMaxMessages) report.violations.push_back(to_string(m, ring) + ": " + what);
  };

  for_each_monomial(n, degree_cap, [&](const Monomial& m) {
    ++report.monomials;
    const SummandTag tag = classify_monomial(ctx, m);
    const Monomial u = m.restricted(ctx.s_prime);

    int claims = 0;
    std::optional<SummandTag> claimant;
    if (std::none_of(comps.begin(), comps.end(), [&](const auto& q) { return q.contains(u); })) {
      ++claims;
      claimant = SummandTag{SummandTag::Kind::First, u, 0, false};
    }
    for (ComponentMask tau = 0; tau < full; ++tau) {
      Monomial w = u.restricted(taus[tau].v_tau);
      if (!m_sets[tau].contains(w)) continue;
      bool inside = true;
      for (int j = 0; j < s && inside; ++j) {
        if (!((tau >> j) & 1U)) inside = comps[j].contains(u);
      }
      if (inside) {
        ++claims;
        claimant = SummandTag{SummandTag::Kind::Tau, std::move(w), tau, false};
      }
    }
    if (claims != 1) {
      fail(m, "claimed by " + std::to_string(claims) + " summands");
    } else if (claimant->kind != tag.kind || !(claimant->key == tag.key) || claimant->tau != tag.tau) {
      fail(m, "classifier disagrees with summand membership");
    }

    const bool member = ideal.contains(m);
    if (member != tag.in_ideal) {
      fail(m, member ? "in I but classified into the quotient part" : "outside I but classified into the I part");
    }
    const bool empty_tau = tag.kind == SummandTag::Kind::Tau && tag.tau == 0;
    if (empty_tau != ideal.contains(u)) {
      fail(m, "tau = {} summand disagrees with (I ∩ S')S");
    }

    VarSet module_vars = ctx.s_dprime;
    if (tag.kind == SummandTag::Kind::Tau) module_vars |= taus[tag.tau].s_tau;
    for (int i : module_vars.indices()) {
      SummandTag next = classify_monomial(ctx, m * Monomial::variable(n, i));
      if (next.kind != tag.kind || !(next.key == tag.key) || next.tau != tag.tau) {
        fail(m, "summand not closed under multiplication by " + ring.name(i));
      }
    }

    if (tag.kind == SummandTag::Kind::First) {
      ++report.first_summand;
    } else {
      ++report.tau_summand;
      if (empty_tau) ++report.empty_tau;
    }
    if (tag.in_ideal) ++report.in_ideal;
  });

  if (failures > kMaxMessages) {
    report.violations.push_back("... " + std::to_string(failures - kMaxMessages) + " more");
  }
  return report;
}

namespace {

class SubringSdepthCache {
public:
  explicit SubringSdepthCache(const SdepthOptions& options) : options_(options) {}

  std::optional<int> ideal(const MonomialIdeal& ideal, VarSet vars) {
    return lookup(0, ideal, vars, [&] { return subring_sdepth_ideal(ideal, vars, options_); });
  }
  std::optional<int> quotient(const MonomialIdeal& ideal, VarSet vars) {
    return lookup(1, ideal, vars, [&] { return subring_sdepth_quotient(ideal, vars, options_); });
  }

private:
  using Key = std::tuple<int, std::uint64_t, std::vector<Monomial>>;

  template <typename Compute>
  std::optional<int> lookup(int kind, const MonomialIdeal& ideal, VarSet vars, Compute&& compute) {
    Key key{kind, vars.bits(), std::vector<Monomial>(ideal.generators().begin(), ideal.generators().end())};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto value = compute();
    cache_.emplace(std::move(key), value);
    return value;
  }

  const SdepthOptions& options_;
  std::map<Key, std::optional<int>> cache_;
};

}  // namespace

PivotBound pivot_bound(const Decomposition& d, int pivot, const BoundOptions& options) {
  require_component_count(d, options.max_components);
  const SplitContext ctx = build_split(d, pivot);
  const int n = d.nvars();
  const int s = d.size();

  PivotBound result;
  result.pivot = pivot;
  result.r = ctx.r;
  result.free_dimension = n - ctx.r;
  result.value = result.free_dimension;
  result.empty_dprime = ctx.s_dprime.empty();
  if (s == 1) return result;

  std::vector<MonomialIdeal> components;
  for (int j = 0; j < s; ++j) components.push_back(d.component_ideal(j));
  SubringSdepthCache cache(options.sdepth);

  for (const TauData& tau : enumerate_tau(ctx)) {
    std::vector<MonomialIdeal> inside, outside;
    for (int j = 0; j < s; ++j) ((tau.tau >> j) & 1U ? inside : outside).push_back(components[j]);

    const MonomialIdeal dprime_part = restrict_to_subring(intersect(inside), ctx.s_dprime);
    const std::optional<int> quotient_part = cache.quotient(dprime_part, ctx.s_dprime);

    for (const Monomial& w : tau.m_tau) {
      std::vector<MonomialIdeal> colons;
      for (const auto& q : outside) colons.push_back(colon(q, w));
      const MonomialIdeal tau_part = restrict_to_subring(intersect(colons), tau.s_tau);
      if (tau_part.is_zero() || !quotient_part) {
        ++result.skipped_zero;
        continue;
      }
      BoundTerm term;
      term.tau = tau.tau;
      term.w = w;
      term.ideal_part = *cache.ideal(tau_part, tau.s_tau);
      term.quotient_part = *quotient_part;
      term.total = term.ideal_part + term.quotient_part;
      term.constants_only = tau.constants_only();
      result.value = std::min(result.value, term.total);
      result.terms.push_back(std::move(term));
    }
  }
  return result;
}

MainBound theorem_main_bound(const Decomposition& d, std::optional<int> pivot, const BoundOptions& options) {
  MainBound result;
  if (pivot) {
    result.per_pivot.push_back(pivot_bound(d, *pivot, options));
  } else {
    for (int p = 0; p < d.size(); ++p) result.per_pivot.push_back(pivot_bound(d, p, options));
  }
  result.value = result.per_pivot.front().value;
  result.best_pivot = result.per_pivot.front().pivot;
  for (const auto& pb : result.per_pivot) {
    if (pb.value > result.value) {
      result.value = pb.value;
      result.best_pivot = pb.pivot;
    }
  }
  return result;
}

HypothesisReport hypothesis_check(const Decomposition& d) {
  require_component_count(d, 20);
  const auto& comps = d.components();
  const int s = d.size();
  HypothesisReport report;
  for (int i = 0; i < s; ++i) {
    const ComponentMask others = full_mask(s) & ~(ComponentMask{1} << i);
    // Nonempty submasks of `others`.
    for (ComponentMask tau = others; tau != 0; tau = (tau - 1) & others) {
      VarSet covered;
      for (int j : mask_indices(tau)) covered |= comps[j].support();
      if (!comps[i].support().is_subset_of(covered)) continue;

      bool contained = true;
      for (auto [var, exp] : comps[i].powers()) {
        Exponent lowest = 0;
        for (int j : mask_indices(tau)) {
          Exponent a = comps[j].exponent(var);
          if (a > 0 && (lowest == 0 || a < lowest)) lowest = a;
        }
        if (exp < lowest) {
          contained = false;
          break;
        }
      }
      if (!contained) report.violations.push_back({i, tau});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.component, a.tau) < std::tie(b.component, b.tau);
  });
  report.satisfied = report.violations.empty();
  return report;
}

InequalityReport size_inequality_check(const MonomialIdeal& ideal, const BoundOptions& options) {
  Decomposition d = decompose(ideal);
  SizeReport size = size_of(d);
  HypothesisReport hypothesis = hypothesis_check(d);
  MainBound bound = theorem_main_bound(d, std::nullopt, options);
  SdepthResult exact = sdepth_quotient(ideal, options.sdepth);

  InequalityReport report{ideal, std::move(d), std::move(size), std::move(hypothesis), std::move(bound),
                          std::move(exact), false, false, false, {}};
  report.bound_sound = report.sdepth.value >= report.bound.value;
  report.inequality_holds = report.sdepth.value >= report.size.size;
  report.bound_dominates_size = report.bound.value >= report.size.size;
  for (const auto& pb : report.bound.per_pivot) {
    if (report.sdepth.value < pb.value) {
      report.violations.push_back("sdepth " + std::to_string(report.sdepth.value) + " below the bound " +
                                  std::to_string(pb.value) + " for pivot " + std::to_string(pb.pivot + 1));
    }
  }
  if (report.hypothesis.satisfied) {
    for (const auto& pb : report.bound.per_pivot) {
      if (pb.value < report.size.size) {
        report.violations.push_back("hypothesis holds but the bound for pivot " + std::to_string(pb.pivot + 1) +
                                    " is " + std::to_string(pb.value) + " < size " +
                                    std::to_string(report.size.size));
      }
    }
    if (!report.inequality_holds) {
      report.violations.push_back("hypothesis holds but sdepth " + std::to_string(report.sdepth.value) +
                                  " < size " + std::to_string(report.size.size));
    }
  }
  return report;
}

}  // namespace stanley
