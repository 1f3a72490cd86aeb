#include "stanley/report.hpp"

namespace stanley {

using nlohmann::json;

namespace {

json one_based(const std::vector<int>& indices) {
  json out = json::array();
  for (int j : indices) out.push_back(j + 1);
  return out;
}

json exponents(const Monomial& m) {
  json out = json::array();
  for (int i = 0; i < m.nvars(); ++i) out.push_back(m[i]);
  return out;
}

}  // namespace

json to_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& q : d.components()) {
    json comp = json::array();
    for (auto [var, exp] : q.powers()) comp.push_back(d.ring().name(var) + "^" + std::to_string(exp));
    out.push_back(std::move(comp));
  }
  return out;
}

json to_json(const SizeReport& size) {
  return json{{"n", size.n},    {"s", size.s},     {"h", size.h},
              {"v", size.v},    {"size", size.size}, {"witness", one_based(size.witness)}};
}

json to_json(const StanleyDecomposition& witness) {
  json out = json::array();
  for (const auto& iv : witness.intervals) {
    out.push_back(json::array({exponents(iv.lower), exponents(iv.upper), iv.dimension}));
  }
  return out;
}

json to_json(const HypothesisReport& hypothesis) {
  json violations = json::array();
  for (const auto& v : hypothesis.violations) {
    violations.push_back({{"component", v.component + 1}, {"tau", one_based(mask_indices(v.tau))}});
  }
  return json{{"satisfied", hypothesis.satisfied}, {"violations", std::move(violations)}};
}

namespace {

json terms_json(const PivotBound& pb, const RingCtx& ring) {
  json terms = json::array();
  for (const auto& t : pb.terms) {
    terms.push_back({{"tau", one_based(mask_indices(t.tau))},
                     {"w", to_string(t.w, ring)},
                     {"ideal_part", t.ideal_part},
                     {"quotient_part", t.quotient_part},
                     {"total", t.total},
                     {"constants_only", t.constants_only}});
  }
  return terms;
}

}  // namespace

json to_json(const MainBound& bound, const RingCtx& ring) {
  json per_pivot = json::array();
  const PivotBound* best = nullptr;
  for (const auto& pb : bound.per_pivot) {
    std::size_t constants_only = 0;
    for (const auto& t : pb.terms) constants_only += t.constants_only ? 1 : 0;
    per_pivot.push_back({{"pivot", pb.pivot + 1},
                         {"r", pb.r},
                         {"n_minus_r", pb.free_dimension},
                         {"value", pb.value},
                         {"skipped_zero", pb.skipped_zero},
                         {"constants_only_terms", constants_only},
                         {"empty_dprime", pb.empty_dprime},
                         {"terms", terms_json(pb, ring)}});
    if (pb.pivot == bound.best_pivot) best = &pb;
  }
  return json{{"value", bound.value},
              {"best_pivot", bound.best_pivot + 1},
              {"per_pivot", std::move(per_pivot)},
              {"terms", best ? terms_json(*best, ring) : json::array()}};
}

json to_json(const DirectSumReport& report) {
  return json{{"degree_cap", report.degree_cap},
              {"monomials", report.monomials},
              {"first_summand", report.first_summand},
              {"tau_summand", report.tau_summand},
              {"empty_tau", report.empty_tau},
              {"in_ideal", report.in_ideal},
              {"cap_warning", report.cap_warning},
              {"violations", report.violations},
              {"ok", report.ok()}};
}

json to_json(const Polarization& polarization) {
  json parents = json::array();
  for (int p : polarization.parent) parents.push_back(p + 1);
  return json{{"ideal", to_string(polarization.ideal)},
              {"n", polarization.ideal.nvars()},
              {"added_vars", polarization.added_vars},
              {"parent", std::move(parents)}};
}

json to_json(const InequalityReport& report) {
  return json{{"ideal", to_string(report.ideal)},
              {"n", report.ideal.nvars()},
              {"s", report.decomposition.size()},
              {"decomposition", to_json(report.decomposition)},
              {"size", to_json(report.size)},
              {"hypothesis", to_json(report.hypothesis)},
              {"bound", to_json(report.bound, report.ideal.ring())},
              {"sdepth_exact", report.sdepth.value},
              {"sdepth_witness", to_json(report.sdepth.witness)},
              {"bound_sound", report.bound_sound},
              {"inequality_holds", report.inequality_holds},
              {"violations", report.violations}};
}

json to_json(const CorpusSummary& summary) {
  json records = json::array();
  for (const auto& rec : summary.records) {
    if (rec.report) {
      records.push_back(to_json(*rec.report));
    } else {
      records.push_back({{"ideal", rec.ideal_text}, {"error", rec.error}});
    }
  }
  const CorpusSpec& spec = summary.spec;
  return json{{"spec",
               {{"seed", spec.seed},
                {"count", spec.count},
                {"n_range", {spec.n_min, spec.n_max}},
                {"generator_count_range", {spec.gens_min, spec.gens_max}},
                {"max_exponent", spec.max_exponent},
                {"max_components", spec.max_components},
                {"family", to_string(spec.family)}}},
              {"summary",
               {{"count", summary.records.size()},
                {"failures", summary.failures},
                {"errors", summary.errors},
                {"hypothesis_satisfied", summary.hypothesis_satisfied},
                {"min_slack", summary.min_slack ? json(*summary.min_slack) : json(nullptr)}}},
              {"records", std::move(records)}};
}

}  // namespace stanley
