#include "stanley/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "stanley/error.hpp"

namespace stanley {

std::string to_string(Family family) {
  switch (family) {
    case Family::Squarefree: return "squarefree";
    case Family::General: return "general";
    case Family::HypothesisSatisfying: return "hypothesis-satisfying";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "squarefree") return Family::Squarefree;
  if (name == "general") return Family::General;
  if (name == "hypothesis-satisfying" || name == "hypothesis") return Family::HypothesisSatisfying;
  throw std::invalid_argument("unknown corpus family '" + name + "'");
}

int CorpusRng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

namespace {

void validate(const CorpusSpec& spec) {
  if (spec.count < 0) throw std::invalid_argument("corpus count must be non-negative");
  if (spec.n_min < 1 || spec.n_max < spec.n_min) throw std::invalid_argument("invalid variable-count range");
  if (spec.gens_min < 1 || spec.gens_max < spec.gens_min) throw std::invalid_argument("invalid generator-count range");
  if (spec.max_exponent < 1) throw std::invalid_argument("max exponent must be positive");
  if (spec.family == Family::HypothesisSatisfying && spec.max_exponent < 2) {
    throw std::invalid_argument("the hypothesis-satisfying family needs max exponent ≥ 2");
  }
}

MonomialIdeal draw_ideal(CorpusRng& rng, const CorpusSpec& spec) {
  const int n = rng.uniform(spec.n_min, spec.n_max);
  const int k = rng.uniform(spec.gens_min, spec.gens_max);
  const int top = spec.family == Family::Squarefree ? 1 : spec.max_exponent;
  std::vector<Monomial> gens;
  while (static_cast<int>(gens.size()) < k) {
    Monomial g(n);
    for (int i = 0; i < n; ++i) g[i] = rng.uniform(0, top);
    if (!g.is_unit()) gens.push_back(std::move(g));
  }
  return MonomialIdeal(RingCtx(n), std::move(gens));
}

}  // namespace

std::vector<MonomialIdeal> generate_corpus(const CorpusSpec& spec) {
  validate(spec);
  CorpusRng rng(spec.seed);
  std::vector<MonomialIdeal> out;
  out.reserve(spec.count);
  while (static_cast<int>(out.size()) < spec.count) {
    bool accepted = false;
    for (int attempt = 0; attempt < spec.max_attempts && !accepted; ++attempt) {
      MonomialIdeal ideal = draw_ideal(rng, spec);
      std::optional<Decomposition> d;
      if (spec.max_components > 0 || spec.family == Family::HypothesisSatisfying) d = decompose(ideal);
      if (spec.max_components > 0 && d->size() > spec.max_components) continue;
      if (spec.family == Family::HypothesisSatisfying &&
          (ideal.is_squarefree() || d->size() > 20 || !hypothesis_check(*d).satisfied)) {
        continue;
      }
      out.push_back(std::move(ideal));
      accepted = true;
    }
    if (!accepted) {
      throw ResourceError("corpus generation gave up after " + std::to_string(spec.max_attempts) +
                          " rejected draws");
    }
  }
  return out;
}

CorpusSummary run_corpus(const CorpusSpec& spec, const BoundOptions& options, int jobs) {
  const std::vector<MonomialIdeal> ideals = generate_corpus(spec);
  CorpusSummary summary;
  summary.spec = spec;
  summary.records.resize(ideals.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < ideals.size(); k = next++) {
      CorpusRecord& rec = summary.records[k];
      rec.ideal_text = to_string(ideals[k]);
      try {
        rec.report = size_inequality_check(ideals[k], options);
      } catch (const ResourceError& e) {
        rec.error = e.what();
      }
    }
  };
  const int workers = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(ideals.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const auto& rec : summary.records) {
    if (!rec.report) {
      ++summary.errors;
      continue;
    }
    if (!rec.report->ok()) ++summary.failures;
    if (rec.report->hypothesis.satisfied) ++summary.hypothesis_satisfied;
    int slack = rec.report->sdepth.value - rec.report->size.size;
    summary.min_slack = summary.min_slack ? std::min(*summary.min_slack, slack) : slack;
  }
  return summary;
}

}  // namespace stanley
