#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stanley/bound.hpp"

namespace stanley {

enum class Family { Squarefree, General, HypothesisSatisfying };

std::string to_string(Family family);
// Accepts "squarefree", "general", "hypothesis-satisfying" (alias "hypothesis").
Family parse_family(const std::string& name);

struct CorpusSpec {
  std::uint64_t seed = 42;
  int count = 10;
  int n_min = 2;
  int n_max = 4;
  int gens_min = 1;
  int gens_max = 4;
  int max_exponent = 3;
  Family family = Family::Squarefree;
  // Reject ideals whose irredundant decomposition has more components (0 = no limit).
  int max_components = 0;
  // Draws allowed per accepted ideal before giving up.
  int max_attempts = 100000;
};

/// Deterministic source of bounded integers: std::mt19937_64 (fully specified
/// by the standard) plus rejection sampling, so a seed yields the same corpus
/// with every standard library.
class CorpusRng {
public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [lo, hi].
  int uniform(int lo, int hi);

private:
  std::mt19937_64 engine_;
};

// Squarefree draws use exponents in {0, 1}; the hypothesis-satisfying family
// draws general ideals and keeps those that are not squarefree and pass
// hypothesis_check. Throws ResourceError when max_attempts is exhausted.
std::vector<MonomialIdeal> generate_corpus(const CorpusSpec& spec);

struct CorpusRecord {
  std::optional<InequalityReport> report;
  std::string ideal_text;
  std::string error;  // non-empty when the item hit a resource cap
};

struct CorpusSummary {
  CorpusSpec spec;
  std::vector<CorpusRecord> records;
  int failures = 0;        // records with invariant violations
  int errors = 0;          // records that hit a resource cap
  int hypothesis_satisfied = 0;
  std::optional<int> min_slack;  // min over records of sdepth - size

  bool ok() const { return failures == 0 && errors == 0; }
};

// Runs size_inequality_check over the corpus with `jobs` workers; records are
// kept in corpus order.
CorpusSummary run_corpus(const CorpusSpec& spec, const BoundOptions& options = {}, int jobs = 1);

}  // namespace stanley
