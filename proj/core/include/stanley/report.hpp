#pragma once

#include <nlohmann/json.hpp>

#include "stanley/bound.hpp"
#include "stanley/corpus.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/size.hpp"

namespace stanley {

// Component indices in every report are 1-based, matching Q_1..Q_s.

// [["x1^2", "x2^1"], ["x1^2", "x3^1"]]
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const SizeReport& size);
// [[lower], [upper], dimension] triples
nlohmann::json to_json(const StanleyDecomposition& witness);
nlohmann::json to_json(const HypothesisReport& hypothesis);
nlohmann::json to_json(const MainBound& bound, const RingCtx& ring);
nlohmann::json to_json(const DirectSumReport& report);
nlohmann::json to_json(const Polarization& polarization);
nlohmann::json to_json(const InequalityReport& report);
nlohmann::json to_json(const CorpusSummary& summary);

}  // namespace stanley
