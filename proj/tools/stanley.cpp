// stanley: command-line front end for monomial ideal decompositions, size,
// exact Stanley depth and the recursive sdepth(S/I) lower bound.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stanley/bound.hpp"
#include "stanley/corpus.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/error.hpp"
#include "stanley/report.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/size.hpp"
#include "stanley/text.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kResource = 3, kViolation = 4 };

struct Options {
  std::string verb;
  std::string ideal_text;
  std::string file;
  std::optional<int> ring;
  int degree_cap = 6;
  std::string pivot = "all";
  std::string module = "quotient";
  std::size_t cap_points = 20000;
  std::optional<long> timeout_ms;
  std::string json_path;
  std::uint64_t seed = 42;
  int count = 10;
  std::string family = "squarefree";
  std::string n_range = "2..4";
  std::string gens_range = "1..4";
  int max_exponent = 3;
  int max_components = 0;
  int jobs = 1;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected <lo>..<hi> or a single integer, got '" + text + "'");
  }
}

stanley::MonomialIdeal load_ideal(const Options& opt) {
  std::string text = opt.ideal_text;
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw CLI::ValidationError("--file", "cannot read " + opt.file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw CLI::ValidationError("ideal", "verb '" + opt.verb + "' needs an ideal or --file");
  stanley::ParseOptions parse;
  parse.nvars = opt.ring;
  return stanley::parse_ideal(text, parse);
}

std::optional<int> parse_pivot(const Options& opt, const stanley::Decomposition& d) {
  if (opt.pivot == "all") return std::nullopt;
  int p = 0;
  try {
    p = std::stoi(opt.pivot);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--pivot", "expected a component index or 'all'");
  }
  if (p < 1 || p > d.size()) {
    throw CLI::ValidationError("--pivot", "component index must be in 1.." + std::to_string(d.size()));
  }
  return p - 1;
}

void write_json(const Options& opt, const nlohmann::json& doc, const std::string& fallback = {}) {
  const std::string path = opt.json_path.empty() ? fallback : opt.json_path;
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

stanley::BoundOptions bound_options(const Options& opt) {
  stanley::BoundOptions b;
  b.sdepth.max_points = opt.cap_points;
  if (opt.timeout_ms) b.sdepth.timeout = std::chrono::milliseconds(*opt.timeout_ms);
  return b;
}

int run(const Options& opt) {
  using namespace stanley;
  const BoundOptions bopts = bound_options(opt);

  if (opt.verb == "corpus") {
    CorpusSpec spec;
    spec.seed = opt.seed;
    spec.count = opt.count;
    spec.family = parse_family(opt.family);
    std::tie(spec.n_min, spec.n_max) = parse_range(opt.n_range);
    std::tie(spec.gens_min, spec.gens_max) = parse_range(opt.gens_range);
    spec.max_exponent = spec.family == Family::Squarefree ? 1 : opt.max_exponent;
    spec.max_components = opt.max_components;
    CorpusSummary summary = run_corpus(spec, bopts, opt.jobs);
    std::cout << "corpus " << to_string(spec.family) << " seed=" << spec.seed << " count=" << summary.records.size()
              << "\n  hypothesis satisfied: " << summary.hypothesis_satisfied
              << "\n  failures: " << summary.failures << "\n  resource errors: " << summary.errors
              << "\n  min slack (sdepth - size): "
              << (summary.min_slack ? std::to_string(*summary.min_slack) : std::string("n/a")) << '\n';
    for (const auto& rec : summary.records) {
      if (rec.report && !rec.report->ok()) {
        for (const auto& v : rec.report->violations) std::cout << "  FAIL " << rec.ideal_text << ": " << v << '\n';
      }
    }
    write_json(opt, to_json(summary), "stanley-corpus.json");
    if (summary.failures > 0) return kViolation;
    return summary.errors > 0 ? kResource : kOk;
  }

  const MonomialIdeal ideal = load_ideal(opt);
  std::cout << "I = (" << to_string(ideal) << ") in " << ideal.nvars() << " variables\n";

  if (opt.verb == "polarize") {
    Polarization p = polarize(ideal);
    std::cout << "I^p = (" << to_string(p.ideal) << ") in " << p.ideal.nvars() << " variables, added "
              << p.added_vars << '\n';
    write_json(opt, to_json(p));
    return kOk;
  }

  if (opt.verb == "sdepth") {
    SdepthResult r;
    if (opt.module == "quotient") {
      r = sdepth_quotient(ideal, bopts.sdepth);
    } else if (opt.module == "ideal") {
      r = sdepth_ideal(ideal, bopts.sdepth);
    } else {
      throw CLI::ValidationError("--module", "expected 'quotient' or 'ideal'");
    }
    std::cout << "sdepth(" << (opt.module == "quotient" ? "S/I" : "I") << ") = " << r.value << " ("
              << r.witness.intervals.size() << " intervals)\n";
    write_json(opt, {{"ideal", to_string(ideal)},
                     {"module", opt.module},
                     {"sdepth", r.value},
                     {"witness", to_json(r.witness)}});
    return kOk;
  }

  const Decomposition d = decompose(ideal);

  if (opt.verb == "decompose") {
    std::cout << "s = " << d.size() << '\n';
    for (int j = 0; j < d.size(); ++j) std::cout << "  Q" << j + 1 << " = (" << to_string(d.component_ideal(j)) << ")\n";
    write_json(opt, {{"ideal", to_string(ideal)}, {"n", ideal.nvars()}, {"decomposition", to_json(d)}});
    return kOk;
  }

  if (opt.verb == "size") {
    SizeReport s = size_of(d);
    std::cout << "h = " << s.h << ", v = " << s.v << ", size = " << s.size << '\n';
    write_json(opt, to_json(s));
    return kOk;
  }

  if (opt.verb == "bound") {
    MainBound b = theorem_main_bound(d, parse_pivot(opt, d), bopts);
    for (const auto& pb : b.per_pivot) {
      std::cout << "  pivot Q" << pb.pivot + 1 << ": bound " << pb.value << " (" << pb.terms.size() << " terms)\n";
    }
    std::cout << "bound = " << b.value << '\n';
    write_json(opt, {{"ideal", to_string(ideal)}, {"bound", to_json(b, ideal.ring())}});
    return kOk;
  }

  if (opt.verb == "verify-sum") {
    std::optional<int> pivot = parse_pivot(opt, d);
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    for (int p = 0; p < d.size(); ++p) {
      if (pivot && *pivot != p) continue;
      DirectSumReport r = verify_direct_sum(build_split(d, p), opt.degree_cap);
      std::cout << "  pivot Q" << p + 1 << ": " << r.monomials << " monomials, " << r.violations.size()
                << " violations" << (r.cap_warning ? " (degree cap does not exceed generator degrees)" : "")
                << '\n';
      for (const auto& v : r.violations) std::cout << "    " << v << '\n';
      ok = ok && r.ok();
      auto doc = to_json(r);
      doc["pivot"] = p + 1;
      reports.push_back(std::move(doc));
    }
    write_json(opt, {{"ideal", to_string(ideal)}, {"pivots", std::move(reports)}});
    return ok ? kOk : kViolation;
  }

  if (opt.verb == "check") {
    InequalityReport r = size_inequality_check(ideal, bopts);
    std::cout << "size = " << r.size.size << ", hypothesis " << (r.hypothesis.satisfied ? "satisfied" : "violated")
              << ", bound = " << r.bound.value << ", sdepth(S/I) = " << r.sdepth.value
              << "\ninequality_holds = " << (r.inequality_holds ? "true" : "false") << '\n';
    for (const auto& v : r.violations) std::cout << "  VIOLATION " << v << '\n';
    write_json(opt, to_json(r));
    return r.ok() ? kOk : kViolation;
  }

  throw CLI::ValidationError("verb", "unknown verb '" + opt.verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideals: irreducible decomposition, size, exact Stanley depth and lower bounds"};
  Options opt;
  app.add_option("verb", opt.verb, "decompose | size | sdepth | bound | check | verify-sum | polarize | corpus")
      ->required()
      ->check(CLI::IsMember({"decompose", "size", "sdepth", "bound", "check", "verify-sum", "polarize", "corpus"}));
  app.add_option("ideal", opt.ideal_text, "ideal text, e.g. \"x1^2, x2*x3\"");
  app.add_option("--file", opt.file, "read the ideal from a file");
  app.add_option("--ring", opt.ring, "number of variables (overrides inference)")->check(CLI::Range(1, 64));
  app.add_option("--degree-cap", opt.degree_cap, "verify-sum: classify monomials up to this degree")
      ->check(CLI::PositiveNumber);
  app.add_option("--pivot", opt.pivot, "component index (1-based) or 'all'");
  app.add_option("--module", opt.module, "sdepth: quotient (S/I) or ideal (I)");
  app.add_option("--sdepth-cap-points", opt.cap_points, "maximum characteristic poset size");
  app.add_option("--sdepth-timeout-ms", opt.timeout_ms, "time budget per sdepth search");
  app.add_option("--json", opt.json_path, "write the JSON report to this path");
  app.add_option("--seed", opt.seed, "corpus seed");
  app.add_option("--count", opt.count, "corpus size")->check(CLI::NonNegativeNumber);
  app.add_option("--family", opt.family, "squarefree | general | hypothesis-satisfying");
  app.add_option("--n", opt.n_range, "corpus variable-count range lo..hi");
  app.add_option("--gens", opt.gens_range, "corpus generator-count range lo..hi");
  app.add_option("--max-exponent", opt.max_exponent, "corpus exponent bound");
  app.add_option("--max-components", opt.max_components, "corpus: reject ideals with more components");
  app.add_option("--jobs", opt.jobs, "corpus worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run(opt);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const stanley::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const stanley::ExponentCapError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const stanley::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const stanley::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}
