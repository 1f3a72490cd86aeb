#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "stanley/corpus.hpp"
#include "stanley/error.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/text.hpp"
#include "support/oracles.hpp"

namespace stanley {
namespace {

MonomialIdeal ideal(const char* text, int n) {
  ParseOptions opt;
  opt.nvars = n;
  return parse_ideal(text, opt);
}

MonomialIdeal maximal_ideal(int n) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(RingCtx(n), gens);
}

TEST(CharacteristicPoints, Examples) {
  const RingCtx r1(1), r2(2), r3(3);
  auto p = characteristic_points(ideal("x1", 1), MonomialIdeal::unit(r1), Monomial{1});
  EXPECT_EQ(p.points, (std::vector<Monomial>{Monomial{0}}));

  p = characteristic_points(MonomialIdeal::zero(r2), ideal("x1*x2", 2), Monomial{1, 1});
  EXPECT_EQ(p.points, (std::vector<Monomial>{Monomial{1, 1}}));

  const auto i = ideal("x1^2, x2*x3", 3);
  p = characteristic_points(i, MonomialIdeal::unit(r3), Monomial{2, 1, 1});
  EXPECT_EQ(p.points.size(), 6U);
  EXPECT_EQ(p.points.size(), testing::count_module_points(i, MonomialIdeal::unit(r3)));
  EXPECT_EQ(default_cap(i, MonomialIdeal::unit(r3)), (Monomial{2, 1, 1}));
}

TEST(CharacteristicPoints, Errors) {
  EXPECT_THROW(characteristic_points(ideal("x1", 2), ideal("x2", 2), Monomial{1, 1}), DomainError);
  EXPECT_THROW(characteristic_points(ideal("x1^3", 1), MonomialIdeal::unit(RingCtx(1)), Monomial{2}), DomainError);
}

TEST(Sdepth, Examples) {
  EXPECT_EQ(sdepth_quotient(ideal("x1*x2", 2)).value, 1);
  EXPECT_EQ(sdepth_ideal(ideal("x1, x2", 2)).value, 1);
  EXPECT_GE(sdepth_quotient(ideal("x1^2, x2*x3", 3)).value, 1);
  EXPECT_EQ(sdepth_quotient(ideal("x1", 1)).value, 0);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(sdepth_quotient(maximal_ideal(n)).value, 0);
}

TEST(Sdepth, MaximalIdealMatchesKnownValue) {
  // sdepth (x1, ..., xn) = ceil(n / 2).
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(sdepth_ideal(maximal_ideal(n)).value, (n + 1) / 2) << n;
}

TEST(Sdepth, PurePowerQuotients) {
  EXPECT_EQ(sdepth_quotient(ideal("x1^2, x3^3", 4)).value, 2);
  EXPECT_EQ(sdepth_quotient(ideal("x2", 3)).value, 2);
}

TEST(Sdepth, Errors) {
  const auto i = ideal("x1", 2);
  EXPECT_THROW(sdepth_module(i, i), DomainError);
  EXPECT_THROW(sdepth_module(ideal("x1", 2), ideal("x2", 2)), DomainError);
  EXPECT_THROW(sdepth_quotient(MonomialIdeal::unit(RingCtx(2))), DomainError);
  EXPECT_THROW(sdepth_ideal(MonomialIdeal::zero(RingCtx(2))), DomainError);

  SdepthOptions small;
  small.max_points = 3;
  EXPECT_THROW(sdepth_quotient(ideal("x1^2, x2^2", 2), small), ResourceError);

  SdepthOptions few_cells;
  few_cells.max_candidate_cells = 2;
  EXPECT_THROW(sdepth_ideal(ideal("x1, x2, x3", 3), few_cells), ResourceError);
  SdepthOptions tiny_box;
  tiny_box.max_box = 8;
  EXPECT_THROW(sdepth_quotient(ideal("x1^3, x2^3", 2), tiny_box), ResourceError);
}

TEST(Sdepth, Timeout) {
  SdepthOptions opt;
  opt.timeout = std::chrono::milliseconds(0);
  EXPECT_THROW(sdepth_ideal(ideal("x1*x2, x2*x3, x3*x4, x4*x5, x1*x5, x1*x3", 5), opt), ResourceError);
}

TEST(Sdepth, WitnessIsValid) {
  for (const char* text : {"x1^2, x2*x3", "x1*x2, x2*x3, x3*x4", "x1^3*x2, x2^2"}) {
    const auto i = ideal(text, 4);
    const auto unit = MonomialIdeal::unit(i.ring());
    const auto q = sdepth_quotient(i);
    EXPECT_TRUE(is_valid_witness(characteristic_points(i, unit, q.witness.cap), q.witness));
    EXPECT_EQ(q.witness.sdepth, q.value);
    const auto zero = MonomialIdeal::zero(i.ring());
    const auto d = sdepth_ideal(i);
    EXPECT_TRUE(is_valid_witness(characteristic_points(zero, i, d.witness.cap), d.witness));
  }
}

TEST(Sdepth, WitnessCheckerRejectsBadCovers) {
  const auto i = ideal("x1*x2", 2);
  const auto unit = MonomialIdeal::unit(i.ring());
  auto q = sdepth_quotient(i);
  const auto poset = characteristic_points(i, unit, q.witness.cap);
  auto missing = q.witness;
  missing.intervals.pop_back();
  EXPECT_FALSE(is_valid_witness(poset, missing));
  auto overlap = q.witness;
  overlap.intervals.push_back(overlap.intervals.front());
  EXPECT_FALSE(is_valid_witness(poset, overlap));
  auto inflated = q.witness;
  inflated.sdepth += 1;
  EXPECT_FALSE(is_valid_witness(poset, inflated));
}

TEST(Sdepth, SubringEdgeCases) {
  const RingCtx r(3);
  EXPECT_EQ(subring_sdepth_quotient(MonomialIdeal::zero(r), VarSet()), 0);
  EXPECT_EQ(subring_sdepth_quotient(MonomialIdeal::unit(r), VarSet()), std::nullopt);
  EXPECT_EQ(subring_sdepth_ideal(MonomialIdeal::unit(r), VarSet()), 0);
  EXPECT_EQ(subring_sdepth_ideal(MonomialIdeal::zero(r), VarSet(0b110)), std::nullopt);
  EXPECT_EQ(subring_sdepth_quotient(MonomialIdeal::zero(r), VarSet(0b110)), 2);
  EXPECT_EQ(subring_sdepth_quotient(ideal("x3", 3), VarSet(0b110)), 1);
  EXPECT_EQ(subring_sdepth_ideal(ideal("x2", 3), VarSet(0b110)), 2);
  EXPECT_THROW(subring_sdepth_quotient(ideal("x1", 3), VarSet(0b110)), DomainError);
}

// Random J/I pairs small enough for full interval-partition enumeration.
TEST(Sdepth, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 300) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto upper = testing::random_ideal(rng, n, 1 + rng() % 3, 2);
    if (rng() % 4 == 0) upper = MonomialIdeal::unit(upper.ring());
    if (upper.is_zero()) continue;
    std::vector<Monomial> lower_gens;
    for (const auto& g : upper.generators()) {
      if (rng() % 2) lower_gens.push_back(g * testing::random_monomial(rng, n, 2));
    }
    if (rng() % 3 == 0) lower_gens.clear();
    const MonomialIdeal lower(upper.ring(), lower_gens);
    if (lower == upper) continue;
    const std::size_t pts = testing::count_module_points(lower, upper);
    if (pts == 0 || pts > 14) continue;
    const auto r = sdepth_module(lower, upper);
    EXPECT_EQ(r.value, testing::naive_sdepth_module(lower, upper))
        << to_string(lower) << " in " << to_string(upper);
    ++checked;
  }
}

std::vector<MonomialIdeal> corpus(Family f, int count, int n_max, int max_exponent) {
  CorpusSpec spec;
  spec.family = f;
  spec.count = count;
  spec.n_min = 1;
  spec.n_max = n_max;
  spec.max_exponent = max_exponent;
  spec.seed = 23;
  return generate_corpus(spec);
}

TEST(Sdepth, CapRobustness) {
  for (const auto& i : corpus(Family::General, 60, 3, 2)) {
    if (i.is_zero() || i.is_unit()) continue;
    const auto unit = MonomialIdeal::unit(i.ring());
    const auto zero = MonomialIdeal::zero(i.ring());
    Monomial bigger = default_cap(i, unit);
    for (int k = 0; k < bigger.nvars(); ++k) bigger[k] += 1;
    EXPECT_EQ(sdepth_module(i, unit, bigger).value, sdepth_quotient(i).value) << to_string(i);
    EXPECT_EQ(sdepth_module(zero, i, bigger).value, sdepth_ideal(i).value) << to_string(i);
  }
}

TEST(Sdepth, NonzeroIdealsHavePositiveSdepth) {
  for (const auto& i : corpus(Family::General, 60, 4, 3)) {
    if (i.is_zero()) continue;
    EXPECT_GE(sdepth_ideal(i).value, 1) << to_string(i);
  }
}

TEST(Sdepth, PolarizationShiftsByAddedVariables) {
  const auto example = ideal("x1^2, x2*x3", 3);
  EXPECT_EQ(sdepth_quotient(example).value, sdepth_quotient(polarize(example).ideal).value - 1);
  for (const auto& i : corpus(Family::General, 40, 3, 2)) {
    if (i.is_zero() || i.is_unit()) continue;
    const auto p = polarize(i);
    EXPECT_EQ(sdepth_quotient(i).value, sdepth_quotient(p.ideal).value - p.added_vars) << to_string(i);
  }
}

}  // namespace
}  // namespace stanley
