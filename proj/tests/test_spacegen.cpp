#include <gtest/gtest.h>

#include <algorithm>

#include "mmetric/corpus.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/spacegen.hpp"

using namespace mmetric;

TEST(SpaceGen, SinglePoint) {
  GenConfig cfg;
  cfg.n = 1;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    const auto s = gen_m_metric(cfg);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(classify(s).satisfies(SpaceClass::m_metric));
    EXPECT_TRUE(classify(gen_partial_metric(cfg)).satisfies(SpaceClass::partial_metric));
  }
}

TEST(SpaceGen, FiveConsecutiveSeedRuns) {
  GenConfig cfg;
  cfg.n = 5;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    cfg.seed = seed;
    ASSERT_TRUE(classify(gen_m_metric(cfg)).satisfies(SpaceClass::m_metric)) << "seed " << seed;
  }
}

TEST(SpaceGen, ZeroWeightsGiveMinOfSelfDistances) {
  GenConfig cfg;
  cfg.n = 4;
  cfg.d_range = {0.0, 0.0};
  cfg.ensure_distinct_diag = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    cfg.seed = seed;
    const auto s = gen_m_metric(cfg);
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        ASSERT_EQ(s.sigma(x, y), std::min(s.sigma(x, x), s.sigma(y, y)));
      }
    }
    EXPECT_EQ(classify(s).space_class, SpaceClass::m_metric);
  }
}

TEST(SpaceGen, DistinctDiagonal) {
  GenConfig cfg;
  cfg.n = 6;
  cfg.diag_range = {0.0, 0.01};
  cfg.ensure_distinct_diag = true;
  const auto s = gen_m_metric(cfg);
  std::vector<double> diag;
  for (std::size_t i = 0; i < s.size(); ++i) diag.push_back(s.sigma(i, i));
  std::sort(diag.begin(), diag.end());
  EXPECT_EQ(std::adjacent_find(diag.begin(), diag.end()), diag.end());
}

TEST(SpaceGen, DeterministicPerSeed) {
  GenConfig cfg;
  cfg.seed = 42;
  EXPECT_EQ(gen_m_metric(cfg), gen_m_metric(cfg));
  auto other = cfg;
  other.seed = 43;
  EXPECT_NE(gen_m_metric(cfg), gen_m_metric(other));
}

TEST(SpaceGen, DegenerateConfigExhaustsBudget) {
  GenConfig cfg;
  cfg.n = 3;
  cfg.diag_range = {1.0, 1.0};
  cfg.d_range = {0.0, 0.0};
  EXPECT_THROW(gen_m_metric(cfg), CapacityError);
  cfg.ensure_distinct_diag = true;
  EXPECT_THROW(gen_m_metric(cfg), CapacityError);
}

TEST(SpaceGen, InvalidConfig) {
  GenConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(gen_m_metric(cfg), ArgumentError);
  cfg.n = 2;
  cfg.d_range = {-1.0, 1.0};
  EXPECT_THROW(gen_m_metric(cfg), ArgumentError);
}

TEST(SpaceGen, MaxlineIsPartial) {
  EXPECT_EQ(classify(corpus::maxline({0, 1, 2})).space_class, SpaceClass::partial_metric);
}

// Every M-metric decomposes as sigma = d + m with d a nonnegative pseudometric.
TEST(SpaceGen, DecompositionIsAPseudometric) {
  GenConfig cfg;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    cfg.seed = seed;
    cfg.n = 1 + seed % 6;
    const auto s = gen_m_metric(cfg);
    const std::size_t n = s.size();
    auto d = [&](std::size_t x, std::size_t y) { return s.sigma(x, y) - m_of(s, x, y); };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ASSERT_GE(d(x, y), 0.0);
        for (std::size_t z = 0; z < n; ++z) ASSERT_LE(d(x, y), d(x, z) + d(z, y) + 1e-9);
      }
    }
  }
}

TEST(SpaceGen, PartialGeneratorOutput) {
  GenConfig cfg;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    cfg.seed = seed;
    cfg.n = 1 + seed % 6;
    ASSERT_TRUE(classify(gen_partial_metric(cfg)).satisfies(SpaceClass::partial_metric));
  }
  EXPECT_EQ(generated_labels(3), (std::vector<std::string>{"p0", "p1", "p2"}));
}
