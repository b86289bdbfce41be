#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mmetric/corpus.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/finite_space.hpp"
#include "mmetric/functional_space.hpp"

using namespace mmetric;

namespace {

// Literal transcription of the four axiom sets, kept independent of classify().
SpaceClass oracle_class(const FiniteSpace& s, double tol = 1e-9) {
  const std::size_t n = s.size();
  auto sg = [&](std::size_t x, std::size_t y) { return s.sigma(x, y); };
  auto m = [&](std::size_t x, std::size_t y) { return std::min(sg(x, x), sg(y, y)); };
  bool m_ok = true, p_ok = true, zero = true;
  for (std::size_t x = 0; x < n; ++x) {
    zero = zero && std::abs(sg(x, x)) <= tol;
    for (std::size_t y = 0; y < n; ++y) {
      m_ok = m_ok && m(x, y) <= sg(x, y) + tol;
      p_ok = p_ok && sg(x, x) <= sg(x, y) + tol;
      if (x != y && std::abs(sg(x, x) - sg(x, y)) <= tol && std::abs(sg(y, y) - sg(x, y)) <= tol) {
        m_ok = p_ok = false;
      }
      for (std::size_t z = 0; z < n; ++z) {
        m_ok = m_ok && sg(x, y) - m(x, y) <= sg(x, z) - m(x, z) + sg(z, y) - m(z, y) + tol;
        p_ok = p_ok && sg(x, y) <= sg(x, z) + sg(z, y) - sg(z, z) + tol;
      }
    }
  }
  if (!m_ok) return SpaceClass::none;
  if (!p_ok) return SpaceClass::m_metric;
  return zero ? SpaceClass::metric : SpaceClass::partial_metric;
}

FiniteSpace e2a() { return FiniteSpace({"a", "b"}, {{1, 1}, {1, 2}}); }

}  // namespace

TEST(FiniteSpace, RejectsMalformedTables) {
  EXPECT_THROW(FiniteSpace({}, {}), InvalidSpace);
  EXPECT_THROW(FiniteSpace({"a", "a"}, {{0, 0}, {0, 0}}), InvalidSpace);
  EXPECT_THROW(FiniteSpace({"a", "b"}, {{0, 0}}), InvalidSpace);
  EXPECT_THROW(FiniteSpace({"a"}, {{NAN}}), InvalidSpace);
  try {
    FiniteSpace({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 3}, {2, 4, 0}});
    FAIL() << "asymmetric table accepted";
  } catch (const InvalidSpace& e) {
    ASSERT_TRUE(e.has_witness());
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 2u);
  }
}

TEST(FiniteSpace, JsonRoundTrip) {
  const auto s = e2a();
  EXPECT_EQ(finite_space_from_json(to_json(s)), s);
  EXPECT_EQ(s.index_of("b"), 1u);
  EXPECT_THROW((void)s.index_of("c"), UnknownPoint);
  EXPECT_THROW(finite_space_from_json(nlohmann::json::array()), InvalidSpace);
}

TEST(CoreDistance, MinMaxOfSelfDistances) {
  const auto s = corpus::sumline({1, 3});
  EXPECT_EQ(m_of(s, "1", "3"), 2.0);
  EXPECT_EQ(M_of(s, "1", "3"), 6.0);
  EXPECT_EQ(m_of(s, std::size_t{0}, std::size_t{0}), 2.0);
  const auto f = corpus::maxline_interval();
  EXPECT_EQ(m_of(f, 0.25, 0.75), 0.25);
  EXPECT_EQ(M_of(f, 0.25, 0.75), 0.75);
}

TEST(CoreDistance, ExampleTwoPointSpaceIsMMetricButNotPartial) {
  const auto rep = classify(e2a(), 0.0);
  EXPECT_EQ(rep.space_class, SpaceClass::m_metric);
  EXPECT_FALSE(rep.passes(Axiom::p_lbnd));
  const auto& w = *rep.result(Axiom::p_lbnd).witness;
  EXPECT_EQ(w.points, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(describe_violation(e2a(), Axiom::p_lbnd, w), "sigma(b,b)=2 > sigma(b,a)=1");
}

TEST(CoreDistance, SigmaStarOfTwoPointSpaceCollapses) {
  const auto star = sigma_star(e2a(), 0.0);
  EXPECT_EQ(star.sigma(0, 1), 0.0);
  EXPECT_EQ(star.sigma(0, 0), 0.0);
  const auto rep = classify(star, 0.0);
  EXPECT_NE(rep.space_class, SpaceClass::metric);
  EXPECT_FALSE(rep.passes(Axiom::sigma_sep));
  EXPECT_EQ(rep.result(Axiom::sigma_sep).witness->points, (std::vector<std::size_t>{0, 1}));
}

TEST(CoreDistance, InducedPartialMetricValues) {
  const auto p = induce_partial(e2a());
  EXPECT_EQ(p.sigma(0, 1), 2.0);  // 1 + 2 - 1
  EXPECT_EQ(p.sigma(0, 0), 1.0);
  EXPECT_EQ(p.sigma(1, 1), 2.0);
  EXPECT_EQ(classify(p).space_class, SpaceClass::partial_metric);
}

TEST(CoreDistance, SumlineWithNegativePointsFailsOnlyPLowerBound) {
  const auto s = corpus::sumline({-1, 0, 1, 2});
  const auto rep = classify(s, 0.0);
  EXPECT_EQ(rep.space_class, SpaceClass::m_metric);
  EXPECT_FALSE(rep.passes(Axiom::p_lbnd));
  for (Axiom a : {Axiom::sigma_lbnd, Axiom::sigma_sym, Axiom::sigma_sep, Axiom::sigma_inq}) {
    EXPECT_TRUE(rep.passes(a)) << to_string(a);
  }
}

TEST(CoreDistance, MaxlineIsPartialAndStarIsMetric) {
  const auto s = corpus::maxline({0, 1, 2});
  EXPECT_EQ(classify(s).space_class, SpaceClass::partial_metric);
  const auto star = sigma_star(s);
  EXPECT_EQ(star.sigma(0, 2), 2.0);
  EXPECT_EQ(classify(star).space_class, SpaceClass::metric);
}

TEST(CoreDistance, SinglePointClasses) {
  EXPECT_EQ(classify(FiniteSpace({"x"}, {{-3}})).space_class, SpaceClass::partial_metric);
  EXPECT_EQ(classify(FiniteSpace({"x"}, {{0}})).space_class, SpaceClass::metric);
}

TEST(CoreDistance, DerivationsRequireMMetric) {
  const FiniteSpace bad({"a", "b"}, {{0, -1}, {-1, 0}});
  EXPECT_EQ(classify(bad).space_class, SpaceClass::none);
  EXPECT_THROW(sigma_star(bad), PreconditionError);
  EXPECT_THROW(induce_partial(bad), PreconditionError);
}

TEST(CoreDistance, ClassifyAgreesWithOracleOnRandomTables) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-2, 4);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
    const auto s = FiniteSpace::from_function(labels, [&](std::size_t, std::size_t) { return val(rng); });
    ASSERT_EQ(classify(s).space_class, oracle_class(s)) << nlohmann::json(to_json(s)).dump();
  }
}

TEST(CoreDistance, ClassifyIsMonotone) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = FiniteSpace::from_function({"a", "b", "c"}, [&](std::size_t, std::size_t) { return val(rng); });
    const auto rep = classify(s);
    if (rep.space_class >= SpaceClass::partial_metric) {
      for (Axiom a : {Axiom::sigma_lbnd, Axiom::sigma_sym, Axiom::sigma_sep, Axiom::sigma_inq}) {
        ASSERT_TRUE(rep.passes(a));
      }
    }
    if (rep.space_class == SpaceClass::metric) ASSERT_TRUE(rep.passes(Axiom::zero_self_distance));
  }
}

TEST(CoreDistance, MinMaxInequalityOnSampledTriples) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 20000; ++i) {
    // Dyadic values keep sums exact.
    auto q = [&] { return std::round(u(rng) * 64) / 64; };
    ASSERT_TRUE(min_max_inequality_check(q(), q(), q()));
  }
  EXPECT_TRUE(min_max_inequality_check(1, 1, 1));
}

TEST(FunctionalSpace, RestrictAndDomain) {
  const auto f = corpus::maxline_interval();
  const std::vector<double> pts{0.0, 0.5, 1.0};
  const auto s = f.restrict(pts);
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"0", "0.5", "1"}));
  EXPECT_EQ(s.sigma(0, 1), 0.5);
  const std::vector<double> outside{2.0};
  EXPECT_THROW((void)f.restrict(outside), UnknownPoint);
  EXPECT_THROW(FunctionalSpace("bad", 1, 0, [](double, double) { return 0.0; }), ArgumentError);
  const FunctionalSpace skew("skew", 0, 1, [](double x, double y) { return x - y; });
  EXPECT_THROW((void)skew.restrict(pts), InvalidSpace);
}
