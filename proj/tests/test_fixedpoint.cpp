#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "mmetric/corpus.hpp"
#include "mmetric/fixedpoint.hpp"

using namespace mmetric;

namespace {

template <class S>
MapSystem<S> system(const std::string& name) {
  return std::get<MapSystem<S>>(corpus::get(name).payload);
}

const auto functional = system<FunctionalSpace>;
const auto grid = system<FiniteSpace>;

}  // namespace

TEST(Solve, HalvingReachesZero) {
  const auto res = solve(functional("halving"));
  ASSERT_TRUE(res.found()) << res.message;
  EXPECT_LE(std::abs(*res.point), 1e-9);
  EXPECT_EQ(res.branch, Branch::woc_and_nonexpansive);
  EXPECT_LE(res.residual, 1e-6);
  ASSERT_TRUE(res.hypotheses);
  EXPECT_TRUE(res.hypotheses->woc.holds);
  EXPECT_TRUE(res.hypotheses->nonexpansive.holds);
  EXPECT_FALSE(res.uniqueness);
}

TEST(Solve, ConstantMapOnGrid) {
  const auto res = solve(grid("constant_grid"));
  ASSERT_TRUE(res.found());
  EXPECT_EQ(*res.point, 0u);
}

TEST(Solve, AlternatingOrbitIsRejected) {
  const auto res = solve(grid("e2b_swap"));
  EXPECT_EQ(res.status, SolveStatus::orbit_not_r_cauchy);
  EXPECT_EQ(res.branch, Branch::none);
  EXPECT_FALSE(res.point);
  EXPECT_NE(res.message.find("orbit not r-Cauchy"), std::string::npos) << res.message;
}

TEST(Solve, BranchHintIsHonouredOnlyWhenItHolds) {
  SolveOptions opts;
  opts.branch_hint = Branch::nonexpansive_and_bounded_by_aa;
  // maxline on [0,1] is bounded below by sigma(0,0) = 0.
  EXPECT_EQ(solve(functional("halving"), opts).branch, Branch::nonexpansive_and_bounded_by_aa);
  opts.branch_hint = Branch::woc_and_bounded_by_ffa;
  EXPECT_EQ(solve(functional("halving"), opts).branch, Branch::woc_and_bounded_by_ffa);
}

TEST(Solve, RejectsNonMMetricSpaces) {
  const FiniteSpace bad({"a", "b"}, {{0, -1}, {-1, 0}});
  const auto res = solve(finite_map(bad, {0, 1}, 0));
  EXPECT_EQ(res.status, SolveStatus::space_not_m_metric);
  EXPECT_FALSE(res.point);
}

TEST(Solve, MaxIterGuard) {
  SolveOptions opts;
  opts.max_iter = 1;
  EXPECT_THROW(solve(functional("halving"), opts), ArgumentError);
}

TEST(Solve, NoFabrication) {
  for (const char* name : {"expanding_grid", "constant_one_grid"}) {
    const auto res = solve(grid(name));
    EXPECT_EQ(res.status, SolveStatus::no_branch_verified) << name;
    EXPECT_EQ(res.branch, Branch::none);
    EXPECT_FALSE(res.point);
  }
  const auto shift = solve(functional("affine_shift"));
  EXPECT_EQ(shift.status, SolveStatus::no_branch_verified);
  EXPECT_FALSE(shift.point);
}

// Whatever solve returns on a finite system really is fixed by f.
TEST(Solve, SoundOnEveryFiniteStart) {
  for (const auto& name : corpus::list()) {
    const auto entry = corpus::get(name);
    const auto* sys = std::get_if<MapSystem<FiniteSpace>>(&entry.payload);
    if (!sys) continue;
    for (std::size_t x0 = 0; x0 < sys->space.size(); ++x0) {
      const auto res = solve(sys->with_base(x0));
      if (res.found()) {
        ASSERT_EQ(sys->f(*res.point), *res.point) << name << " from " << x0;
      } else {
        ASSERT_FALSE(res.point);
        ASSERT_EQ(res.branch, Branch::none);
      }
    }
  }
}

TEST(Banach, HalvingUniqueZero) {
  const auto res = banach(functional("halving"), 0.5);
  ASSERT_TRUE(res.found()) << res.message;
  EXPECT_EQ(res.mode, "banach");
  EXPECT_LE(std::abs(*res.point), 1e-9);
  EXPECT_LE(res.residual, 1e-9);
  ASSERT_TRUE(res.certificate);
  EXPECT_EQ(res.certificate->kind, CertificateKind::phi_r);
  ASSERT_TRUE(res.uniqueness);
  EXPECT_EQ(res.uniqueness->method, "multi_start");
  EXPECT_EQ(res.uniqueness->starts, 64u);
  EXPECT_TRUE(res.uniqueness->unique);
}

TEST(Banach, ConstantAndThirding) {
  const auto zero = banach(grid("constant_grid"), 0.0);
  ASSERT_TRUE(zero.found());
  EXPECT_EQ(*zero.point, 0u);
  ASSERT_TRUE(zero.uniqueness);
  EXPECT_EQ(zero.uniqueness->method, "exhaustive");
  EXPECT_EQ(zero.uniqueness->fixed_points, std::vector<std::size_t>{0});

  const auto third = banach(functional("thirding"), 1.0 / 3.0);
  ASSERT_TRUE(third.found());
  EXPECT_LE(std::abs(*third.point), 1e-9);
}

TEST(Banach, Preconditions) {
  EXPECT_THROW(banach(functional("halving"), 1.0), ArgumentError);
  EXPECT_THROW(banach(functional("halving"), -0.1), ArgumentError);
  // x/2 is not a 0.4-contraction for sigma = max.
  EXPECT_THROW(banach(functional("halving"), 0.4), PreconditionError);
  const FunctionalSpace open("open", 0, 1, [](double x, double y) { return std::max(x, y); }, 0.0);
  EXPECT_THROW(banach(affine_map(open, 0.5, 0.0, 1.0), 0.5), PreconditionError);
  const FunctionalSpace negative("neg", -1, 0, [](double x, double y) { return std::max(x, y); },
                                 -1.0, true);
  EXPECT_THROW(banach(affine_map(negative, 0.5, 0.0, -1.0), 0.5), PreconditionError);
}

TEST(Kannan, QuarteringAndZeroRate) {
  const auto res = kannan(functional("quartering"), 0.25);
  ASSERT_TRUE(res.found()) << res.message;
  EXPECT_EQ(res.mode, "kannan");
  EXPECT_LE(std::abs(*res.point), 1e-9);
  EXPECT_EQ(res.branch, Branch::woc_and_bounded_by_ffa);
  ASSERT_TRUE(res.certificate);
  EXPECT_EQ(res.certificate->kind, CertificateKind::c_r);
  EXPECT_EQ(res.certificate->c, 0.5);

  const auto zero = kannan(grid("constant_grid"), 0.0);
  ASSERT_TRUE(zero.found());
  EXPECT_EQ(*zero.point, 0u);
}

TEST(Kannan, HalvingFailsTheCondition) {
  try {
    kannan(functional("halving"), 0.2);
    FAIL() << "condition accepted";
  } catch (const PreconditionError& e) {
    // sigma(f0, f1) = 0.5 > 0.2 [sigma(0,0) + sigma(1, 0.5)] = 0.2.
    EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(kannan(functional("halving"), 0.5), ArgumentError);
}

TEST(Kannan, DirectConditionCheck) {
  const auto check = check_kannan_condition(functional("halving"), 0.2);
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.witness);
  EXPECT_EQ(check.witness->x, 0.0);
  EXPECT_EQ(check.witness->y, 1.0);
  EXPECT_EQ(check.witness->lhs, 0.5);
  EXPECT_DOUBLE_EQ(check.witness->rhs, 0.2);
}

TEST(Uniqueness, ExhaustiveScanFindsExactlyOne) {
  const auto res = banach(grid("halving_grid"), 0.5);
  ASSERT_TRUE(res.found());
  ASSERT_TRUE(res.uniqueness);
  EXPECT_EQ(res.uniqueness->starts, 4u);
  EXPECT_EQ(res.uniqueness->fixed_points, std::vector<std::size_t>{0});
  EXPECT_TRUE(res.uniqueness->zero_self_distances);
  EXPECT_TRUE(res.uniqueness->unique);
}

TEST(Names, RoundTrip) {
  for (Branch b : {Branch::woc_and_nonexpansive, Branch::woc_and_bounded_by_ffa,
                   Branch::nonexpansive_and_bounded_by_aa, Branch::none}) {
    EXPECT_EQ(parse_branch(to_string(b)), b);
  }
  EXPECT_FALSE(parse_branch("sideways"));
  EXPECT_EQ(to_string(SolveStatus::orbit_not_r_cauchy), "orbit_not_r_cauchy");
}
