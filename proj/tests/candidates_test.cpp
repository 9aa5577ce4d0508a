#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "cofl/candidates.hpp"
#include "cofl/oracle.hpp"
#include "support.hpp"

namespace cofl {
namespace {

using test::segment;

bool contains_value(const std::vector<Candidate>& cs, double v, double tol = 1e-9) {
  for (const Candidate& c : cs)
    if (std::abs(c.value - v) <= tol) return true;
  return false;
}

TEST(CandidatesLinf, EmptySetHasOnlyTheUpperBound) {
  const auto cs = candidates_linf(segment(12, {}, 4, Metric::kRectilinear));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_DOUBLE_EQ(cs[0].value, 2.0);
  EXPECT_EQ(cs[0].tag, CaseTag::kCase0);
}

TEST(CandidatesL2, EmptySetHasOnlyTheUpperBound) {
  const auto cs = candidates_l2(segment(12, {}, 4));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_DOUBLE_EQ(cs[0].value, 2.0);
}

TEST(CandidatesL2, DiskFromTheLeftEndThroughAPoint) {
  // Center 0, boundary through (4, 2): r^2 = 16 + 4.
  EXPECT_TRUE(contains_value(candidates_l2(segment(10, {{4, 2}}, 2)), std::sqrt(20.0)));
}

TEST(CandidatesL2, DiskBetweenTwoPoints) {
  // Center 5 with both (2, 0) and (8, 0) on the boundary. With k = 3 the
  // value would exceed the upper bound 10 / 4 and be dropped.
  EXPECT_TRUE(contains_value(candidates_l2(segment(10, {{2, 0}, {8, 0}}, 2)), 3.0));
}

TEST(CandidatesL2, SortedDistinctAndBounded) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams gp;
    gp.seed = seed;
    gp.n = static_cast<int>(seed % 9);
    gp.k = 2 + static_cast<int>(seed % 4);
    gp.metric = seed % 2 ? Metric::kEuclidean : Metric::kRectilinear;
    const Instance inst = gen_instance(gp);
    const auto cs = candidates(inst);
    ASSERT_FALSE(cs.empty());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      EXPECT_GT(cs[i].value, 0.0);
      EXPECT_LE(cs[i].value, inst.upper_bound());
      if (i > 0) {
        EXPECT_GT(cs[i].value - cs[i - 1].value, 1e-12);
      }
    }
  }
}

TEST(RadicalEquation, RootsSatisfyTheUnsquaredEquation) {
  SplitMix64 rng(21);
  int found = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const double g0 = 20 * rng.uniform() - 5;
    const double g1 = -2.0 * static_cast<int>(4 * rng.uniform());
    const std::array<double, 2> w{rng.uniform() < 0.5 ? 1.0 : -1.0, rng.uniform() < 0.5 ? 1.0 : -1.0};
    const std::array<double, 2> a{9 * rng.uniform(), 9 * rng.uniform()};
    for (double r : detail::radical_equation_roots(g0, g1, w, a, 0.0, 20.0)) {
      ++found;
      const double s1 = std::sqrt(r * r - a[0]);
      const double s2 = std::sqrt(r * r - a[1]);
      const double scale = std::abs(g0) + std::abs(g1 * r) + s1 + s2;
      EXPECT_LE(std::abs(g0 + g1 * r - w[0] * s1 - w[1] * s2), 1e-7 * (1 + scale));
    }
  }
  EXPECT_GT(found, 100);
}

TEST(RadicalEquation, SingleRadicalClosedForm) {
  // 4 = sqrt(r^2 - 4)  =>  r = sqrt(20)
  const std::array<double, 1> w{1.0};
  const std::array<double, 1> a{4.0};
  const auto roots = detail::radical_equation_roots(4.0, 0.0, w, a, 0.0, 10.0);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], std::sqrt(20.0), 1e-12);
  // The squared equation also has r = -sqrt(20); the sign-flipped one has none.
  const std::array<double, 1> neg{-1.0};
  EXPECT_TRUE(detail::radical_equation_roots(4.0, 0.0, neg, a, 0.0, 10.0).empty());
}

// Every candidate accepted by the decision yields a certified packing.
TEST(Candidates, AcceptedCandidatesAreCertified) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams gp;
    gp.seed = seed;
    gp.n = 1 + static_cast<int>(seed % 6);
    gp.k = 2 + static_cast<int>(seed % 3);
    gp.metric = seed % 2 ? Metric::kEuclidean : Metric::kRectilinear;
    const Instance inst = gen_instance(gp);
    for (const Candidate& c : candidates(inst)) {
      const DecisionOutcome d = decide_segment(inst, c.value);
      if (d.feasible) {
        EXPECT_TRUE(verify_packing(inst, *d.packing)) << "seed " << seed << " r " << c.value;
      }
    }
  }
}

TEST(SolveExact, EmptySet) {
  const OptimalResult r = solve_exact(segment(12, {}, 4));
  EXPECT_DOUBLE_EQ(r.r_max, 2.0);
  EXPECT_EQ(r.packing.centers, (std::vector<double>{0, 4, 8, 12}));
}

TEST(SolveExact, UpperBoundAchievedPastOnePoint) {
  const OptimalResult r = solve_exact(segment(10, {{5, 3}}, 2));
  EXPECT_DOUBLE_EQ(r.r_max, 5.0);
  EXPECT_EQ(r.packing.centers, (std::vector<double>{0, 10}));
}

// Pinned from oracle_rmax. It matches the closed form (32 - sqrt(244)) / 6:
// centers 10 - 2r and 10, with (2, 1) on the first disk's boundary, so
// 10 - 2r = 2 + sqrt(r^2 - 1).
TEST(SolveExact, PointNearTheLeftEnd) {
  const OptimalResult r = solve_exact(segment(10, {{2, 1}}, 2));
  EXPECT_NEAR(r.r_max, 2.72991677469778, 1e-12);
  EXPECT_NEAR(r.r_max, (32 - std::sqrt(244.0)) / 6, 1e-12);
  EXPECT_LT(r.r_max, 5.0);
  EXPECT_TRUE(verify_packing(segment(10, {{2, 1}}, 2), r.packing));
}

TEST(SolveExact, TwoPointsPinnedByOracle) {
  EXPECT_NEAR(solve_exact(segment(10, {{2, 1}, {7, 1}}, 2)).r_max, 2.69258240356725, 1e-12);
  EXPECT_NEAR(solve_exact(segment(10, {{2, 1}, {7, 1}}, 3)).r_max, 2.23606797749979, 1e-12);
}

TEST(SolveExact, RectilinearPinnedByOracle) {
  EXPECT_DOUBLE_EQ(solve_exact(segment(10, {{4, 1}}, 2, Metric::kRectilinear)).r_max, 4.0);
}

// Three squares, one point on the line at x = 4: the optimum 2 places the
// second square's left edge on the point. Only a chain of two squares
// measured from p reaches it, so a first-square-only candidate family
// would miss this value.
TEST(SolveExact, RectilinearChainFromTheLeftEnd) {
  const Instance inst = segment(10, {{4, 0}}, 3, Metric::kRectilinear);
  EXPECT_DOUBLE_EQ(solve_exact(inst).r_max, 2.0);
  EXPECT_DOUBLE_EQ(oracle_rmax(inst), 2.0);
}

TEST(SolveExact, MatchesOracleOnSmallInstances) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GenParams gp;
    gp.seed = seed * 7919;
    gp.n = 1 + static_cast<int>(seed % 6);
    gp.k = 2 + static_cast<int>(seed % 2);
    gp.metric = seed % 2 ? Metric::kEuclidean : Metric::kRectilinear;
    const Instance inst = gen_instance(gp);
    const OptimalResult r = solve_exact(inst);
    const OracleReport o = oracle_report(inst);
    EXPECT_NEAR(r.r_max, o.rmax, 1e-9) << "seed " << gp.seed;
    // The sweep is an independent lower estimate at resolution upper / 1e6.
    EXPECT_GE(r.r_max, o.sweep - 1e-12);
    EXPECT_LE(r.r_max, o.sweep + inst.upper_bound() * 1e-6 + 1e-12);
    EXPECT_LE(r.r_max, inst.upper_bound());
    EXPECT_TRUE(verify_packing(inst, r.packing));
  }
}

}  // namespace
}  // namespace cofl
