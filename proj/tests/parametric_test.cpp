#include <gtest/gtest.h>

#include <cmath>

#include "cofl/candidates.hpp"
#include "cofl/oracle.hpp"
#include "cofl/parametric.hpp"
#include "support.hpp"

namespace cofl {
namespace {

using test::segment;

// Bisection on a sign change of f over [lo, hi].
template <class F>
double bisect_root(F f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

TEST(ComparisonRoots, RadicalCollapsesToLSquared) {
  const auto r = comparison_roots({0, -6, 4, 0, 0}, {0, 10});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 1, 1e-9);
  EXPECT_NEAR(r[1], 2, 1e-9);
}

TEST(ComparisonRoots, PureRadical) {
  const auto r = comparison_roots({0, 0, 0, 4, 4}, {0, 10});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 2, 1e-7);
}

TEST(ComparisonRoots, AgreesWithBisection) {
  const ComparisonPoly cp{1, 0, -25, 9, 0};
  const double expected = bisect_root(cp, 3, 25);
  const auto r = comparison_roots(cp, {0, 25});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], expected, 1e-9);
}

TEST(ComparisonRoots, AcceptedRootsSatisfyTheUnsquaredForm) {
  SplitMix64 rng(17);
  int found = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const ComparisonPoly cp{8 * rng.uniform() - 4, 20 * rng.uniform() - 10, 40 * rng.uniform() - 20,
                            9 * rng.uniform(), 9 * rng.uniform()};
    for (double L : comparison_roots(cp, {0, 30})) {
      ++found;
      EXPECT_LE(std::abs(cp(L)), 1e-7 * (1 + std::abs(cp.C)));
      EXPECT_GE(L * L, std::max(cp.D, cp.E) - 1e-9);
    }
  }
  EXPECT_GT(found, 100);
}

TEST(SolveParametric, EmptySetReturnsTheUpperBound) {
  const OptimalResult r = solve_parametric(segment(12, {}, 4));
  EXPECT_DOUBLE_EQ(r.r_max, 2.0);
  EXPECT_EQ(r.packing.centers, (std::vector<double>{0, 4, 8, 12}));
}

TEST(SolveParametric, MatchesPinnedOptima) {
  EXPECT_NEAR(solve_parametric(segment(10, {{5, 3}}, 2)).r_max, 5.0, 1e-9);
  EXPECT_NEAR(solve_parametric(segment(10, {{2, 1}}, 2)).r_max, 2.72991677469778, 1e-9);
  EXPECT_NEAR(solve_parametric(segment(10, {{2, 1}, {7, 1}}, 3)).r_max, 2.23606797749979, 1e-9);
}

TEST(SolveParametric, RejectsRectilinear) {
  EXPECT_THROW(solve_parametric(segment(10, {{5, 3}}, 2, Metric::kRectilinear)), std::invalid_argument);
}

// The bracket only shrinks and its lower end stays feasible.
TEST(SolveParametric, BracketInvariant) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    GenParams gp;
    gp.seed = seed;
    gp.n = static_cast<int>(seed % 20);
    gp.k = 2 + static_cast<int>(seed % 5);
    const Instance inst = gen_instance(gp);
    std::vector<SearchInterval> trace;
    const OptimalResult r = solve_parametric(inst, &trace);
    double lo = 0, hi = inst.upper_bound();
    for (const SearchInterval& b : trace) {
      EXPECT_GE(b.lo, lo);
      EXPECT_LE(b.hi, hi);
      EXPECT_LE(b.lo, b.hi);
      if (b.lo > 0) {
        EXPECT_TRUE(decide_segment(inst, b.lo).feasible) << "seed " << seed;
      }
      lo = b.lo;
      hi = b.hi;
    }
    EXPECT_GE(r.r_max, lo);
    EXPECT_LE(r.r_max, hi);
  }
}

// Decision calls stay linear in n + k: each comparison costs O(1) roots.
// Observed maximum on 2000 random instances was 1.3 (n + k).
constexpr double kParametricCallConstant = 4.0;

TEST(SolveParametric, AgreesWithExactAndStaysWithinCallBound) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GenParams gp;
    gp.seed = seed * 104729;
    gp.n = static_cast<int>(seed % 9) + (seed % 10 == 0 ? 40 : 0);
    gp.k = 2 + static_cast<int>(seed % 3);
    const Instance inst = gen_instance(gp);
    const OptimalResult p = solve_parametric(inst);
    const OptimalResult e = solve_exact(inst);
    EXPECT_NEAR(p.r_max, e.r_max, 1e-9) << "seed " << gp.seed;
    EXPECT_TRUE(verify_packing(inst, p.packing));
    const double n_plus_k = static_cast<double>(inst.points.size()) + inst.k;
    EXPECT_LE(static_cast<double>(p.stats.decision_calls), kParametricCallConstant * n_plus_k);
  }
}

TEST(SolveK2, PinnedOptima) {
  const OptimalResult empty = solve_k2(segment(10, {}, 2));
  EXPECT_DOUBLE_EQ(empty.r_max, 5.0);
  EXPECT_EQ(empty.packing.centers, (std::vector<double>{0, 10}));
  EXPECT_NEAR(solve_k2(segment(10, {{5, 3}}, 2)).r_max, 5.0, 1e-9);
  EXPECT_NEAR(solve_k2(segment(10, {{2, 1}, {7, 1}}, 2)).r_max, 2.69258240356725, 1e-9);
}

TEST(SolveK2, RejectsOtherK) {
  EXPECT_THROW(solve_k2(segment(10, {}, 3)), std::invalid_argument);
}

TEST(SolveK2, AgreesWithExactWithinPolylogCalls) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenParams gp;
    gp.seed = seed * 31;
    gp.n = static_cast<int>(seed % 40);
    gp.k = 2;
    const Instance inst = gen_instance(gp);
    const OptimalResult r = solve_k2(inst);
    EXPECT_NEAR(r.r_max, solve_exact(inst).r_max, 1e-9) << "seed " << gp.seed;
    EXPECT_TRUE(verify_packing(inst, r.packing));
    const double lg = std::ceil(std::log2(static_cast<double>(inst.points.size()) + 1)) + 1;
    EXPECT_LE(static_cast<double>(r.stats.decision_calls), kK2CallConstant * lg * lg);
  }
}

}  // namespace
}  // namespace cofl
