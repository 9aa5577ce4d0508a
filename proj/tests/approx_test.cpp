#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cofl/approx.hpp"
#include "cofl/candidates.hpp"
#include "cofl/oracle.hpp"
#include "support.hpp"

namespace cofl {
namespace {

using test::circle;
using test::segment;

TEST(FptasSegment, EmptySet) {
  const ApproxResult r = solve_fptas_segment(segment(12, {}, 4), 0.01);
  EXPECT_GE(r.radius, 1.98);
  EXPECT_LE(r.radius, 2.0);
  EXPECT_GE(solve_fptas_segment(segment(12, {}, 4), 0.5).radius, 1.0);
}

TEST(FptasSegment, OnePoint) {
  const ApproxResult r = solve_fptas_segment(segment(10, {{5, 3}}, 2), 0.01);
  EXPECT_GE(r.radius, 4.95);
  EXPECT_LE(r.radius, 5.0);
}

TEST(FptasSegment, RejectsEpsilonOutsideUnitInterval) {
  EXPECT_THROW(solve_fptas_segment(segment(10, {}, 2), 0.0), std::invalid_argument);
  EXPECT_THROW(solve_fptas_segment(segment(10, {}, 2), 1.0), std::invalid_argument);
}

TEST(FptasSegment, GuaranteeCertificateAndCallCount) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenParams gp;
    gp.seed = seed;
    gp.n = static_cast<int>(seed % 10);
    gp.k = 2 + static_cast<int>(seed % 4);
    gp.metric = seed % 2 ? Metric::kEuclidean : Metric::kRectilinear;
    const Instance inst = gen_instance(gp);
    const double opt = solve_exact(inst).r_max;
    for (double eps : {0.1, 1e-3, 1e-6}) {
      const ApproxResult r = solve_fptas_segment(inst, eps);
      EXPECT_GE(r.radius, (1 - eps) * opt - 1e-12) << "seed " << seed;
      EXPECT_LE(r.radius, opt + 1e-9);
      EXPECT_TRUE(verify_packing(inst, r.packing));
      // One call at the upper bound, then bisection from upper down to
      // relative width eps at the optimum.
      const double bound = 2 + std::ceil(std::log2(inst.upper_bound() / (eps * opt)));
      EXPECT_LE(static_cast<double>(r.decision_calls), bound) << "seed " << seed;
    }
  }
}

TEST(FptasCircle, EmptySetArcBound) {
  const ApproxResult r = solve_fptas_circle(circle(10, {}, 4), 0.01);
  const double opt = 10 * std::numbers::pi / 4;
  EXPECT_GE(r.radius, 0.99 * opt);
  EXPECT_LE(r.radius, opt + 1e-9);
  EXPECT_GE(r.radius, 7.775);
}

// Pinned from circle_grid_rmax at resolution 1e-4. By hand: facilities at
// angles +-t with 20 sin(t / 2) = 10 (pi - t), t ~ 1.663.
TEST(FptasCircle, OnePointOnTheCircle) {
  const CircularInstance inst = circle(10, {{10, 0}}, 2);
  const ApproxResult r = solve_fptas_circle(inst, 0.01);
  EXPECT_GE(r.radius, 0.99 * 14.7815256510025);
  EXPECT_LE(r.radius, 14.7818);
  EXPECT_TRUE(verify_packing(inst, r.packing));
}

TEST(FptasCircle, SingleFacilityIsFeasibleAtTheCap) {
  const CircularInstance inst = circle(10, {}, 1);
  const ApproxResult r = solve_fptas_circle(inst, 0.1);
  EXPECT_GE(r.radius, 0.9 * circle_radius_cap(inst));
  EXPECT_EQ(r.decision_calls, 1);
}

TEST(FptasCircle, NotBelowTheGridOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CircularInstance inst = gen_circular_instance(seed, 1 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 3));
    const double eps = 1e-3;
    const ApproxResult r = solve_fptas_circle(inst, eps);
    const double grid = circle_grid_rmax(inst, 1e-3);
    ASSERT_TRUE(r.feasible);
    EXPECT_GE(r.radius, (1 - eps) * grid) << "seed " << seed;
    EXPECT_TRUE(verify_packing(inst, r.packing));
  }
}

}  // namespace
}  // namespace cofl
