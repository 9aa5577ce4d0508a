#pragma once

// (1 - eps)-approximations by bisection over the radius, for the segment and
// for facilities on a circle.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cofl/decision.hpp"
#include "cofl/geometry.hpp"

namespace cofl {

struct ApproxResult {
  double radius = 0.0;
  Packing packing;
  double epsilon = 0.0;
  long decision_calls = 0;
  bool feasible = true;  // false only for a circle with no feasible radius at all
};

namespace detail {

inline void require_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

// Shrinks [lo, hi] (decide(lo) YES, decide(hi) NO) until hi - lo <= eps * lo.
template <class Decide>
void bisect_relative(double& lo, Packing& best, double hi, double eps, long& calls, Decide&& decide) {
  for (int it = 0; it < 4000 && (lo == 0.0 || hi - lo > eps * lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++calls;
    DecisionOutcome d = decide(mid);
    if (d.feasible) {
      lo = mid;
      best = std::move(*d.packing);
    } else {
      hi = mid;
    }
  }
}

}  // namespace detail

inline ApproxResult solve_fptas_segment(const Instance& inst, double eps) {
  validate(inst);
  detail::require_epsilon(eps);
  ApproxResult res;
  res.epsilon = eps;
  const double upper = inst.upper_bound();
  auto decide = [&](double L) { return decide_segment(inst, L); };
  ++res.decision_calls;
  if (DecisionOutcome d = decide(upper); d.feasible) {
    res.radius = upper;
    res.packing = std::move(*d.packing);
    return res;
  }
  double lo = 0.0;
  detail::bisect_relative(lo, res.packing, upper, eps, res.decision_calls, decide);
  if (!(lo > 0.0)) throw std::logic_error("solve_fptas_segment: no feasible radius found");
  res.radius = lo;
  return res;
}

// Upper end for the circle search: beyond it either the arc separation or the
// blocked arcs rule out every placement (k >= 2), or every point blocks the
// whole circle (k = 1 with demand points).
inline double circle_radius_cap(const CircularInstance& inst) {
  double far = 0.0;
  for (const Point& pt : inst.points) far = std::max(far, std::hypot(pt.x - inst.center.x, pt.y - inst.center.y));
  return std::numbers::pi * inst.r_c / inst.k + far + inst.r_c;
}

inline ApproxResult solve_fptas_circle(const CircularInstance& inst, double eps) {
  validate(inst);
  detail::require_epsilon(eps);
  ApproxResult res;
  res.epsilon = eps;
  auto decide = [&](double L) { return decide_circle(inst, L); };
  const double cap = circle_radius_cap(inst);
  ++res.decision_calls;
  if (DecisionOutcome d = decide(cap); d.feasible) {
    res.radius = cap;
    res.packing = std::move(*d.packing);
    return res;
  }
  // Geometric search down from the cap for a first feasible radius.
  double hi = cap;
  double lo = 0.0;
  for (double L = cap / 2.0; L > cap * 1e-15; L /= 2.0) {
    ++res.decision_calls;
    if (DecisionOutcome d = decide(L); d.feasible) {
      lo = L;
      res.packing = std::move(*d.packing);
      break;
    }
    hi = L;
  }
  if (lo == 0.0) {
    res.feasible = false;
    res.radius = 0.0;
    res.packing = {};
    return res;
  }
  detail::bisect_relative(lo, res.packing, hi, eps, res.decision_calls, decide);
  res.radius = lo;
  return res;
}

}  // namespace cofl
