#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "cofl/geometry.hpp"

namespace cofl::test {

inline Instance segment(double x1, std::vector<Point> pts, int k, Metric m = Metric::kEuclidean) {
  Instance inst;
  inst.p = {0.0, 0.0};
  inst.q = {x1, 0.0};
  inst.k = k;
  inst.metric = m;
  inst.points = std::move(pts);
  sort_points(inst.points);
  return inst;
}

inline CircularInstance circle(double r_c, std::vector<Point> pts, int k) {
  CircularInstance inst;
  inst.r_c = r_c;
  inst.k = k;
  inst.points = std::move(pts);
  return inst;
}

// Decision over center positions restricted to a uniform grid with step h
// (endpoints included), by exhaustive greedy over grid cells. Shares no code
// with the interval-based decision.
inline bool grid_decide(const Instance& inst, double L, double h) {
  const int cells = static_cast<int>(std::ceil(inst.length() / h));
  double last = -1e300;
  int placed = 0;
  for (int g = 0; g <= cells && placed < inst.k; ++g) {
    const double x = std::min(inst.p.x + g * h, inst.q.x);
    if (x - last < 2.0 * L) continue;
    bool clear = true;
    for (const Point& pt : inst.points) clear = clear && distance({x, inst.line_y()}, pt, inst.metric) >= L;
    if (!clear) continue;
    last = x;
    ++placed;
  }
  return placed == inst.k;
}

}  // namespace cofl::test
