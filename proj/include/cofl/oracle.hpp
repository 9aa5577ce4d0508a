#pragma once

// Ground truth for tests: a brute-force optimum on small instances and a
// deterministic instance generator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cofl/candidates.hpp"
#include "cofl/decision.hpp"
#include "cofl/geometry.hpp"

namespace cofl {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants and integer-only
// state updates make the stream identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t seed = 1;
  int n = 0;
  int k = 2;
  double segment_length = 10.0;
  double height_max = 5.0;
  Metric metric = Metric::kEuclidean;
};

// Points uniform in [0, segment_length] x [0, height_max] over the segment
// from (0, 0) to (segment_length, 0), sorted by x.
inline Instance gen_instance(const GenParams& gp) {
  if (gp.n < 0 || gp.k < 2 || !(gp.segment_length > 0.0) || !(gp.height_max >= 0.0))
    throw std::invalid_argument("gen_instance: invalid parameters");
  SplitMix64 rng(gp.seed);
  Instance inst;
  inst.p = {0.0, 0.0};
  inst.q = {gp.segment_length, 0.0};
  inst.k = gp.k;
  inst.metric = gp.metric;
  for (int i = 0; i < gp.n; ++i) {
    const double x = rng.uniform() * gp.segment_length;
    const double y = rng.uniform() * gp.height_max;
    inst.points.push_back({x, y});
  }
  sort_points(inst.points);
  return inst;
}

// Circle of radius r_c at the origin; points uniform in the square
// [-spread r_c, spread r_c]^2.
inline CircularInstance gen_circular_instance(std::uint64_t seed, int n, int k, double r_c = 10.0,
                                              double spread = 1.5) {
  if (n < 0 || k < 1 || !(r_c > 0.0) || !(spread > 0.0))
    throw std::invalid_argument("gen_circular_instance: invalid parameters");
  SplitMix64 rng(seed);
  CircularInstance inst;
  inst.center = {0.0, 0.0};
  inst.r_c = r_c;
  inst.k = k;
  for (int i = 0; i < n; ++i) {
    const double x = (2.0 * rng.uniform() - 1.0) * spread * r_c;
    const double y = (2.0 * rng.uniform() - 1.0) * spread * r_c;
    inst.points.push_back({x, y});
  }
  return inst;
}

// Largest r such that some placement c_1 <= ... <= c_k has gaps >= 2r and
// clearance >= r, searched over a grid of center positions (k <= 3): a
// uniform grid of `coarse` steps, then a finer grid around the best cell.
// Independent of the decision code. Any grid placement is a valid packing,
// so the result never exceeds the optimum; the coarse level alone is within
// half a coarse step of it.
inline double grid_rmax(const Instance& inst, int coarse = 240, int fine = 40) {
  if (inst.k < 2 || inst.k > 3) throw std::invalid_argument("grid_rmax supports k in {2, 3}");
  const double x0 = inst.p.x;
  const double len = inst.length();
  auto clearance = [&](double c) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& pt : inst.points) best = std::min(best, distance({c, inst.line_y()}, pt, inst.metric));
    return best;
  };
  auto value = [&](const std::vector<double>& cs, const std::vector<double>& clr) {
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      r = std::min(r, clr[i]);
      if (i > 0) r = std::min(r, (cs[i] - cs[i - 1]) / 2.0);
    }
    return r;
  };

  const double h = len / coarse;
  std::vector<double> grid(coarse + 1), clr(coarse + 1);
  for (int g = 0; g <= coarse; ++g) {
    grid[g] = (g == coarse) ? inst.q.x : x0 + g * h;
    clr[g] = clearance(grid[g]);
  }
  double best = -1.0;
  std::vector<int> arg;
  if (inst.k == 2) {
    for (int a = 0; a <= coarse; ++a)
      for (int b = a + 1; b <= coarse; ++b) {
        const double v = value({grid[a], grid[b]}, {clr[a], clr[b]});
        if (v > best) best = v, arg = {a, b};
      }
  } else {
    for (int a = 0; a <= coarse; ++a)
      for (int b = a + 1; b <= coarse; ++b) {
        const double ab = std::min({clr[a], clr[b], (grid[b] - grid[a]) / 2.0});
        if (ab <= best) continue;
        for (int c = b + 1; c <= coarse; ++c) {
          const double v = std::min({ab, clr[c], (grid[c] - grid[b]) / 2.0});
          if (v > best) best = v, arg = {a, b, c};
        }
      }
  }
  // Refinement: each center moves within one coarse step of its best cell.
  const double hf = 2.0 * h / fine;
  auto local = [&](int idx, int s) { return std::clamp(grid[idx] - h + s * hf, x0, inst.q.x); };
  if (inst.k == 2) {
    for (int s0 = 0; s0 <= fine; ++s0) {
      const double c0 = local(arg[0], s0), r0 = clearance(c0);
      for (int s1 = 0; s1 <= fine; ++s1) {
        const double c1 = local(arg[1], s1);
        if (c1 < c0) continue;
        best = std::max(best, value({c0, c1}, {r0, clearance(c1)}));
      }
    }
  } else {
    for (int s0 = 0; s0 <= fine; ++s0) {
      const double c0 = local(arg[0], s0), r0 = clearance(c0);
      for (int s1 = 0; s1 <= fine; ++s1) {
        const double c1 = local(arg[1], s1);
        if (c1 < c0) continue;
        const double r01 = std::min({r0, clearance(c1), (c1 - c0) / 2.0});
        if (r01 <= best) continue;
        for (int s2 = 0; s2 <= fine; ++s2) {
          const double c2 = local(arg[2], s2);
          if (c2 < c1) continue;
          best = std::max(best, std::min({r01, clearance(c2), (c2 - c1) / 2.0}));
        }
      }
    }
  }
  return best;
}

struct OracleReport {
  double rmax = 0.0;            // max of the two independent estimates below
  double best_candidate = 0.0;  // largest closed-form candidate accepted by the decision
  double sweep = 0.0;           // largest accepted radius on a grid of resolution upper / 1e6
  std::optional<double> grid;   // placement grid search (n <= 4, k <= 3)
};

// Brute-force optimum for small instances (n <= 10, k <= 5). Throws
// std::logic_error if the placement grid search contradicts the result.
inline OracleReport oracle_report(const Instance& inst) {
  validate(inst);
  const int n = static_cast<int>(inst.points.size());
  if (n > 10 || inst.k > 5) throw std::invalid_argument("oracle_rmax: instance too large (n <= 10, k <= 5)");
  OracleReport rep;
  // Every candidate, no binary search.
  for (const Candidate& c : candidates(inst)) {
    if (c.value > rep.best_candidate && decide_segment(inst, c.value).feasible) rep.best_candidate = c.value;
  }
  // Top-down sweep: 1000 coarse steps, then 1000 fine steps inside the cell
  // above the first accepted coarse radius.
  const double upper = inst.upper_bound();
  constexpr int kSteps = 1000;
  const double coarse = upper / kSteps;
  int g = kSteps;
  while (g > 0 && !decide_segment(inst, g * coarse).feasible) --g;
  double base = g * coarse;
  const double fine = coarse / kSteps;
  rep.sweep = base;
  if (g < kSteps) {
    for (int f = kSteps - 1; f >= 1; --f) {
      const double L = base + f * fine;
      if (decide_segment(inst, L).feasible) {
        rep.sweep = L;
        break;
      }
    }
  }
  rep.rmax = std::max(rep.best_candidate, rep.sweep);
  if (n <= 4 && inst.k <= 3) {
    const int grid_steps = 240;
    rep.grid = grid_rmax(inst, grid_steps);
    const double half_step = inst.length() / grid_steps / 2.0;
    if (*rep.grid > rep.rmax + 1e-6 || *rep.grid < rep.rmax - half_step - 1e-6)
      throw std::logic_error("oracle_rmax: placement grid search disagrees with the radius sweep");
  }
  return rep;
}

inline double oracle_rmax(const Instance& inst) { return oracle_report(inst).rmax; }

// Optimum for a circular instance restricted to facility angles on a grid of
// `resolution` radians: placements are exact on the grid, so the value is a
// lower bound on the true optimum. Bisection on L to relative 1e-9 with a
// grid-based anchored greedy per L.
inline double circle_grid_rmax(const CircularInstance& inst, double resolution = 1e-4) {
  const int G = static_cast<int>(std::ceil(kTwoPi / resolution));
  const double h = kTwoPi / G;
  std::vector<double> clr(G, std::numeric_limits<double>::infinity());
  for (int g = 0; g < G; ++g) {
    const Point at = inst.at(g * h);
    for (const Point& pt : inst.points) clr[g] = std::min(clr[g], distance(at, pt, Metric::kEuclidean));
  }
  std::vector<int> next_free(2 * G + 1);
  auto feasible = [&](double L) {
    const int step = static_cast<int>(std::ceil(2.0 * L / inst.r_c / h - 1e-12));
    if (inst.k >= 2 && static_cast<long>(step) * inst.k > G) return false;
    // next_free[i]: first free index >= i on the doubled ring, 2G if none.
    next_free[2 * G] = 2 * G;
    for (int i = 2 * G - 1; i >= 0; --i) next_free[i] = (clr[i % G] >= L) ? i : next_free[i + 1];
    bool all_free = true;
    for (int i = 0; i < G && all_free; ++i) all_free = clr[i] >= L;
    for (int a = 0; a < G; ++a) {
      if (clr[a] < L) continue;
      // Rotating an optimal placement clockwise until a facility meets a
      // blocked cell puts it at the start of a free run, so only those anchors
      // matter (a single anchor if nothing is blocked).
      if (all_free ? a != 0 : clr[(a + G - 1) % G] >= L) continue;
      int pos = a;
      int placed = 1;
      while (placed < inst.k) {
        const int target = pos + step;
        if (target >= a + G) break;
        pos = next_free[target];
        if (pos >= a + G) break;
        ++placed;
      }
      if (placed == inst.k && (inst.k == 1 || a + G - pos >= step)) return true;
    }
    return false;
  };
  double lo = 0.0;
  double hi = std::numbers::pi * inst.r_c / inst.k + inst.r_c;
  for (const Point& pt : inst.points) hi += std::hypot(pt.x - inst.center.x, pt.y - inst.center.y);
  if (feasible(hi)) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-9 * std::max(1.0, lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace cofl
