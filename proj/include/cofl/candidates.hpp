#pragma once

// Exhaustive candidate radii for the segment problem and the exact solver
// that binary-searches them with the greedy decision.
//
// Every optimal packing is pinned by a chain of compactly packed facilities
// running from a left stop to a right stop, or by a point touching a square's
// top edge (l_inf). Left stops are p itself or the right end of a point's
// blocked interval; right stops are q or the left end of one. A chain of
// t + 1 facilities spans 2tL between its end centers, which gives one scalar
// equation in L per (stops, t) choice. The lists below are a superset of
// those equations' roots; the decision oracle picks the feasible maximum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cofl/decision.hpp"
#include "cofl/geometry.hpp"
#include "cofl/polynomial.hpp"

namespace cofl {

enum class CaseTag : std::uint8_t {
  kCase0,           // ||pq|| / (2(k-1)), no point involved
  kLinfCase1,       // point on the right edge of square j, chain from p
  kLinfCase2i,      // point on a top edge
  kLinfCase2ii,     // point on a top edge, no right-edge partner
  kLinfCase3i,      // point on the left edge of the first square of a chain to q
  kLinfCase3iia,    // left edge of s_1 to right edge of s_1
  kLinfCase3iib,    // left edge of s_1 to right edge of s_j'
  kLinfCase3iic,    // left edge and top edge
  kLinfCase4,       // two points on adjacent sides of one square
  kL2Case1,
  kL2Case2Left,
  kL2Case2Right,
  kL2Case3PP,
  kL2Case3PM,
  kL2Case3MP,
  kL2Case3MM,
  kL2Tangent,       // L equal to a point's height: its blocked interval is a single point
};

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::kCase0: return "case0";
    case CaseTag::kLinfCase1: return "linf-case1";
    case CaseTag::kLinfCase2i: return "linf-case2i";
    case CaseTag::kLinfCase2ii: return "linf-case2ii";
    case CaseTag::kLinfCase3i: return "linf-case3i";
    case CaseTag::kLinfCase3iia: return "linf-case3iia";
    case CaseTag::kLinfCase3iib: return "linf-case3iib";
    case CaseTag::kLinfCase3iic: return "linf-case3iic";
    case CaseTag::kLinfCase4: return "linf-case4";
    case CaseTag::kL2Case1: return "l2-case1";
    case CaseTag::kL2Case2Left: return "l2-case2-left";
    case CaseTag::kL2Case2Right: return "l2-case2-right";
    case CaseTag::kL2Case3PP: return "l2-case3-pp";
    case CaseTag::kL2Case3PM: return "l2-case3-pm";
    case CaseTag::kL2Case3MP: return "l2-case3-mp";
    case CaseTag::kL2Case3MM: return "l2-case3-mm";
    case CaseTag::kL2Tangent: return "l2-tangent";
  }
  return "?";
}

struct Candidate {
  double value = 0.0;
  CaseTag tag = CaseTag::kCase0;
  std::optional<int> i;   // point index
  std::optional<int> i2;  // second point index
  std::optional<int> j;   // facility index (1-based)
  std::optional<int> j2;  // second facility index (1-based)
};

struct SolverStats {
  long decision_calls = 0;
  long candidates = 0;
  long comparisons = 0;
  long rounds = 0;
};

struct OptimalResult {
  double r_max = 0.0;
  Packing packing;
  std::optional<Candidate> witness;
  SolverStats stats;
};

namespace detail {

class CandidateSink {
 public:
  explicit CandidateSink(double upper) : upper_(upper) {}

  void add(double v, CaseTag tag, std::optional<int> i = {}, std::optional<int> i2 = {},
           std::optional<int> j = {}, std::optional<int> j2 = {}) {
    if (!(v > 0.0) || !std::isfinite(v)) return;
    if (v > upper_ * (1.0 + 1e-12)) return;
    out_.push_back({std::min(v, upper_), tag, i, i2, j, j2});
  }

  // Sorted ascending, values closer than 1e-12 collapsed (first tag kept).
  std::vector<Candidate> finish() && {
    std::stable_sort(out_.begin(), out_.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    std::vector<Candidate> uniq;
    for (const Candidate& c : out_) {
      if (uniq.empty() || c.value - uniq.back().value > 1e-12) uniq.push_back(c);
    }
    return uniq;
  }

 private:
  double upper_;
  std::vector<Candidate> out_;
};

// Roots r in [lo, hi] of `g0 + g1 r = sum_m w_m sqrt(r^2 - a_m)` for one or
// two radicals, found by squaring into a polynomial and kept only if the
// signed original holds to 1e-7 relative.
inline std::vector<double> radical_equation_roots(double g0, double g1, std::span<const double> w,
                                                  std::span<const double> a, double lo, double hi) {
  double amax = 0.0;
  for (double x : a) amax = std::max(amax, x);
  lo = std::max(lo, std::sqrt(amax));
  if (!(lo <= hi)) return {};
  // g(r)^2 = g0^2 + 2 g0 g1 r + g1^2 r^2.
  std::array<double, 5> c{};
  if (w.size() == 1) {
    // g^2 = w^2 (r^2 - a)
    c[0] = g0 * g0 + w[0] * w[0] * a[0];
    c[1] = 2.0 * g0 * g1;
    c[2] = g1 * g1 - w[0] * w[0];
  } else {
    // g^2 - w1^2 (r^2 - a1) - w2^2 (r^2 - a2) = 2 w1 w2 s1 s2 ; square again.
    const double h0 = g0 * g0 + w[0] * w[0] * a[0] + w[1] * w[1] * a[1];
    const double h1 = 2.0 * g0 * g1;
    const double h2 = g1 * g1 - w[0] * w[0] - w[1] * w[1];
    const double k4 = 4.0 * w[0] * w[0] * w[1] * w[1];
    c[0] = h0 * h0 - k4 * a[0] * a[1];
    c[1] = 2.0 * h0 * h1;
    c[2] = h1 * h1 + 2.0 * h0 * h2 + k4 * (a[0] + a[1]);
    c[3] = 2.0 * h1 * h2;
    c[4] = h2 * h2 - k4;
  }
  std::vector<double> roots;
  for (double r : poly::real_roots(c, lo, hi)) {
    double rhs = 0.0;
    double scale = std::abs(g0) + std::abs(g1 * r);
    for (std::size_t m = 0; m < w.size(); ++m) {
      const double s = std::sqrt(std::max(0.0, r * r - a[m]));
      rhs += w[m] * s;
      scale += std::abs(w[m]) * s;
    }
    if (std::abs(g0 + g1 * r - rhs) <= 1e-7 * (1.0 + scale)) roots.push_back(r);
  }
  return roots;
}

}  // namespace detail

// Candidate square sizes for the rectilinear metric.
inline std::vector<Candidate> candidates_linf(const Instance& inst) {
  const int n = static_cast<int>(inst.points.size());
  const int k = inst.k;
  const double len = inst.length();
  detail::CandidateSink sink(inst.upper_bound());
  sink.add(inst.upper_bound(), CaseTag::kCase0);
  for (int i = 0; i < n; ++i) {
    const Point& pi = inst.points[i];
    const double u = pi.x - inst.p.x;
    const double dy = pi.y - inst.line_y();
    sink.add(dy, CaseTag::kLinfCase2i, i);
    for (int j = 1; j <= k; ++j) {
      // Chain of j squares from p whose last right edge touches p_i.
      sink.add(u / (2 * j - 1), CaseTag::kLinfCase1, i, {}, j);
      // Chain of j squares from p_i (on the first left edge) to q.
      sink.add((len - u) / (2 * j - 1), CaseTag::kLinfCase3i, i, {}, k - j + 1);
    }
    for (int i2 = i + 1; i2 < n; ++i2) {
      const Point& pj = inst.points[i2];
      const double dx = pj.x - pi.x;
      sink.add(dx / 2.0, CaseTag::kLinfCase3iia, i, i2, 1, 1);
      sink.add(pj.y - inst.line_y(), CaseTag::kLinfCase3iic, i, i2, 1, 1);
      sink.add(std::abs(dx), CaseTag::kLinfCase4, i, i2);
      for (int j2 = 1; j2 <= k; ++j2) {
        // Left edge of s_1 at p_i, right edge of s_j2 at p_i2: 2 j2 L = dx.
        sink.add(dx / (2 * j2), CaseTag::kLinfCase3iib, i, i2, 1, j2);
        sink.add(dx / (2 * j2 - 1), CaseTag::kLinfCase3iib, i, i2, 1, j2);
      }
    }
  }
  return std::move(sink).finish();
}

// Candidate disk radii for the Euclidean metric.
inline std::vector<Candidate> candidates_l2(const Instance& inst) {
  const int n = static_cast<int>(inst.points.size());
  const int k = inst.k;
  const double len = inst.length();
  const double upper = inst.upper_bound();
  detail::CandidateSink sink(upper);
  sink.add(upper, CaseTag::kL2Case1);
  std::vector<double> dy2(n);
  for (int i = 0; i < n; ++i) {
    const double dy = inst.points[i].y - inst.line_y();
    dy2[i] = dy * dy;
    sink.add(dy, CaseTag::kL2Tangent, i);
  }
  for (int i = 0; i < n; ++i) {
    const double u = inst.points[i].x - inst.p.x;
    const std::array<double, 1> w{1.0};
    const std::array<double, 1> a{dy2[i]};
    for (int t = 0; t < k; ++t) {
      // 2 t r = u - sqrt(r^2 - dy^2): j = t + 1 disks from p, p_i on the right arc of d_j.
      for (double r : detail::radical_equation_roots(u, -2.0 * t, w, a, 0.0, upper))
        sink.add(r, CaseTag::kL2Case2Left, i, {}, t + 1);
      // 2 t r = (len - u) - sqrt(r^2 - dy^2): mirror, chain from p_i to q.
      for (double r : detail::radical_equation_roots(len - u, -2.0 * t, w, a, 0.0, upper))
        sink.add(r, CaseTag::kL2Case2Right, i, {}, k - t);
    }
  }
  constexpr std::array<std::array<double, 2>, 4> kSigns{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  constexpr std::array<CaseTag, 4> kTags{CaseTag::kL2Case3PP, CaseTag::kL2Case3PM, CaseTag::kL2Case3MP,
                                         CaseTag::kL2Case3MM};
  for (int i = 0; i < n; ++i) {
    for (int i2 = i + 1; i2 < n; ++i2) {
      const double dx = inst.points[i2].x - inst.points[i].x;
      const std::array<double, 2> a{dy2[i], dy2[i2]};
      for (int t = 0; t < k; ++t) {
        // |dx - 2 t r| <= 2r on (0, upper]; skip chains that cannot close.
        if (dx > 2.0 * (t + 1) * upper * (1.0 + 1e-12)) continue;
        for (std::size_t s = 0; s < kSigns.size(); ++s) {
          // dx - 2 t r = +-sqrt(r^2 - dy_i^2) +- sqrt(r^2 - dy_i2^2)
          const std::array<double, 2> w{kSigns[s][0], kSigns[s][1]};
          for (double r : detail::radical_equation_roots(dx, -2.0 * t, w, a, 0.0, upper))
            sink.add(r, kTags[s], i, i2, 1, t + 1);
        }
      }
    }
  }
  return std::move(sink).finish();
}

inline std::vector<Candidate> candidates(const Instance& inst) {
  return inst.metric == Metric::kEuclidean ? candidates_l2(inst) : candidates_linf(inst);
}

// Largest candidate accepted by the decision, found by binary search.
inline OptimalResult solve_exact(const Instance& inst) {
  validate(inst);
  const std::vector<Candidate> cands = candidates(inst);
  OptimalResult res;
  res.stats.candidates = static_cast<long>(cands.size());
  // Invariant: cands[< lo] accepted, cands[>= hi] rejected.
  std::size_t lo = 0;
  std::size_t hi = cands.size();
  std::optional<Packing> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++res.stats.decision_calls;
    DecisionOutcome d = decide_segment(inst, cands[mid].value);
    if (d.feasible) {
      best = std::move(d.packing);
      res.witness = cands[mid];
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) throw std::logic_error("solve_exact: no candidate radius is feasible");
  if (!best || res.witness->value != cands[lo - 1].value) {
    ++res.stats.decision_calls;
    DecisionOutcome d = decide_segment(inst, cands[lo - 1].value);
    best = std::move(d.packing);
    res.witness = cands[lo - 1];
  }
  res.r_max = res.witness->value;
  res.packing = std::move(*best);
  return res;
}

}  // namespace cofl
