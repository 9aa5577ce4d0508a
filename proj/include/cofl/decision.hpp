#pragma once

// Feasibility oracles: the left-to-right greedy packing on a segment, the
// anchored greedy on a circle, and an independent certificate checker.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "cofl/geometry.hpp"

namespace cofl {

// A common radius and k center positions: x-coordinates on a segment,
// angles in [0, 2*pi) on a circle.
struct Packing {
  double radius = 0.0;
  std::vector<double> centers;
};

struct DecisionOutcome {
  bool feasible = false;
  std::optional<Packing> packing;  // present iff feasible

  explicit operator bool() const { return feasible; }
};

namespace detail {

template <class V>
struct Span {
  V a;
  V b;
};

// Greedy packing over ordered feasible intervals, generic in the value type
// so the parametric solver can replay it with symbolic values. `Field`
// provides lt/le comparisons and advance(v, m) = v + 2 m L.
//
// Each interval receives centers at its usable left end and then every 2L
// while they fit; the next interval's usable left end is pushed to at least
// 2L past the last placed center.
template <class V, class Field>
std::optional<std::vector<V>> greedy_pack(const std::vector<Span<V>>& feasible, int k, Field& field) {
  std::vector<V> centers;
  centers.reserve(static_cast<std::size_t>(k));
  for (const Span<V>& iv : feasible) {
    V start = iv.a;
    if (!centers.empty()) {
      V next = field.advance(centers.back(), 1);
      if (field.lt(start, next)) start = next;
    }
    if (field.lt(iv.b, start)) continue;
    centers.push_back(start);
    if (static_cast<int>(centers.size()) == k) return centers;
    const int remaining = k - static_cast<int>(centers.size());
    if (field.le(field.advance(start, remaining), iv.b)) {
      for (int m = 1; m <= remaining; ++m) centers.push_back(field.advance(start, m));
      return centers;
    }
    for (int m = 1; field.le(field.advance(start, m), iv.b); ++m) centers.push_back(field.advance(start, m));
  }
  return std::nullopt;
}

struct NumericField {
  double L;

  bool lt(double a, double b) const { return a < b - kEps; }
  bool le(double a, double b) const { return a <= b + kEps; }
  double advance(double v, int m) const { return v + 2.0 * m * L; }
};

}  // namespace detail

inline DecisionOutcome decide_segment(const Instance& inst, double L) {
  detail::require_positive_radius(L);
  const IntervalSet set = feasible_intervals(inst, L);
  std::vector<detail::Span<double>> spans;
  spans.reserve(set.feasible.size());
  for (const Interval& iv : set.feasible) spans.push_back({iv.lo, iv.hi});
  detail::NumericField field{L};
  auto centers = detail::greedy_pack(spans, inst.k, field);
  if (!centers) return {};
  // Positions may overshoot an interval end by at most kEps; pull them back
  // onto the segment and into their interval.
  std::size_t span_idx = 0;
  for (double& c : *centers) {
    while (span_idx + 1 < spans.size() && c > spans[span_idx].b + kEps) ++span_idx;
    c = std::clamp(c, inst.p.x, inst.q.x);
    if (span_idx < spans.size()) c = std::min(c, std::max(spans[span_idx].b, spans[span_idx].a));
  }
  return {true, Packing{L, std::move(*centers)}};
}

// ---------------------------------------------------------------------------
// Circle

namespace detail {

// Greedy counter-clockwise placement starting at `anchor`. Free arcs are
// given in increasing start angle.
inline std::optional<std::vector<double>> circle_greedy_from(const std::vector<ArcInterval>& free,
                                                             double anchor, int k, double step,
                                                             double angle_eps) {
  // Unroll the free arcs into [anchor, anchor + 2*pi].
  std::vector<Interval> unrolled;
  unrolled.reserve(free.size() * 2 + 1);
  for (const ArcInterval& arc : free) {
    double s = arc.start;
    while (s < anchor - angle_eps) s += kTwoPi;
    unrolled.push_back({s, s + arc.sweep});
    // An arc containing the anchor also continues on the far side.
    if (s > anchor + angle_eps && s + arc.sweep > anchor + kTwoPi) {
      unrolled.push_back({s - kTwoPi, s - kTwoPi + arc.sweep});
    }
  }
  std::sort(unrolled.begin(), unrolled.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  const double limit = anchor + kTwoPi;

  std::vector<double> centers{anchor};
  double last = anchor;
  std::size_t idx = 0;
  while (static_cast<int>(centers.size()) < k) {
    const double target = last + step;
    bool placed = false;
    for (; idx < unrolled.size(); ++idx) {
      const Interval& iv = unrolled[idx];
      if (iv.hi < target - angle_eps) continue;
      const double pos = std::max(iv.lo, target);
      if (pos > limit - step + angle_eps) return std::nullopt;
      if (pos < anchor) continue;
      centers.push_back(std::min(pos, std::max(iv.hi, iv.lo)));
      last = pos;
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  if (k >= 2 && limit - last < step - angle_eps) return std::nullopt;
  return centers;
}

}  // namespace detail

// Decision on a circle: k facilities on the boundary, pairwise arc
// separation at least 2L, every demand point at distance >= L from every
// facility.
inline DecisionOutcome decide_circle(const CircularInstance& inst, double L) {
  detail::require_positive_radius(L);
  const double step = 2.0 * L / inst.r_c;  // angular separation
  const double angle_eps = kEps / inst.r_c;
  std::vector<ArcInterval> blocked;
  for (const Point& pt : inst.points) {
    if (auto arc = blocked_arc(pt, inst, L)) blocked.push_back(*arc);
  }
  const std::vector<ArcInterval> free = free_arcs(std::move(blocked), angle_eps);
  if (free.empty()) return {};

  auto finish = [&](std::vector<double> centers) {
    for (double& c : centers) c = normalize_angle(c);
    return DecisionOutcome{true, Packing{L, std::move(centers)}};
  };

  if (free.size() == 1 && free.front().full()) {
    if (inst.k >= 2 && inst.k * 2.0 * L > inst.circumference() + kEps) return {};
    std::vector<double> centers;
    for (int i = 0; i < inst.k; ++i) centers.push_back(i * kTwoPi / inst.k);
    return finish(std::move(centers));
  }

  std::vector<double> anchors;
  for (const ArcInterval& arc : free) {
    anchors.push_back(arc.start);
    if (arc.sweep > 0.0) anchors.push_back(arc.start + arc.sweep);
  }
  for (double anchor : anchors) {
    if (auto centers = detail::circle_greedy_from(free, anchor, inst.k, step, angle_eps)) {
      return finish(std::move(*centers));
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Certificates

inline bool verify_packing(const Instance& inst, const Packing& pk) {
  if (static_cast<int>(pk.centers.size()) != inst.k) return false;
  if (!(pk.radius >= 0.0) || !std::isfinite(pk.radius)) return false;
  for (std::size_t i = 0; i < pk.centers.size(); ++i) {
    const double c = pk.centers[i];
    if (!std::isfinite(c) || c < inst.p.x - kEps || c > inst.q.x + kEps) return false;
    if (i > 0 && c - pk.centers[i - 1] < 2.0 * pk.radius - kEps) return false;
    const Point at{c, inst.line_y()};
    for (const Point& pt : inst.points) {
      if (distance(at, pt, inst.metric) < pk.radius - kEps) return false;
    }
  }
  return true;
}

inline bool verify_packing(const CircularInstance& inst, const Packing& pk) {
  if (static_cast<int>(pk.centers.size()) != inst.k) return false;
  if (!(pk.radius >= 0.0) || !std::isfinite(pk.radius)) return false;
  for (double c : pk.centers) {
    if (!std::isfinite(c)) return false;
    const Point at = inst.at(c);
    for (const Point& pt : inst.points) {
      if (distance(at, pt, Metric::kEuclidean) < pk.radius - kEps) return false;
    }
  }
  if (inst.k < 2) return true;
  // Consecutive counter-clockwise gaps, including the wrap, must go around
  // the circle exactly once and each be at least 2r in arc length.
  double total = 0.0;
  const std::size_t n = pk.centers.size();
  for (std::size_t i = 0; i < n; ++i) {
    double gap = normalize_angle(pk.centers[(i + 1) % n] - pk.centers[i]);
    if (gap * inst.r_c < 2.0 * pk.radius - kEps) return false;
    total += gap;
  }
  return std::abs(total - kTwoPi) <= 1e-6;
}

}  // namespace cofl
