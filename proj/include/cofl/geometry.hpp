#pragma once

// Exact low-level geometry for facility packing on a segment or a circle:
// per-point blocked intervals, interval merging and complementation, and the
// circular-arc analogues.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cofl {

// Absolute tolerance for every geometric comparison in the library
// (coordinates, radii, arc lengths).
inline constexpr double kEps = 1e-9;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// EUCLIDEAN packs disks, RECTILINEAR packs axis-aligned squares whose size is
// half the side length.
enum class Metric { kEuclidean, kRectilinear };

inline const char* to_string(Metric m) {
  return m == Metric::kEuclidean ? "l2" : "linf";
}

inline double distance(const Point& a, const Point& b, Metric m) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  if (m == Metric::kRectilinear) return std::max(std::abs(dx), std::abs(dy));
  return std::hypot(dx, dy);
}

// A horizontal segment pq, demand points above the line through it, and the
// number of facilities to center on pq.
struct Instance {
  Point p;
  Point q;
  std::vector<Point> points;  // sorted by x, ties by y
  int k = 2;
  Metric metric = Metric::kEuclidean;

  double length() const { return q.x - p.x; }
  double line_y() const { return q.y; }
  // Closed-form upper bound ||pq|| / (2(k-1)) on the optimal radius.
  double upper_bound() const { return length() / (2.0 * (k - 1)); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

inline bool point_order(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline void sort_points(std::vector<Point>& pts) {
  std::stable_sort(pts.begin(), pts.end(), point_order);
}

// Throws std::invalid_argument if the instance breaks an invariant.
inline void validate(const Instance& inst) {
  auto finite = [](const Point& pt) { return std::isfinite(pt.x) && std::isfinite(pt.y); };
  if (!finite(inst.p) || !finite(inst.q)) throw std::invalid_argument("segment endpoints must be finite");
  if (inst.p.y != inst.q.y) throw std::invalid_argument("segment must be horizontal (y(p) == y(q))");
  if (!(inst.p.x < inst.q.x)) throw std::invalid_argument("segment must satisfy x(p) < x(q)");
  if (inst.k < 2) throw std::invalid_argument("segment instances need k >= 2");
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const Point& pt = inst.points[i];
    if (!finite(pt)) throw std::invalid_argument("demand point " + std::to_string(i) + " is not finite");
    if (pt.y < inst.p.y) throw std::invalid_argument("demand point " + std::to_string(i) + " lies below the segment line");
    if (i > 0 && point_order(pt, inst.points[i - 1]))
      throw std::invalid_argument("demand points must be sorted by x");
  }
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalSet {
  std::vector<Interval> blocked;   // merged, disjoint, ordered, clipped to [x(p), x(q)]
  std::vector<Interval> feasible;  // closed complement inside [x(p), x(q)]
};

namespace detail {

inline void require_positive_radius(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::domain_error("radius must be a positive finite number");
}

}  // namespace detail

// Center positions on the segment line whose facility of size L would hold
// `pt` in its open interior. Absent when the point is out of reach.
inline std::optional<Interval> blocked_interval(const Point& pt, const Instance& inst, double L) {
  detail::require_positive_radius(L);
  const double dy = pt.y - inst.line_y();
  if (inst.metric == Metric::kRectilinear) {
    if (dy >= L) return std::nullopt;
    return Interval{pt.x - L, pt.x + L};
  }
  if (dy > L) return std::nullopt;
  const double s = std::sqrt(std::max(0.0, (L - dy) * (L + dy)));
  return Interval{pt.x - s, pt.x + s};
}

// Merges intervals that overlap by more than kEps. Touching intervals stay
// separate so the shared endpoint remains available as a feasible position.
inline std::vector<Interval> merge_intervals(std::vector<Interval> ivs) {
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const Interval& iv : ivs) {
    if (!out.empty() && iv.lo < out.back().hi - kEps) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

// Closed complement of sorted, merged blocked intervals inside [lo, hi].
// Blocked intervals are taken unclipped so that an interval merely touching
// an end leaves that end feasible.
inline std::vector<Interval> complement_within(const std::vector<Interval>& merged, double lo, double hi) {
  std::vector<Interval> out;
  double cur = lo;
  for (const Interval& iv : merged) {
    if (iv.hi < cur - kEps) continue;
    if (iv.lo > hi + kEps) break;
    if (iv.lo >= cur - kEps) out.push_back({cur, std::max(cur, std::min(iv.lo, hi))});
    cur = std::max(cur, iv.hi);
    if (cur > hi + kEps) return out;
  }
  out.push_back({std::min(cur, hi), hi});
  return out;
}

inline IntervalSet feasible_intervals(const Instance& inst, double L) {
  detail::require_positive_radius(L);
  std::vector<Interval> raw;
  raw.reserve(inst.points.size());
  for (const Point& pt : inst.points) {
    if (auto iv = blocked_interval(pt, inst, L)) raw.push_back(*iv);
  }
  const double lo = inst.p.x;
  const double hi = inst.q.x;
  IntervalSet set;
  const std::vector<Interval> merged = merge_intervals(std::move(raw));
  set.feasible = complement_within(merged, lo, hi);
  for (const Interval& iv : merged) {
    if (iv.hi < lo || iv.lo > hi) continue;
    set.blocked.push_back({std::max(iv.lo, lo), std::min(iv.hi, hi)});
  }
  return set;
}

// ---------------------------------------------------------------------------
// Circle

struct CircularInstance {
  Point center;
  double r_c = 1.0;
  std::vector<Point> points;
  int k = 1;

  double circumference() const { return kTwoPi * r_c; }
  Point at(double angle) const {
    return {center.x + r_c * std::cos(angle), center.y + r_c * std::sin(angle)};
  }

  friend bool operator==(const CircularInstance&, const CircularInstance&) = default;
};

inline void validate(const CircularInstance& inst) {
  if (!std::isfinite(inst.center.x) || !std::isfinite(inst.center.y))
    throw std::invalid_argument("circle center must be finite");
  if (!(inst.r_c > 0.0) || !std::isfinite(inst.r_c)) throw std::invalid_argument("circle radius must be positive");
  if (inst.k < 1) throw std::invalid_argument("circular instances need k >= 1");
  for (const Point& pt : inst.points) {
    if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) throw std::invalid_argument("demand points must be finite");
  }
}

inline double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

// Counter-clockwise arc of boundary positions. `sweep` is the arc measure in
// radians; a sweep of 2*pi is the whole circle. Wrap-around arcs have
// end() < start.
struct ArcInterval {
  double start = 0.0;
  double sweep = 0.0;

  double end() const { return normalize_angle(start + sweep); }
  bool full() const { return sweep >= kTwoPi; }
  bool contains(double angle) const {
    if (full()) return true;
    return normalize_angle(angle - start) <= sweep;
  }
};

// Boundary positions whose facility of radius L would hold `pt` strictly
// inside. Points inside C1 (radius r_c - L) or outside C2 (radius r_c + L)
// block nothing; a point with rho + r_c < L blocks the whole circle.
inline std::optional<ArcInterval> blocked_arc(const Point& pt, const CircularInstance& inst, double L) {
  detail::require_positive_radius(L);
  const double rho = std::hypot(pt.x - inst.center.x, pt.y - inst.center.y);
  const double r = inst.r_c;
  if (rho == 0.0) {
    if (r < L) return ArcInterval{0.0, kTwoPi};
    return std::nullopt;
  }
  if (rho <= r - L || rho >= r + L) return std::nullopt;
  const double cos_half = (r * r + rho * rho - L * L) / (2.0 * r * rho);
  if (cos_half <= -1.0) return ArcInterval{0.0, kTwoPi};
  const double half = std::acos(std::min(1.0, cos_half));
  const double mid = std::atan2(pt.y - inst.center.y, pt.x - inst.center.x);
  return ArcInterval{normalize_angle(mid - half), 2.0 * half};
}

// Length of the minor arc of a circle of radius r_c subtending chord d.
inline double arc_length(double d, double r_c) {
  if (!(r_c > 0.0)) throw std::domain_error("circle radius must be positive");
  if (d < 0.0 || d > 2.0 * r_c) throw std::domain_error("chord length must lie in [0, 2 r_c]");
  const double c = std::clamp(1.0 - d * d / (2.0 * r_c * r_c), -1.0, 1.0);
  return r_c * std::acos(c);
}

// Free (closed) arcs left after removing the union of open blocked arcs.
// Returns an empty list when the circle is completely blocked and a single
// full arc when nothing is blocked. `angle_eps` is the merge tolerance.
inline std::vector<ArcInterval> free_arcs(std::vector<ArcInterval> blocked, double angle_eps) {
  if (blocked.empty()) return {ArcInterval{0.0, kTwoPi}};
  for (const ArcInterval& a : blocked) {
    if (a.full()) return {};
  }
  std::sort(blocked.begin(), blocked.end(),
            [](const ArcInterval& a, const ArcInterval& b) { return a.start < b.start; });
  // Unrolled [s, e] with e possibly past 2*pi.
  std::vector<Interval> merged;
  for (const ArcInterval& a : blocked) {
    const Interval iv{a.start, a.start + a.sweep};
    if (!merged.empty() && iv.lo < merged.back().hi - angle_eps) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  // The last arc may wrap over the first ones.
  while (merged.size() > 1 && merged.front().lo + kTwoPi < merged.back().hi - angle_eps) {
    merged.back().hi = std::max(merged.back().hi, merged.front().hi + kTwoPi);
    merged.erase(merged.begin());
  }
  std::vector<ArcInterval> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const double from = merged[i].hi;
    const double to = (i + 1 < merged.size()) ? merged[i + 1].lo : merged.front().lo + kTwoPi;
    const double gap = to - from;
    if (gap < -angle_eps) continue;
    out.push_back({normalize_angle(from), std::max(0.0, gap)});
  }
  std::sort(out.begin(), out.end(), [](const ArcInterval& a, const ArcInterval& b) { return a.start < b.start; });
  return out;
}

}  // namespace cofl
