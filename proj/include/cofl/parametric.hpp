#pragma once

// Parametric search for the Euclidean segment problem. The greedy decision is
// replayed at the unknown optimum L*: every comparison whose outcome depends
// on L is turned into an equation in L, its roots inside the current bracket
// are fed to the numeric decision, and the bracket shrinks until the
// comparison has a constant sign on it.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cofl/candidates.hpp"
#include "cofl/decision.hpp"
#include "cofl/geometry.hpp"
#include "cofl/polynomial.hpp"

namespace cofl {

// A L^2 + B L + C + 2 sqrt((L^2 - D)(L^2 - E)), the once-squared form of a
// comparison between two interval endpoints that each carry one radical.
struct ComparisonPoly {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;

  double operator()(double L) const {
    const double rad = std::sqrt(std::max(0.0, (L * L - D) * (L * L - E)));
    return A * L * L + B * L + C + 2.0 * rad;
  }
};

// Bracket known to contain the optimum.
struct SearchInterval {
  double lo = 0.0;
  double hi = 0.0;
};

namespace detail {

// Roots of the squared-out quartic of `cp` inside the bracket, restricted to
// L^2 >= max(D, E). Not yet checked against the unsquared form.
inline std::vector<double> comparison_quartic_roots(const ComparisonPoly& cp, SearchInterval bracket) {
  const double lo = std::max(bracket.lo, std::sqrt(std::max({0.0, cp.D, cp.E})));
  if (!(lo <= bracket.hi)) return {};
  // (A L^2 + B L + C)^2 = 4 (L^2 - D)(L^2 - E)
  const std::array<double, 5> c{
      cp.C * cp.C - 4.0 * cp.D * cp.E,
      2.0 * cp.B * cp.C,
      cp.B * cp.B + 2.0 * cp.A * cp.C + 4.0 * (cp.D + cp.E),
      2.0 * cp.A * cp.B,
      cp.A * cp.A - 4.0,
  };
  return poly::real_roots(c, lo, bracket.hi);
}

}  // namespace detail

// Real roots of the comparison polynomial inside the bracket, ascending.
// Squaring introduces spurious roots; only those satisfying the original
// expression to 1e-7 (1 + |C|) are returned.
inline std::vector<double> comparison_roots(const ComparisonPoly& cp, SearchInterval bracket) {
  std::vector<double> out;
  for (double r : detail::comparison_quartic_roots(cp, bracket)) {
    if (std::abs(cp(r)) <= 1e-7 * (1.0 + std::abs(cp.C))) out.push_back(r);
  }
  return out;
}

namespace detail {

// c0 + c1 L + w sqrt(L^2 - a): an interval endpoint, or a center obtained by
// stepping 2L at a time from one.
struct Expr {
  double c0 = 0.0;
  double c1 = 0.0;
  double w = 0.0;
  double a = 0.0;

  static Expr constant(double v) { return {v, 0.0, 0.0, 0.0}; }
  static Expr radius() { return {0.0, 1.0, 0.0, 0.0}; }
  // x -+ sqrt(L^2 - dy^2): the ends of a point's blocked interval.
  static Expr endpoint(double x, double dy, double sign) { return {x, 0.0, sign, dy * dy}; }
};

// f(L) = c0 + c1 L + sum_m w_m sqrt(L^2 - a_m), at most two radicals.
struct RadicalForm {
  double c0 = 0.0;
  double c1 = 0.0;
  int terms = 0;
  std::array<double, 2> w{};
  std::array<double, 2> a{};

  void add_radical(double weight, double arg) {
    if (weight == 0.0) return;
    for (int m = 0; m < terms; ++m) {
      if (a[m] == arg) {
        w[m] += weight;
        if (w[m] == 0.0) {
          // Drop the cancelled term.
          for (int r = m; r + 1 < terms; ++r) {
            w[r] = w[r + 1];
            a[r] = a[r + 1];
          }
          --terms;
        }
        return;
      }
    }
    w[terms] = weight;
    a[terms] = arg;
    ++terms;
  }

  double operator()(double L) const {
    double v = c0 + c1 * L;
    for (int m = 0; m < terms; ++m) v += w[m] * std::sqrt(std::max(0.0, L * L - a[m]));
    return v;
  }

  double scale(double L) const {
    double s = std::abs(c0) + std::abs(c1 * L);
    for (int m = 0; m < terms; ++m) s += std::abs(w[m]) * std::sqrt(std::max(0.0, L * L - a[m]));
    return s;
  }

  // Two-radical forms reduce to a comparison polynomial after one squaring:
  // (c0 + c1 L)^2 - w1^2 (L^2 - a1) - w2^2 (L^2 - a2) = 2 w1 w2 s1 s2.
  ComparisonPoly comparison_poly() const {
    const double p2 = c1 * c1 - w[0] * w[0] - w[1] * w[1];
    const double p1 = 2.0 * c0 * c1;
    const double p0 = c0 * c0 + w[0] * w[0] * a[0] + w[1] * w[1] * a[1];
    const double ww = w[0] * w[1];
    return {-p2 / ww, -p1 / ww, -p0 / ww, a[0], a[1]};
  }

  // Candidate roots in the bracket. Extra roots only cost decision calls,
  // so the back-substitution filter is deliberately loose.
  std::vector<double> roots(SearchInterval br) const {
    double amax = 0.0;
    for (int m = 0; m < terms; ++m) amax = std::max(amax, a[m]);
    const double lo = std::max(br.lo, std::sqrt(amax));
    if (!(lo <= br.hi)) return {};
    std::vector<double> raw;
    if (terms == 0) {
      if (c1 != 0.0) raw.push_back(-c0 / c1);
    } else if (terms == 1) {
      // (c0 + c1 L)^2 = w^2 (L^2 - a)
      const std::array<double, 3> c{c0 * c0 + w[0] * w[0] * a[0], 2.0 * c0 * c1, c1 * c1 - w[0] * w[0]};
      raw = poly::real_roots(c, lo, br.hi);
    } else {
      raw = comparison_quartic_roots(comparison_poly(), {lo, br.hi});
    }
    std::vector<double> out;
    for (double r : raw) {
      if (r < lo || r > br.hi) continue;
      if (std::abs((*this)(r)) <= 1e-6 * (1.0 + scale(r))) out.push_back(r);
    }
    return out;
  }
};

inline RadicalForm difference(const Expr& x, const Expr& y) {
  RadicalForm f;
  f.c0 = x.c0 - y.c0;
  f.c1 = x.c1 - y.c1;
  f.add_radical(x.w, x.a);
  f.add_radical(-y.w, y.a);
  return f;
}

// Owns the bracket around L* and resolves batches of comparisons.
class ParametricSearch {
 public:
  ParametricSearch(const Instance& inst, SolverStats& stats, std::vector<SearchInterval>* trace)
      : inst_(inst), stats_(stats), trace_(trace), br_{0.0, inst.upper_bound()} {
    record();
  }

  SearchInterval bracket() const { return br_; }
  bool hi_rejected() const { return hi_rejected_; }

  // Signs (-1, 0, +1) of every form on the open bracket after shrinking it so
  // that none of them has a root inside. Roots from the whole batch are
  // located with one binary search.
  std::vector<int> resolve(const std::vector<RadicalForm>& forms) {
    stats_.comparisons += static_cast<long>(forms.size());
    std::vector<double> roots;
    for (const RadicalForm& f : forms) {
      for (double r : f.roots(br_)) {
        if (r > br_.lo && r < br_.hi) roots.push_back(r);
      }
    }
    locate(std::move(roots));
    std::vector<int> signs;
    signs.reserve(forms.size());
    const double mid = 0.5 * (br_.lo + br_.hi);
    for (const RadicalForm& f : forms) {
      const double v = f(mid);
      if (std::abs(v) <= 1e-12 * (1.0 + f.scale(mid))) {
        signs.push_back(0);
      } else {
        signs.push_back(v < 0.0 ? -1 : 1);
      }
    }
    return signs;
  }

  int resolve(const RadicalForm& f) { return resolve(std::vector<RadicalForm>{f}).front(); }

  // Optimum given the outcome of the greedy replayed on the open bracket:
  // success there means L* is the bracket's upper end, failure means the
  // lower end.
  double finish(bool generic_feasible) {
    if (generic_feasible) {
      if (hi_rejected_) throw std::logic_error("parametric search: bracket inconsistent with decision");
      return br_.hi;
    }
    if (!(br_.lo > 0.0)) throw std::logic_error("parametric search: no feasible radius was located");
    return br_.lo;
  }

 private:
  void locate(std::vector<double> roots) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::size_t lo = 0;
    std::size_t hi = roots.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const double L = roots[mid];
      ++stats_.decision_calls;
      if (decide_segment(inst_, L).feasible) {
        br_.lo = std::max(br_.lo, L);
        lo = mid + 1;
      } else {
        br_.hi = std::min(br_.hi, L);
        hi_rejected_ = true;
        hi = mid;
      }
      record();
    }
  }

  void record() {
    if (trace_) trace_->push_back(br_);
  }

  const Instance& inst_;
  SolverStats& stats_;
  std::vector<SearchInterval>* trace_;
  SearchInterval br_;
  bool hi_rejected_ = false;
};

// Comparison policy for greedy_pack on symbolic values.
struct SymbolicField {
  ParametricSearch& search;

  bool lt(const Expr& x, const Expr& y) const { return search.resolve(difference(x, y)) < 0; }
  bool le(const Expr& x, const Expr& y) const { return search.resolve(difference(x, y)) <= 0; }
  Expr advance(Expr v, int m) const {
    v.c1 += 2.0 * m;
    return v;
  }
};

inline std::vector<Span<Expr>> symbolic_blocked(const Instance& inst, const SymbolicField& field) {
  std::vector<Span<Expr>> out;
  for (const Point& pt : inst.points) {
    const double dy = pt.y - inst.line_y();
    if (field.lt(Expr::constant(dy), Expr::radius()))
      out.push_back({Expr::endpoint(pt.x, dy, -1.0), Expr::endpoint(pt.x, dy, 1.0)});
  }
  return out;
}

// Union of blocked intervals given in point order. Every stacked interval
// starts left of the incoming one's right end, so only a suffix of the stack
// can overlap it: O(n) comparisons overall.
inline std::vector<Span<Expr>> symbolic_merge(const std::vector<Span<Expr>>& blocked,
                                              const SymbolicField& field) {
  std::vector<Span<Expr>> st;
  for (Span<Expr> cur : blocked) {
    while (!st.empty() && field.lt(cur.a, st.back().b)) {
      if (field.lt(st.back().a, cur.a)) cur.a = st.back().a;
      if (field.lt(cur.b, st.back().b)) cur.b = st.back().b;
      st.pop_back();
    }
    st.push_back(cur);
  }
  return st;
}

inline std::vector<Span<Expr>> symbolic_complement(const std::vector<Span<Expr>>& merged, const Instance& inst,
                                                   const SymbolicField& field) {
  const Expr left = Expr::constant(inst.p.x);
  const Expr right = Expr::constant(inst.q.x);
  std::vector<Span<Expr>> out;
  Expr cur = left;
  for (const Span<Expr>& iv : merged) {
    if (field.lt(iv.b, cur)) continue;
    if (field.lt(right, iv.a)) break;
    if (field.le(cur, iv.a)) out.push_back({cur, iv.a});
    if (field.lt(cur, iv.b)) cur = iv.b;
    if (field.lt(right, cur)) return out;
  }
  out.push_back({cur, right});
  return out;
}

inline void require_euclidean(const Instance& inst, const char* who) {
  if (inst.metric != Metric::kEuclidean)
    throw std::invalid_argument(std::string(who) + " supports the Euclidean metric only");
}

}  // namespace detail

// Exact optimum by parametric search over the greedy decision. `trace`, when
// given, receives the bracket after every decision call.
inline OptimalResult solve_parametric(const Instance& inst, std::vector<SearchInterval>* trace = nullptr) {
  validate(inst);
  detail::require_euclidean(inst, "solve_parametric");
  OptimalResult res;
  detail::ParametricSearch search(inst, res.stats, trace);
  detail::SymbolicField field{search};

  const auto blocked = detail::symbolic_blocked(inst, field);
  const auto merged = detail::symbolic_merge(blocked, field);
  const auto feasible = detail::symbolic_complement(merged, inst, field);
  const bool generic = detail::greedy_pack(feasible, inst.k, field).has_value();

  res.r_max = search.finish(generic);
  ++res.stats.decision_calls;
  DecisionOutcome d = decide_segment(inst, res.r_max);
  if (!d.feasible) throw std::logic_error("parametric search: decision rejects the located optimum");
  res.packing = std::move(*d.packing);
  return res;
}

// ---------------------------------------------------------------------------
// k = 2

namespace detail {

// Leftmost and rightmost feasible centers at radius L (the two-facility
// placement). Absent when the segment is fully blocked.
inline std::optional<std::pair<double, double>> extreme_feasible(const Instance& inst, double L) {
  const IntervalSet set = feasible_intervals(inst, L);
  if (set.feasible.empty()) return std::nullopt;
  return std::pair{set.feasible.front().lo, set.feasible.back().hi};
}

}  // namespace detail

// Default constant in the k = 2 decision-call bound
// calls <= kK2CallConstant * (ceil(log2(n + 1)) + 1)^2.
inline constexpr int kK2CallConstant = 12;

// Two facilities. The decision is "leftmost feasible point and rightmost
// feasible point are at least 2L apart". Its interval union is built by
// rounds of pairwise merges of adjacent overlapping intervals; every round's
// comparisons are independent and resolved as one batch, so each round costs
// O(log n) decision calls.
inline OptimalResult solve_k2(const Instance& inst, std::vector<SearchInterval>* trace = nullptr) {
  validate(inst);
  if (inst.k != 2) throw std::invalid_argument("solve_k2 requires k == 2");
  detail::require_euclidean(inst, "solve_k2");
  using detail::difference;
  using detail::Expr;
  using detail::RadicalForm;
  using detail::Span;

  OptimalResult res;
  detail::ParametricSearch search(inst, res.stats, trace);

  // Round 0: which points reach the segment line.
  std::vector<RadicalForm> forms;
  for (const Point& pt : inst.points) forms.push_back(difference(Expr::constant(pt.y - inst.line_y()), Expr::radius()));
  std::vector<int> sign = search.resolve(forms);
  ++res.stats.rounds;
  std::vector<Span<Expr>> list;
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    if (sign[i] < 0) {
      const Point& pt = inst.points[i];
      const double dy = pt.y - inst.line_y();
      list.push_back({Expr::endpoint(pt.x, dy, -1.0), Expr::endpoint(pt.x, dy, 1.0)});
    }
  }

  // Merge rounds.
  while (list.size() > 1) {
    forms.clear();
    for (std::size_t i = 0; i + 1 < list.size(); ++i) forms.push_back(difference(list[i + 1].a, list[i].b));
    sign = search.resolve(forms);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i + 1 < list.size();) {
      if (sign[i] < 0) {
        pairs.emplace_back(i, i + 1);
        i += 2;
      } else {
        ++i;
      }
    }
    if (pairs.empty()) break;
    ++res.stats.rounds;
    forms.clear();
    for (auto [l, r] : pairs) {
      forms.push_back(difference(list[l].a, list[r].a));
      forms.push_back(difference(list[l].b, list[r].b));
    }
    sign = search.resolve(forms);
    std::vector<Span<Expr>> next;
    std::size_t pi = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (pi < pairs.size() && pairs[pi].first == i) {
        const Span<Expr>& l = list[i];
        const Span<Expr>& r = list[i + 1];
        next.push_back({sign[2 * pi] < 0 ? l.a : r.a, sign[2 * pi + 1] < 0 ? r.b : l.b});
        ++pi;
        ++i;
      } else {
        next.push_back(list[i]);
      }
    }
    list = std::move(next);
  }

  // Which merged interval, if any, swallows each segment end.
  const Expr left = Expr::constant(inst.p.x);
  const Expr right = Expr::constant(inst.q.x);
  forms.clear();
  for (const Span<Expr>& iv : list) {
    forms.push_back(difference(iv.a, left));
    forms.push_back(difference(left, iv.b));
    forms.push_back(difference(iv.a, right));
    forms.push_back(difference(right, iv.b));
  }
  sign = search.resolve(forms);
  Expr first = left;
  Expr last = right;
  for (std::size_t m = 0; m < list.size(); ++m) {
    if (sign[4 * m] < 0 && sign[4 * m + 1] < 0) first = list[m].b;
    if (sign[4 * m + 2] < 0 && sign[4 * m + 3] < 0) last = list[m].a;
  }
  Expr stepped = first;
  stepped.c1 += 2.0;
  const bool generic = search.resolve(difference(stepped, last)) <= 0;

  res.r_max = search.finish(generic);
  ++res.stats.decision_calls;
  const auto ends = detail::extreme_feasible(inst, res.r_max);
  if (!ends || ends->second - ends->first < 2.0 * res.r_max - kEps)
    throw std::logic_error("solve_k2: located optimum does not admit two facilities");
  res.packing = Packing{res.r_max, {ends->first, ends->second}};
  return res;
}

}  // namespace cofl
