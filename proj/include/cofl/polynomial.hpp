#pragma once

// Real roots of low-degree polynomials inside a bracket. Used to solve the
// candidate-radius equations and the comparison polynomials of the parametric
// search, both of which are at most quartic after squaring.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace cofl::poly {

// Coefficients are stored lowest degree first: c[0] + c[1] x + c[2] x^2 ...
inline double eval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Sum of |c_i| |x|^i, the natural scale of rounding error in eval(c, x).
inline double magnitude(std::span<const double> c, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * ax + std::abs(c[i]);
  return acc;
}

inline std::vector<double> derivative(std::span<const double> c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

namespace detail {

// Root of a polynomial that changes sign on [a, b]; bisection down to
// adjacent doubles, then a Newton step if it improves the residual.
inline double bisect(std::span<const double> c, double a, double b, double fa) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = eval(c, m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  double x = 0.5 * (a + b);
  const std::vector<double> d = derivative(c);
  const double fx = eval(c, x);
  const double dx = eval(d, x);
  if (dx != 0.0) {
    const double y = x - fx / dx;
    if (y >= a && y <= b && std::abs(eval(c, y)) < std::abs(fx)) x = y;
  }
  return x;
}

inline void roots_rec(std::span<const double> c, double lo, double hi, std::vector<double>& out) {
  std::size_t deg = c.size();
  while (deg > 0 && c[deg - 1] == 0.0) --deg;
  if (deg <= 1) return;  // constant: no isolated roots
  c = c.first(deg);
  if (deg == 2) {
    const double x = -c[0] / c[1];
    if (x >= lo && x <= hi) out.push_back(x);
    return;
  }
  // Split [lo, hi] at the critical points; p is monotone on every piece.
  const std::vector<double> d = derivative(c);
  std::vector<double> crit;
  roots_rec(d, lo, hi, crit);
  std::vector<double> knots;
  knots.push_back(lo);
  for (double x : crit) {
    if (x > knots.back()) knots.push_back(x);
  }
  if (hi > knots.back()) knots.push_back(hi);

  auto near_zero = [&](double x) { return std::abs(eval(c, x)) <= 1e-12 * magnitude(c, x); };
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const double fa = eval(c, a);
    const double fb = eval(c, b);
    if (fa == 0.0) {
      out.push_back(a);
    } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      out.push_back(bisect(c, a, b, fa));
    }
  }
  if (eval(c, knots.back()) == 0.0) out.push_back(knots.back());
  // Touching (even multiplicity) roots sit at critical points without a
  // sign change.
  for (double x : crit) {
    if (near_zero(x)) out.push_back(x);
  }
}

}  // namespace detail

// All real roots of c inside [lo, hi], ascending, with near-duplicates
// collapsed. An identically zero polynomial reports no roots.
inline std::vector<double> real_roots(std::span<const double> c, double lo, double hi) {
  std::vector<double> out;
  if (!(lo <= hi)) return out;
  detail::roots_rec(c, lo, hi, out);
  std::sort(out.begin(), out.end());
  std::vector<double> uniq;
  for (double x : out) {
    if (uniq.empty() || x - uniq.back() > 1e-14 * std::max(1.0, std::abs(x))) uniq.push_back(x);
  }
  return uniq;
}

}  // namespace cofl::poly
