#ifndef FITL_GEOMETRY_HPP
#define FITL_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fitl/generic.hpp"
#include "fitl/interval.hpp"

// Exact intersection area of two trapezoidal membership regions.
//
// The area is computed by enumerating the vertices of the (convex)
// intersection polygon — bottom vertices on y=0, top vertices on y=1, and
// side vertices from pairwise intersections of the four slanted edge lines —
// then applying the shoelace formula. The computation is templated on the
// scalar type so that the identical code path runs on plain doubles and on
// tape-recorded scalars; branch decisions always use raw values, so both
// instantiations produce bitwise-equal results.

namespace fitl::geom {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// A trapezoid edge extended to a full line: passes through (p0, 0) and
/// (p1, 1); degenerates to the vertical line x = p0 when p0 == p1.
struct EdgeLine {
  double p0 = 0.0;
  double p1 = 0.0;
  bool is_vertical() const { return p0 == p1; }
};

template <class T>
struct Point {
  T x;
  T y;
};

/// Finite trapezoid parameters, no infinity flags.
template <class T>
struct Trapezoid {
  T a, b, c, d;
};

template <class T>
struct Line {
  T p0;
  T p1;
};

/// Intersection of two edge lines; empty for parallel (including identical)
/// pairs. Uses the closed form x = (p0 q1 - p1 q0) / (p0 - p1 + q1 - q0),
/// y = (p0 - q0) / (p0 - p1 + q1 - q0) for two slanted lines.
template <class T>
std::optional<Point<T>> line_cross(const Line<T>& u, const Line<T>& v) {
  const bool u_vert = val(u.p0) == val(u.p1);
  const bool v_vert = val(v.p0) == val(v.p1);
  if (u_vert && v_vert) return std::nullopt;
  if (u_vert) {
    T y = (u.p0 - v.p0) / (v.p1 - v.p0);
    return Point<T>{u.p0, y};
  }
  if (v_vert) {
    T y = (v.p0 - u.p0) / (u.p1 - u.p0);
    return Point<T>{v.p0, y};
  }
  T denom = u.p0 - u.p1 + v.p1 - v.p0;
  if (val(denom) == 0.0) return std::nullopt;
  T x = (u.p0 * v.p1 - u.p1 * v.p0) / denom;
  T y = (u.p0 - v.p0) / denom;
  return Point<T>{x, y};
}

namespace detail {

constexpr double kVertexMergeTol = 1e-9;

template <class T>
void push_unique(std::vector<Point<T>>& pts, const Point<T>& p) {
  for (const auto& q : pts)
    if (std::abs(val(q.x) - val(p.x)) <= kVertexMergeTol &&
        std::abs(val(q.y) - val(p.y)) <= kVertexMergeTol)
      return;
  pts.push_back(p);
}

template <class T>
void sort_counter_clockwise(std::vector<Point<T>>& pts) {
  if (pts.size() < 3) return;
  double cx = 0.0, cy = 0.0;
  for (const auto& p : pts) {
    cx += val(p.x);
    cy += val(p.y);
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::stable_sort(pts.begin(), pts.end(),
                   [cx, cy](const Point<T>& l, const Point<T>& r) {
                     return std::atan2(val(l.y) - cy, val(l.x) - cx) <
                            std::atan2(val(r.y) - cy, val(r.x) - cx);
                   });
}

}  // namespace detail

/// Vertices of the intersection of two finite trapezoid regions, merged and
/// sorted counter-clockwise. Empty when the supports do not overlap
/// (touching supports, d <= a', count as empty). Expects the caller to have
/// ordered the operands so that A starts no later than B.
template <class T>
std::vector<Point<T>> overlap_vertices(const Trapezoid<T>& A,
                                       const Trapezoid<T>& B) {
  std::vector<Point<T>> pts;
  if (val(A.d) <= val(B.a)) return pts;
  pts.reserve(8);

  const T one(1.0);
  const T zero(0.0);

  // Bottom vertices: (a', 0) always, plus (min(d, d'), 0).
  detail::push_unique(pts, Point<T>{B.a, zero});
  detail::push_unique(pts, Point<T>{vmin(A.d, B.d), zero});

  // Top vertices: zero, one or two depending on how the plateaus meet.
  if (val(A.c) < val(B.b) || val(A.b) > val(B.c)) {
    // plateaus disjoint, no top vertex
  } else if (val(B.b) == val(A.c)) {
    detail::push_unique(pts, Point<T>{A.c, one});
  } else if (val(A.b) == val(B.c)) {
    detail::push_unique(pts, Point<T>{A.b, one});
  } else {
    detail::push_unique(pts, Point<T>{vmax(A.b, B.b), one});
    detail::push_unique(pts, Point<T>{vmin(A.c, B.c), one});
  }

  // Side vertices: pairwise edge-line intersections with y in [0,1].
  const Line<T> la{A.a, A.b}, ra{A.d, A.c}, lb{B.a, B.b}, rb{B.d, B.c};
  const Line<T> pairs[4][2] = {{la, lb}, {la, rb}, {ra, lb}, {ra, rb}};
  for (const auto& pr : pairs) {
    if (auto p = line_cross(pr[0], pr[1]);
        p && val(p->y) >= 0.0 && val(p->y) <= 1.0)
      detail::push_unique(pts, *p);
  }

  detail::sort_counter_clockwise(pts);
  return pts;
}

/// Shoelace formula over a counter-clockwise vertex list; 0 for fewer than
/// three vertices.
template <class T>
T polygon_area(const std::vector<Point<T>>& pts) {
  if (pts.size() < 3) return T(0.0);
  T sum(0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    sum = sum + (p.y + q.y) * (p.x - q.x);
  }
  return sum * T(0.5);
}

/// Replaces infinite sides with finite ramps placed outside the other
/// trapezoid's support, leaving the intersection area unchanged. Throws when
/// both operands are infinite on the same side (unbounded intersection).
template <class T>
std::pair<Trapezoid<T>, Trapezoid<T>> finitize(const GenTrapezoid<T>& A,
                                               const GenTrapezoid<T>& B) {
  if ((A.left_infinite && B.left_infinite) ||
      (A.right_infinite && B.right_infinite))
    throw std::invalid_argument(
        "finitize: operands are infinite on the same side");

  double lo = FuzzyInterval::kInf, hi = -FuzzyInterval::kInf;
  auto scan = [&](const GenTrapezoid<T>& t) {
    if (!t.left_infinite) {
      lo = std::min({lo, val(t.a), val(t.b)});
      hi = std::max({hi, val(t.a), val(t.b)});
    }
    if (!t.right_infinite) {
      lo = std::min({lo, val(t.c), val(t.d)});
      hi = std::max({hi, val(t.c), val(t.d)});
    }
  };
  scan(A);
  scan(B);

  // The replacement ramp sits strictly outside [lo, hi], where the other
  // trapezoid's membership is zero, so its exact position carries no
  // gradient; plain constants are correct.
  auto fin = [&](const GenTrapezoid<T>& t) {
    Trapezoid<T> out{t.a, t.b, t.c, t.d};
    if (t.left_infinite) {
      out.a = T(lo - 2.0);
      out.b = T(lo - 1.0);
    }
    if (t.right_infinite) {
      out.c = T(hi + 1.0);
      out.d = T(hi + 2.0);
    }
    return out;
  };
  return {fin(A), fin(B)};
}

/// Exact area of the intersection of two trapezoid membership regions.
/// Symmetric in its arguments; semi-infinite sides are finitized first.
template <class T>
T overlap_area(const GenTrapezoid<T>& A, const GenTrapezoid<T>& B) {
  auto [fa, fb] = finitize(A, B);
  const bool swap =
      std::make_tuple(val(fb.a), val(fb.b), val(fb.c), val(fb.d)) <
      std::make_tuple(val(fa.a), val(fa.b), val(fa.c), val(fa.d));
  const auto pts = swap ? overlap_vertices(fb, fa) : overlap_vertices(fa, fb);
  return polygon_area(pts);
}

// --- double-only convenience API ---

std::optional<PlanePoint> line_intersection(const EdgeLine& l1,
                                            const EdgeLine& l2);

std::pair<FuzzyInterval, FuzzyInterval> finitize_pair(const FuzzyInterval& A,
                                                      const FuzzyInterval& B);

/// Requires finite inputs (apply finitize_pair first).
std::vector<PlanePoint> intersection_vertices(const FuzzyInterval& A,
                                              const FuzzyInterval& B);

double shoelace_area(const std::vector<PlanePoint>& pts);

double intersection_area(const FuzzyInterval& A, const FuzzyInterval& B);

/// Trapezoidal-rule integration of min(A(x), B(x)) over the union bounding
/// range. Test oracle for intersection_area; deliberately independent of the
/// vertex enumeration above.
double oracle_intersection_area(const FuzzyInterval& A, const FuzzyInterval& B,
                                double grid_step);

}  // namespace fitl::geom

#endif  // FITL_GEOMETRY_HPP
