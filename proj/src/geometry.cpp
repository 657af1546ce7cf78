#include "fitl/geometry.hpp"

#include <cmath>

namespace fitl::geom {

std::optional<PlanePoint> line_intersection(const EdgeLine& l1,
                                            const EdgeLine& l2) {
  auto p = line_cross(Line<double>{l1.p0, l1.p1}, Line<double>{l2.p0, l2.p1});
  if (!p) return std::nullopt;
  return PlanePoint{p->x, p->y};
}

std::pair<FuzzyInterval, FuzzyInterval> finitize_pair(const FuzzyInterval& A,
                                                      const FuzzyInterval& B) {
  auto [fa, fb] = finitize(to_gen(A), to_gen(B));
  return {FuzzyInterval(fa.a, fa.b, fa.c, fa.d),
          FuzzyInterval(fb.a, fb.b, fb.c, fb.d)};
}

std::vector<PlanePoint> intersection_vertices(const FuzzyInterval& A,
                                              const FuzzyInterval& B) {
  if (!A.is_finite() || !B.is_finite())
    throw std::invalid_argument(
        "intersection_vertices: finitize semi-infinite operands first");
  Trapezoid<double> ta{A.a(), A.b(), A.c(), A.d()};
  Trapezoid<double> tb{B.a(), B.b(), B.c(), B.d()};
  const bool swap = std::make_tuple(tb.a, tb.b, tb.c, tb.d) <
                    std::make_tuple(ta.a, ta.b, ta.c, ta.d);
  const auto pts = swap ? overlap_vertices(tb, ta) : overlap_vertices(ta, tb);
  std::vector<PlanePoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({p.x, p.y});
  return out;
}

double shoelace_area(const std::vector<PlanePoint>& pts) {
  std::vector<Point<double>> ps;
  ps.reserve(pts.size());
  for (const auto& p : pts) ps.push_back({p.x, p.y});
  return polygon_area(ps);
}

double intersection_area(const FuzzyInterval& A, const FuzzyInterval& B) {
  return overlap_area(to_gen(A), to_gen(B));
}

double oracle_intersection_area(const FuzzyInterval& A, const FuzzyInterval& B,
                                double grid_step) {
  if (!(grid_step > 0.0))
    throw std::invalid_argument("oracle: grid_step must be positive");
  auto [fa, fb] = finitize_pair(A, B);
  const double lo = std::min(fa.a(), fb.a());
  const double hi = std::max(fa.d(), fb.d());
  if (!(hi > lo)) return 0.0;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / grid_step));
  const double h = (hi - lo) / static_cast<double>(n);
  auto f = [&](double x) {
    return std::min(membership(fa, x), membership(fb, x));
  };
  double sum = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i < n; ++i)
    sum += f(lo + static_cast<double>(i) * h);
  return sum * h;
}

}  // namespace fitl::geom
