#include "fitl/interval.hpp"

#include <cmath>

#include "fitl/generic.hpp"

namespace fitl {

namespace {

[[noreturn]] void fail(const char* msg) { throw std::invalid_argument(msg); }

}  // namespace

FuzzyInterval::FuzzyInterval(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d))
    fail("fuzzy interval: NaN parameter");
  if (!(a <= b && b <= c && c <= d))
    fail("fuzzy interval: parameters must satisfy a <= b <= c <= d");
  const bool a_inf = (a == -kInf), b_inf = (b == -kInf);
  const bool c_inf = (c == kInf), d_inf = (d == kInf);
  if (a_inf != b_inf)
    fail("fuzzy interval: a left-infinite interval needs a = b = -inf");
  if (c_inf != d_inf)
    fail("fuzzy interval: a right-infinite interval needs c = d = +inf");
  if (a_inf && c_inf) fail("fuzzy interval: both sides infinite");
  if (b == kInf || c == -kInf) fail("fuzzy interval: parameter out of range");
}

FuzzyInterval FuzzyInterval::finite(double a, double b, double c, double d) {
  FuzzyInterval itv(a, b, c, d);
  if (!itv.is_finite()) fail("fuzzy interval: expected finite parameters");
  return itv;
}

FuzzyInterval FuzzyInterval::left_infinite(double c, double d) {
  return FuzzyInterval(-kInf, -kInf, c, d);
}

FuzzyInterval FuzzyInterval::right_infinite(double a, double b) {
  return FuzzyInterval(a, b, kInf, kInf);
}

ExtendedDuration duration(const FuzzyInterval& itv) {
  if (!itv.is_finite()) return ExtendedDuration::infinite();
  return {((itv.c() - itv.b()) + (itv.d() - itv.a())) / 2.0};
}

namespace {

FuzzyInterval from_gen(const geom::GenTrapezoid<double>& t) {
  return FuzzyInterval(t.a, t.b, t.c, t.d);
}

}  // namespace

FuzzyInterval before(const FuzzyInterval& itv) {
  return from_gen(geom::before_op(geom::to_gen(itv)));
}

FuzzyInterval after(const FuzzyInterval& itv) {
  return from_gen(geom::after_op(geom::to_gen(itv)));
}

FuzzyInterval start(const FuzzyInterval& itv, double delta_min) {
  if (delta_min <= 0.0) fail("start: delta_min must be positive");
  return from_gen(geom::start_op(geom::to_gen(itv), delta_min));
}

FuzzyInterval end(const FuzzyInterval& itv, double delta_min) {
  if (delta_min <= 0.0) fail("end: delta_min must be positive");
  return from_gen(geom::end_op(geom::to_gen(itv), delta_min));
}

FuzzyInterval crisp_interval(double i, double j) {
  if (!(i <= j)) fail("crisp interval: requires i <= j");
  return FuzzyInterval::finite(i, i, j, j);
}

}  // namespace fitl
