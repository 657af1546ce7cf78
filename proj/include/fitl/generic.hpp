#ifndef FITL_GENERIC_HPP
#define FITL_GENERIC_HPP

#include <stdexcept>

#include "fitl/autodiff.hpp"
#include "fitl/interval.hpp"

// Interval operators generic over the scalar type (double or ad::DiffScalar).
// The crisp public API and the differentiable evaluation path both
// instantiate these templates, so their forward arithmetic is identical
// operation for operation.

namespace fitl::geom {

inline double val(double x) { return x; }
inline double val(const ad::DiffScalar& s) { return s.value; }

template <class T>
T vmin(const T& x, const T& y) {
  return val(x) <= val(y) ? x : y;
}

template <class T>
T vmax(const T& x, const T& y) {
  return val(x) >= val(y) ? x : y;
}

/// Trapezoid with possibly infinite sides (infinite fields hold IEEE
/// infinities that are never used arithmetically before finitization).
template <class T>
struct GenTrapezoid {
  T a, b, c, d;
  bool left_infinite = false;
  bool right_infinite = false;
};

inline GenTrapezoid<double> to_gen(const FuzzyInterval& itv) {
  return {itv.a(), itv.b(), itv.c(), itv.d(), itv.is_left_infinite(),
          itv.is_right_infinite()};
}

template <class T>
GenTrapezoid<T> before_op(const GenTrapezoid<T>& t) {
  if (t.left_infinite)
    throw std::invalid_argument("before: undefined for a left-infinite interval");
  return {T(-FuzzyInterval::kInf), T(-FuzzyInterval::kInf), t.a, t.b, true,
          false};
}

template <class T>
GenTrapezoid<T> after_op(const GenTrapezoid<T>& t) {
  if (t.right_infinite)
    throw std::invalid_argument("after: undefined for a right-infinite interval");
  return {t.c, t.d, T(FuzzyInterval::kInf), T(FuzzyInterval::kInf), false,
          true};
}

template <class T>
GenTrapezoid<T> start_op(const GenTrapezoid<T>& t, double delta_min) {
  if (t.left_infinite)
    throw std::invalid_argument("start: undefined for a left-infinite interval");
  T chi = (t.a + t.b) / T(2.0);
  T delta = vmax((t.b - t.a) / T(2.0), T(delta_min));
  return {chi - delta / T(2.0), chi, chi, chi + delta / T(2.0), false, false};
}

template <class T>
GenTrapezoid<T> end_op(const GenTrapezoid<T>& t, double delta_min) {
  if (t.right_infinite)
    throw std::invalid_argument("end: undefined for a right-infinite interval");
  T chi = (t.c + t.d) / T(2.0);
  T delta = vmax((t.d - t.c) / T(2.0), T(delta_min));
  return {chi - delta / T(2.0), chi, chi, chi + delta / T(2.0), false, false};
}

/// Duration of a finite trapezoid; callers guard the semi-infinite cases.
template <class T>
T duration_op(const GenTrapezoid<T>& t) {
  return ((t.c - t.b) + (t.d - t.a)) / T(2.0);
}

}  // namespace fitl::geom

#endif  // FITL_GENERIC_HPP
