#ifndef FITL_INTERVAL_HPP
#define FITL_INTERVAL_HPP

#include <limits>
#include <stdexcept>

namespace fitl {

/// A trapezoidal fuzzy interval over the extended reals.
///
/// Membership rises linearly on (a,b), is 1 on [b,c] and falls linearly on
/// (c,d). A side may be infinite: left-infinite means a = b = -inf (the
/// plateau extends to -inf), right-infinite means c = d = +inf. At most one
/// side may be infinite.
class FuzzyInterval {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  FuzzyInterval(double a, double b, double c, double d);

  static FuzzyInterval finite(double a, double b, double c, double d);
  static FuzzyInterval left_infinite(double c, double d);
  static FuzzyInterval right_infinite(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  bool is_left_infinite() const { return a_ == -kInf; }
  bool is_right_infinite() const { return d_ == kInf; }
  bool is_finite() const { return !is_left_infinite() && !is_right_infinite(); }

  bool operator==(const FuzzyInterval&) const = default;

 private:
  double a_, b_, c_, d_;
};

/// Duration of a fuzzy interval: the integral of its membership function.
/// Finite for finite intervals, infinite otherwise.
struct ExtendedDuration {
  double value = 0.0;

  bool is_infinite() const { return value == FuzzyInterval::kInf; }
  static ExtendedDuration infinite() { return {FuzzyInterval::kInf}; }
};

/// Membership degree I(x), a total function into [0,1].
/// Inline: this sits in the inner loop of the numeric-integration oracle.
inline double membership(const FuzzyInterval& itv, double x) {
  // Plateau first so crisp edges (a == b or c == d) evaluate to 1 there.
  if (x >= itv.b() && x <= itv.c()) return 1.0;
  if (x > itv.a() && x < itv.b()) return (x - itv.a()) / (itv.b() - itv.a());
  if (x > itv.c() && x < itv.d()) return (x - itv.d()) / (itv.c() - itv.d());
  return 0.0;
}

/// ((c-b)+(d-a))/2 for finite intervals, infinite otherwise.
ExtendedDuration duration(const FuzzyInterval& interval);

/// Everything before the start of the interval: (-inf,-inf,a,b).
/// Requires a left-finite input.
FuzzyInterval before(const FuzzyInterval& interval);

/// Everything after the end of the interval: (c,d,+inf,+inf).
/// Requires a right-finite input.
FuzzyInterval after(const FuzzyInterval& interval);

/// The starting phase of the interval: a thin triangle centred on
/// chi = (a+b)/2 with half-width delta = max((b-a)/2, delta_min).
/// Requires a left-finite input.
FuzzyInterval start(const FuzzyInterval& interval, double delta_min);

/// The ending phase, mirror of start() on (c,d). Requires right-finite input.
FuzzyInterval end(const FuzzyInterval& interval, double delta_min);

/// The crisp indicator interval [i,j] as the degenerate trapezoid (i,i,j,j).
FuzzyInterval crisp_interval(double i, double j);

}  // namespace fitl

#endif  // FITL_INTERVAL_HPP
