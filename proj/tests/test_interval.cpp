#include <cmath>
#include <random>

#include <doctest.h>

#include "fitl/interval.hpp"

using fitl::FuzzyInterval;

namespace {

// Trapezoidal-rule integral of the membership function over [lo, hi];
// independent oracle for duration().
double integrate_membership(const FuzzyInterval& itv, double lo, double hi,
                            double step) {
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  const double h = (hi - lo) / static_cast<double>(n);
  double sum = 0.5 * (membership(itv, lo) + membership(itv, hi));
  for (std::size_t i = 1; i < n; ++i)
    sum += membership(itv, lo + static_cast<double>(i) * h);
  return sum * h;
}

}  // namespace

TEST_CASE("membership evaluates the trapezoid piecewise") {
  const FuzzyInterval itv(1, 2, 5, 7);
  CHECK(membership(itv, 3.0) == 1.0);
  CHECK(membership(itv, 1.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(membership(itv, 0.0) == 0.0);
  CHECK(membership(itv, 2.0) == 1.0);
  CHECK(membership(itv, 5.0) == 1.0);
  CHECK(membership(itv, 7.0) == 0.0);
  CHECK(membership(itv, 6.0) == doctest::Approx(0.5).epsilon(1e-12));

  const FuzzyInterval left = FuzzyInterval::left_infinite(2, 3);
  CHECK(membership(left, -1000.0) == 1.0);
  CHECK(membership(left, 2.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(membership(left, 10.0) == 0.0);
}

TEST_CASE("membership bounds and monotonicity on random intervals") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    std::sort(v, v + 4);
    const FuzzyInterval itv(v[0], v[1], v[2], v[3]);
    double prev_rise = -1.0;
    for (double x = -1.0; x <= 11.0; x += 0.21) {
      const double m = membership(itv, x);
      CHECK(m >= 0.0);
      CHECK(m <= 1.0);
      if (x >= itv.b() && x <= itv.c()) CHECK(m == 1.0);
      if (x <= itv.b()) {
        CHECK(m >= prev_rise);
        prev_rise = m;
      }
    }
  }
}

TEST_CASE("duration closed form") {
  CHECK(duration(FuzzyInterval(1, 2, 5, 7)).value ==
        doctest::Approx(4.5).epsilon(1e-12));
  CHECK(duration(FuzzyInterval(3, 3, 3, 3)).value == 0.0);
  CHECK(duration(FuzzyInterval::left_infinite(2, 3)).is_infinite());
  CHECK(duration(FuzzyInterval::right_infinite(2, 3)).is_infinite());
}

TEST_CASE("duration agrees with numeric integration") {
  CHECK(std::abs(duration(FuzzyInterval(1, 2, 5, 7)).value -
                 integrate_membership(FuzzyInterval(1, 2, 5, 7), 1, 7, 1e-4)) <=
        1e-6);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  double max_err = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    std::sort(v, v + 4);
    // Snap narrow ramps to crisp edges; the integration grid is anchored on
    // the support endpoints, so crisp jumps cost nothing while very steep
    // ramps would dominate the quadrature error.
    if (v[1] - v[0] < 0.01) v[1] = v[0];
    if (v[3] - v[2] < 0.01) v[2] = v[3];
    if (v[2] < v[1]) continue;
    const FuzzyInterval itv(v[0], v[1], v[2], v[3]);
    if (itv.a() == itv.d()) continue;
    const double numeric =
        integrate_membership(itv, itv.a(), itv.d(), 1e-4);
    max_err = std::max(max_err, std::abs(duration(itv).value - numeric));
  }
  CHECK(max_err <= 1e-6);
}

TEST_CASE("before and after swap the finite side into an infinite plateau") {
  const FuzzyInterval itv(2, 3, 4, 6);
  CHECK(before(itv) == FuzzyInterval::left_infinite(2, 3));
  CHECK(after(itv) == FuzzyInterval::right_infinite(4, 6));
  CHECK(before(FuzzyInterval(0, 0, 1, 1)) == FuzzyInterval::left_infinite(0, 0));
  CHECK(after(FuzzyInterval(0, 0, 1, 1)) == FuzzyInterval::right_infinite(1, 1));
  CHECK_THROWS_AS(before(FuzzyInterval::left_infinite(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(after(FuzzyInterval::right_infinite(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("before endpoints carry over exactly") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    std::sort(v, v + 4);
    const FuzzyInterval itv(v[0], v[1], v[2], v[3]);
    CHECK(before(itv).d() == itv.b());
    CHECK(before(itv).c() == itv.a());
    CHECK(after(itv).a() == itv.c());
    CHECK(after(itv).b() == itv.d());
  }
}

TEST_CASE("start and end build thin triangles around the edges") {
  const FuzzyInterval itv(2, 3, 4, 6);
  CHECK(start(itv, 0.1) == FuzzyInterval(2.25, 2.5, 2.5, 2.75));
  CHECK(end(itv, 0.1) == FuzzyInterval(4.5, 5.0, 5.0, 5.5));
  CHECK(start(FuzzyInterval(2, 2, 4, 6), 0.1) ==
        FuzzyInterval(1.975, 2, 2, 2.025));
  CHECK(end(FuzzyInterval(0, 0, 2, 2), 0.1) ==
        FuzzyInterval(1.975, 2, 2, 2.025));
  CHECK(start(FuzzyInterval(0, 4, 9, 9), 0.1) == FuzzyInterval(1, 2, 2, 3));
  CHECK_THROWS_AS(start(FuzzyInterval::left_infinite(2, 3), 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(end(FuzzyInterval::right_infinite(2, 3), 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(start(itv, 0.0), std::invalid_argument);
}

TEST_CASE("start and end durations never collapse") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  const double delta_min = 0.1;
  for (int trial = 0; trial < 300; ++trial) {
    double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    std::sort(v, v + 4);
    const FuzzyInterval itv(v[0], v[1], v[2], v[3]);
    const FuzzyInterval s = start(itv, delta_min);
    const FuzzyInterval e = end(itv, delta_min);
    CHECK(duration(s).value > 0.0);
    CHECK(duration(e).value > 0.0);
    CHECK(s.d() - s.a() >= delta_min - 1e-15);
    CHECK(e.d() - e.a() >= delta_min - 1e-15);
  }
}

TEST_CASE("crisp_interval builds the indicator trapezoid") {
  CHECK(fitl::crisp_interval(2, 5) == FuzzyInterval(2, 2, 5, 5));
  CHECK(fitl::crisp_interval(3, 3) == FuzzyInterval(3, 3, 3, 3));
  CHECK_THROWS_AS(fitl::crisp_interval(5, 2), std::invalid_argument);
}

TEST_CASE("interval invariants are enforced at construction") {
  CHECK_THROWS_AS(FuzzyInterval(2, 1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(FuzzyInterval(-FuzzyInterval::kInf, 0, 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(FuzzyInterval(0, 1, FuzzyInterval::kInf, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      FuzzyInterval(-FuzzyInterval::kInf, -FuzzyInterval::kInf,
                    FuzzyInterval::kInf, FuzzyInterval::kInf),
      std::invalid_argument);
  CHECK_THROWS_AS(FuzzyInterval(std::nan(""), 1, 2, 3), std::invalid_argument);
  CHECK_NOTHROW(FuzzyInterval::left_infinite(2, 3));
  CHECK_NOTHROW(FuzzyInterval::right_infinite(2, 3));
}
