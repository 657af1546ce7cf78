#include <random>

#include <doctest.h>

#include "fitl/relations.hpp"
#include "fitl/verify.hpp"

using fitl::FuzzyInterval;
using fitl::crisp_interval;
namespace rel = fitl::rel;

TEST_CASE("rel_in containment ratios") {
  CHECK(rel::rel_in(crisp_interval(1, 2), crisp_interval(0, 3)) == 1.0);
  CHECK(rel::rel_in(crisp_interval(0, 2), crisp_interval(1, 3)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rel::rel_in(crisp_interval(0, 1), crisp_interval(5, 6)) == 0.0);
  // Support inside the plateau gives exactly 1.
  CHECK(rel::rel_in(FuzzyInterval(2, 3, 4, 5), FuzzyInterval(0, 1, 6, 9)) ==
        1.0);
  // Degenerate point interval hits the epsilon guard, not a NaN.
  CHECK(rel::rel_in(FuzzyInterval(3, 3, 3, 3), crisp_interval(0, 6)) == 0.0);
  CHECK_THROWS_AS(
      rel::rel_in(FuzzyInterval::left_infinite(1, 2), crisp_interval(0, 3)),
      std::invalid_argument);
}

TEST_CASE("rel_eq is the two-way containment conjunction") {
  const FuzzyInterval itv(0, 1, 2, 3);
  CHECK(rel::rel_eq(itv, itv) == 1.0);
  CHECK(rel::rel_eq(crisp_interval(0, 2), crisp_interval(1, 3)) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rel::rel_eq(crisp_interval(0, 1), crisp_interval(5, 6)) == 0.0);

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> dist(0.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    double u[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    std::sort(u, u + 4);
    std::sort(v, v + 4);
    const FuzzyInterval A(u[0], u[1], u[2], u[3]);
    const FuzzyInterval B(v[0], v[1], v[2], v[3]);
    CHECK(rel::rel_eq(A, B) == rel::rel_eq(B, A));
    CHECK(rel::rel_eq(A, B) >= 0.0);
    CHECK(rel::rel_eq(A, B) <= 1.0);
  }
}

TEST_CASE("rel_bf and rel_af point the expected way") {
  // bf: the first operand lies before the second.
  CHECK(rel::rel_bf(crisp_interval(0, 1), crisp_interval(2, 3)) == 1.0);
  CHECK(rel::rel_bf(crisp_interval(2, 3), crisp_interval(0, 1)) == 0.0);
  // af: the first operand lies after the second; [2,3] is inside
  // After([0,1]) = (1,1,+inf,+inf).
  CHECK(rel::rel_af(crisp_interval(2, 3), crisp_interval(0, 1)) == 1.0);
  CHECK(rel::rel_af(crisp_interval(0, 1), crisp_interval(2, 3)) == 0.0);

  // bf/af duality on well-separated crisp intervals.
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> lo(0.0, 5.0);
  std::uniform_real_distribution<double> len(0.5, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double a0 = lo(rng), a1 = a0 + len(rng);
    const double b0 = a1 + 1.0 + lo(rng), b1 = b0 + len(rng);
    const FuzzyInterval A = crisp_interval(a0, a1);
    const FuzzyInterval B = crisp_interval(b0, b1);
    CHECK(rel::rel_bf(A, B) >= 0.99);
    CHECK(rel::rel_af(B, A) >= 0.99);
    CHECK(rel::rel_bf(B, A) <= 0.01);
    CHECK(rel::rel_af(A, B) <= 0.01);
  }
}

TEST_CASE("composed relations in their defining configurations") {
  rel::Config cfg;  // delta_min 0.1
  CHECK(rel::rel_mt(crisp_interval(0, 2), crisp_interval(2, 4), cfg) == 1.0);
  CHECK(rel::rel_dr(crisp_interval(2, 3), crisp_interval(0, 5), cfg) == 1.0);
  CHECK(rel::rel_ol(crisp_interval(0, 4), crisp_interval(2, 6), cfg) == 1.0);
  CHECK(rel::rel_st(crisp_interval(0, 2), crisp_interval(0, 5), cfg) == 1.0);
  CHECK(rel::rel_fin(crisp_interval(3, 5), crisp_interval(0, 5), cfg) == 1.0);
}

TEST_CASE("composed relations reject violating configurations") {
  rel::Config cfg;
  CHECK(rel::rel_mt(crisp_interval(0, 2), crisp_interval(3, 5), cfg) <= 0.01);
  CHECK(rel::rel_dr(crisp_interval(0, 6), crisp_interval(1, 5), cfg) <= 0.01);
  CHECK(rel::rel_ol(crisp_interval(4, 8), crisp_interval(0, 2), cfg) <= 0.01);
  CHECK(rel::rel_st(crisp_interval(1, 3), crisp_interval(0, 5), cfg) <= 0.01);
  CHECK(rel::rel_fin(crisp_interval(0, 2), crisp_interval(0, 5), cfg) <= 0.01);
}

TEST_CASE("relation outputs always live in [0,1]") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> dist(0.0, 15.0);
  rel::Config cfg;
  for (int trial = 0; trial < 150; ++trial) {
    double u[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    std::sort(u, u + 4);
    std::sort(v, v + 4);
    const FuzzyInterval A(u[0], u[1], u[2], u[3]);
    const FuzzyInterval B(v[0], v[1], v[2], v[3]);
    for (double value :
         {rel::rel_in(A, B, cfg), rel::rel_eq(A, B, cfg),
          rel::rel_bf(A, B, cfg), rel::rel_af(A, B, cfg),
          rel::rel_mt(A, B, cfg), rel::rel_st(A, B, cfg),
          rel::rel_dr(A, B, cfg), rel::rel_fin(A, B, cfg),
          rel::rel_ol(A, B, cfg)}) {
      CHECK(value >= 0.0);
      CHECK(value <= 1.0);
    }
  }
}

TEST_CASE("crisp Allen reduction suite") {
  fitl::verify::Options opt;
  const auto result = fitl::verify::crisp_allen_suite(opt);
  INFO(result.detail);
  CHECK(result.passed);
  CHECK(result.cases == 18);
}
