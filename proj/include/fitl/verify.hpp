#ifndef FITL_VERIFY_HPP
#define FITL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fitl::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  int cases = 0;
  double max_error = 0.0;
  std::string detail;
};

struct Options {
  int area_cases = 1000;
  int gradient_cases = 200;
  int line_cases = 500;
  int rectangle_cases = 200;
  double grid_step = 1e-4;
  double param_range = 100.0;
  std::uint64_t seed = 1u;
  double area_tol = 1e-3;
  double line_tol = 1e-9;
  double grad_rel_tol = 1e-3;
  double grad_abs_floor = 1e-6;
  double fd_step = 1e-4;
  double delta_min = 0.1;
  double horizon = 100.0;
  unsigned threads = 0;  // 0 = hardware concurrency
  // Test hook: adds a bias to the closed-form area inside the oracle suite
  // so the suite's failure path can be exercised.
  double inject_area_bias = 0.0;
};

/// Closed-form intersection areas against trapezoidal-rule integration on
/// seeded random trapezoid pairs.
SuiteResult geometry_oracle_suite(const Options& opt);

/// The closed-form edge-line intersection against a generic 2x2 linear
/// solve, plus exactness of the shoelace formula on axis-aligned rectangles.
SuiteResult line_formula_suite(const Options& opt);
SuiteResult rectangle_shoelace_suite(const Options& opt);

/// Reverse-mode partials of the smooth operators against central finite
/// differences of the surrogate definitions, across the disjoint, nested and
/// partially overlapping regimes.
SuiteResult gradient_suite(const Options& opt);

/// Each of the nine relations on crisp, well-separated intervals: >= 0.99 in
/// its defining configuration, <= 0.01 in a violating one.
SuiteResult crisp_allen_suite(const Options& opt);

/// With beta = 1/horizon the membership gradient stays above 1e-6 within one
/// horizon of the interval; with beta = 1 the same gradient underflows to
/// exactly zero in 32-bit arithmetic.
SuiteResult nonvanishing_gradient_suite(const Options& opt);

std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace fitl::verify

#endif  // FITL_VERIFY_HPP
