#include "fitl/verify.hpp"

#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "fitl/geometry.hpp"
#include "fitl/relations.hpp"
#include "fitl/smooth.hpp"

namespace fitl::verify {

namespace {

struct Pair {
  FuzzyInterval a;
  FuzzyInterval b;
  Pair(const FuzzyInterval& x, const FuzzyInterval& y) : a(x), b(y) {}
};

FuzzyInterval random_trapezoid(std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> dist(0.0, range);
  double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
  std::sort(v, v + 4);
  return FuzzyInterval::finite(v[0], v[1], v[2], v[3]);
}

unsigned worker_count(const Options& opt) {
  if (opt.threads > 0) return opt.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// --- surrogate forward definitions (finite differencing targets) ---
// These restate the smooth surrogates as plain functions; the gradient suite
// differentiates them numerically and compares with the tape partials.

double surrogate_membership(double a, double b, double c, double d, double x,
                            double beta) {
  if (x <= a) return ad::softplus(x - a, beta);
  if (x < b) return (x - a) / (b - a);
  if (x <= c) return ad::softplus(std::max(b - x, x - c), beta);
  if (x < d) return (x - d) / (c - d);
  return ad::softplus(d - x, beta);
}

double surrogate_rel_in(const double* p, double beta) {
  const double a = p[0], b = p[1], c = p[2], d = p[3];
  const double a2 = p[4], b2 = p[5], c2 = p[6], d2 = p[7];
  if (d <= a2) return ad::softplus(d - a2, beta);
  if (d2 <= a) return ad::softplus(d2 - a, beta);
  if (a > a2 && b > b2 && c < c2 && d < d2)
    return ad::softplus((a2 - a) + (d - d2), beta);
  return rel::rel_in(FuzzyInterval(a, b, c, d), FuzzyInterval(a2, b2, c2, d2));
}

bool close_enough(double got, double want, double rel_tol, double abs_floor,
                  double* err_out) {
  const double diff = std::abs(got - want);
  const double bound = std::max(abs_floor, rel_tol * std::abs(want));
  if (err_out) *err_out = diff;
  return diff <= bound;
}

}  // namespace

SuiteResult geometry_oracle_suite(const Options& opt) {
  SuiteResult result;
  result.name = "geometry-oracle";
  result.cases = opt.area_cases;

  std::mt19937_64 rng(opt.seed);
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(opt.area_cases));
  for (int i = 0; i < opt.area_cases; ++i)
    pairs.emplace_back(random_trapezoid(rng, opt.param_range),
                       random_trapezoid(rng, opt.param_range));

  const unsigned workers = worker_count(opt);
  auto eval_range = [&](std::size_t begin, std::size_t end) {
    double max_err = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double closed = geom::intersection_area(pairs[i].a, pairs[i].b) +
                            opt.inject_area_bias;
      const double numeric =
          geom::oracle_intersection_area(pairs[i].a, pairs[i].b, opt.grid_step);
      max_err = std::max(max_err, std::abs(closed - numeric));
    }
    return max_err;
  };

  double max_err = 0.0;
  if (workers <= 1 || pairs.size() < 2) {
    max_err = eval_range(0, pairs.size());
  } else {
    std::vector<std::future<double>> futures;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < pairs.size(); begin += chunk)
      futures.push_back(std::async(std::launch::async, eval_range, begin,
                                   std::min(begin + chunk, pairs.size())));
    for (auto& f : futures) max_err = std::max(max_err, f.get());
  }

  result.max_error = max_err;
  result.passed = max_err <= opt.area_tol;
  std::ostringstream os;
  os << "max |closed-form - integration| = " << max_err
     << " (tol " << opt.area_tol << ")";
  result.detail = os.str();
  return result;
}

SuiteResult line_formula_suite(const Options& opt) {
  SuiteResult result;
  result.name = "line-intersection";
  result.cases = opt.line_cases;

  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> pos(0.0, opt.param_range);
  std::uniform_real_distribution<double> slope(0.1, 10.0);
  std::bernoulli_distribution flip(0.5);

  double max_err = 0.0;
  int done = 0;
  while (done < opt.line_cases) {
    const double p0 = pos(rng);
    const double q0 = pos(rng);
    const double dp = slope(rng) * (flip(rng) ? 1.0 : -1.0);
    const double dq = slope(rng) * (flip(rng) ? 1.0 : -1.0);
    if (std::abs(dp - dq) < 0.01) continue;  // skip near-parallel pairs
    const geom::EdgeLine l1{p0, p0 + dp};
    const geom::EdgeLine l2{q0, q0 + dq};
    const auto closed = geom::line_intersection(l1, l2);
    if (!closed) continue;

    // Generic route: write each line as x - (p1 - p0) y = p0 and solve the
    // 2x2 system by Cramer's rule.
    const double b1 = -dp, b2 = -dq;
    const double det = b2 - b1;
    const double x = (p0 * b2 - q0 * b1) / det;
    const double y = (q0 - p0) / det;

    max_err = std::max({max_err, std::abs(closed->x - x),
                        std::abs(closed->y - y)});
    ++done;
  }

  result.max_error = max_err;
  result.passed = max_err <= opt.line_tol;
  std::ostringstream os;
  os << "max |closed-form - generic solve| = " << max_err << " (tol "
     << opt.line_tol << ")";
  result.detail = os.str();
  return result;
}

SuiteResult rectangle_shoelace_suite(const Options& opt) {
  SuiteResult result;
  result.name = "rectangle-shoelace";
  result.cases = opt.rectangle_cases;

  // Dyadic coordinates keep every product exact, so the shoelace result must
  // equal width * height bitwise.
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_int_distribution<int> xi(0, 6400);
  std::uniform_int_distribution<int> yi(0, 64);

  int mismatches = 0;
  for (int i = 0; i < opt.rectangle_cases; ++i) {
    int x0 = xi(rng), x1 = xi(rng);
    if (x0 == x1) x1 = x0 + 1;
    if (x0 > x1) std::swap(x0, x1);
    int y0 = yi(rng), y1 = yi(rng);
    if (y0 == y1) y1 = y0 + (y0 < 64 ? 1 : -1);
    if (y0 > y1) std::swap(y0, y1);
    const double gx0 = x0 / 64.0, gx1 = x1 / 64.0;
    const double gy0 = y0 / 64.0, gy1 = y1 / 64.0;
    const std::vector<geom::PlanePoint> rect = {
        {gx0, gy0}, {gx1, gy0}, {gx1, gy1}, {gx0, gy1}};
    const double area = geom::shoelace_area(rect);
    const double expected = (gx1 - gx0) * (gy1 - gy0);
    if (area != expected) ++mismatches;
  }

  result.max_error = mismatches;
  result.passed = mismatches == 0;
  std::ostringstream os;
  os << mismatches << " rectangles deviated from width*height";
  result.detail = os.str();
  return result;
}

namespace {

struct GradCase {
  std::vector<double> params;
  bool is_membership = false;
};

// Park eight pairwise well-separated values: gaps >= 0.5 keep every finite
// difference step inside a single smooth piece of the area function.
std::vector<double> spread_values(std::mt19937_64& rng, std::size_t n,
                                  double origin_range) {
  std::uniform_real_distribution<double> gap(0.5, 3.0);
  std::uniform_real_distribution<double> origin(0.0, origin_range);
  std::vector<double> vs(n);
  double acc = origin(rng);
  for (std::size_t i = 0; i < n; ++i) {
    acc += gap(rng);
    vs[i] = acc;
  }
  return vs;
}

std::vector<GradCase> gradient_cases(const Options& opt) {
  std::mt19937_64 rng(opt.seed + 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<GradCase> cases;
  cases.reserve(static_cast<std::size_t>(opt.gradient_cases));

  for (int i = 0; i < opt.gradient_cases; ++i) {
    GradCase gc;
    const int kind = i % 8;
    if (kind < 4) {
      // Membership: one case per region (left, ramp, plateau, right), with x
      // held away from region boundaries and from the plateau midpoint.
      gc.is_membership = true;
      auto v = spread_values(rng, 4, 10.0);
      const double a = v[0], b = v[1], c = v[2], d = v[3];
      double x = 0.0;
      const double m = 0.05;  // margin
      switch (kind) {
        case 0: x = a - 0.1 - 5.0 * unit(rng); break;
        case 1: x = a + m + (b - a - 2 * m) * unit(rng); break;
        case 2: {
          const double mid = (b + c) / 2.0;
          const bool left_half = unit(rng) < 0.5;
          x = left_half ? b + m + (mid - b - 2 * m) * unit(rng)
                        : mid + m + (c - mid - 2 * m) * unit(rng);
          break;
        }
        default: x = d + 0.1 + 5.0 * unit(rng); break;
      }
      gc.params = {a, b, c, d, x};
    } else {
      auto v = spread_values(rng, 8, 10.0);
      switch (kind) {
        case 4:  // disjoint, A left of B
          gc.params = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
          break;
        case 5:  // disjoint, B left of A
          gc.params = {v[4], v[5], v[6], v[7], v[0], v[1], v[2], v[3]};
          break;
        case 6:  // A strictly inside B
          gc.params = {v[2], v[3], v[4], v[5], v[0], v[1], v[6], v[7]};
          break;
        default:  // partial overlap
          gc.params = {v[0], v[1], v[3], v[5], v[2], v[4], v[6], v[7]};
          break;
      }
    }
    cases.push_back(std::move(gc));
  }
  return cases;
}

}  // namespace

SuiteResult gradient_suite(const Options& opt) {
  SuiteResult result;
  result.name = "gradient-check";
  result.cases = opt.gradient_cases;

  const smooth::SmoothConfig cfg = smooth::SmoothConfig::for_horizon(opt.horizon);
  const double h = opt.fd_step;
  double max_err = 0.0;
  int failures = 0;
  std::string first_failure;

  for (const auto& gc : gradient_cases(opt)) {
    const std::size_t n = gc.params.size();
    // Reverse-mode partials.
    ad::Tape tape;
    std::vector<ad::DiffScalar> vars;
    vars.reserve(n);
    for (double p : gc.params) vars.push_back(tape.variable(p));
    ad::DiffScalar out;
    if (gc.is_membership) {
      smooth::DiffInterval itv{vars[0], vars[1], vars[2], vars[3], false,
                               false};
      out = smooth::smooth_membership(itv, vars[4], cfg, tape);
    } else {
      smooth::DiffInterval A{vars[0], vars[1], vars[2], vars[3], false, false};
      smooth::DiffInterval B{vars[4], vars[5], vars[6], vars[7], false, false};
      out = smooth::smooth_rel_in(A, B, cfg, tape);
    }
    tape.backward(out);

    // Central finite differences of the surrogate.
    auto surrogate = [&](const std::vector<double>& p) {
      if (gc.is_membership)
        return surrogate_membership(p[0], p[1], p[2], p[3], p[4], cfg.beta);
      return surrogate_rel_in(p.data(), cfg.beta);
    };
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> plus = gc.params;
      std::vector<double> minus = gc.params;
      plus[i] += h;
      minus[i] -= h;
      const double fd = (surrogate(plus) - surrogate(minus)) / (2.0 * h);
      double err = 0.0;
      if (!close_enough(vars[i].adjoint(), fd, opt.grad_rel_tol,
                        opt.grad_abs_floor, &err)) {
        ++failures;
        if (first_failure.empty()) {
          std::ostringstream os;
          os << (gc.is_membership ? "membership" : "rel_in") << " param " << i
             << ": tape " << vars[i].adjoint() << " vs fd " << fd;
          first_failure = os.str();
        }
      }
      max_err = std::max(max_err, err);
    }
  }

  result.max_error = max_err;
  result.passed = failures == 0;
  std::ostringstream os;
  os << failures << " partials out of tolerance";
  if (!first_failure.empty()) os << " (first: " << first_failure << ")";
  result.detail = os.str();
  return result;
}

SuiteResult crisp_allen_suite(const Options& opt) {
  SuiteResult result;
  result.name = "crisp-allen";

  rel::Config cfg;
  cfg.delta_min = opt.delta_min;
  auto crisp = [](double i, double j) { return crisp_interval(i, j); };

  struct Check {
    const char* what;
    double value;
    bool defining;
  };
  std::vector<Check> checks = {
      {"in", rel::rel_in(crisp(2, 4), crisp(1, 5), cfg), true},
      {"in-violated", rel::rel_in(crisp(6, 8), crisp(1, 5), cfg), false},
      {"eq", rel::rel_eq(crisp(1, 3), crisp(1, 3), cfg), true},
      {"eq-violated", rel::rel_eq(crisp(1, 3), crisp(5, 7), cfg), false},
      {"bf", rel::rel_bf(crisp(0, 1), crisp(2, 3), cfg), true},
      {"bf-violated", rel::rel_bf(crisp(2, 3), crisp(0, 1), cfg), false},
      {"af", rel::rel_af(crisp(2, 3), crisp(0, 1), cfg), true},
      {"af-violated", rel::rel_af(crisp(0, 1), crisp(2, 3), cfg), false},
      {"mt", rel::rel_mt(crisp(0, 2), crisp(2, 4), cfg), true},
      {"mt-violated", rel::rel_mt(crisp(0, 2), crisp(3, 5), cfg), false},
      {"st", rel::rel_st(crisp(0, 2), crisp(0, 5), cfg), true},
      {"st-violated", rel::rel_st(crisp(1, 3), crisp(0, 5), cfg), false},
      {"dr", rel::rel_dr(crisp(2, 3), crisp(0, 5), cfg), true},
      {"dr-violated", rel::rel_dr(crisp(0, 6), crisp(1, 5), cfg), false},
      {"fin", rel::rel_fin(crisp(3, 5), crisp(0, 5), cfg), true},
      {"fin-violated", rel::rel_fin(crisp(0, 2), crisp(0, 5), cfg), false},
      {"ol", rel::rel_ol(crisp(0, 4), crisp(2, 6), cfg), true},
      {"ol-violated", rel::rel_ol(crisp(4, 8), crisp(0, 2), cfg), false},
  };

  result.cases = static_cast<int>(checks.size());
  int failures = 0;
  std::ostringstream os;
  for (const auto& check : checks) {
    const bool ok =
        check.defining ? check.value >= 0.99 : check.value <= 0.01;
    if (!ok) {
      ++failures;
      os << (failures > 1 ? "; " : "") << check.what << "=" << check.value;
    }
  }
  result.passed = failures == 0;
  result.max_error = failures;
  result.detail = failures == 0 ? "all 18 directed checks hold" : os.str();
  return result;
}

SuiteResult nonvanishing_gradient_suite(const Options& opt) {
  SuiteResult result;
  result.name = "nonvanishing-gradient";

  const double T = opt.horizon;
  const smooth::SmoothConfig cfg = smooth::SmoothConfig::for_horizon(T);
  const FuzzyInterval itv = FuzzyInterval::finite(0.0, 1.0, 2.0, 3.0);

  int failures = 0;
  double min_abs = FuzzyInterval::kInf;
  int cases = 0;
  for (double x = itv.a() - T; x <= itv.d() + T; x += T / 200.0) {
    ad::Tape tape;
    ad::DiffScalar xs = tape.variable(x);
    ad::DiffScalar y = smooth::smooth_membership(smooth::constant_interval(itv),
                                                 xs, cfg, tape);
    tape.backward(y);
    const double g = std::abs(xs.adjoint());
    min_abs = std::min(min_abs, g);
    if (!(g > 1e-6)) ++failures;
    ++cases;
  }
  result.cases = cases;

  // The float32 demonstration: at distance T from the edge, a unit-beta
  // sigmoid underflows to exactly zero while beta = 1/T stays finite.
  const auto f32_sigmoid = [](float arg) {
    return 1.0f / (1.0f + std::exp(-arg));
  };
  const float dead = f32_sigmoid(-1.0f * static_cast<float>(T));
  const float alive = f32_sigmoid(-static_cast<float>(1.0 / T) *
                                  static_cast<float>(T));
  if (dead != 0.0f) ++failures;
  if (!(alive > 1e-6f)) ++failures;

  result.passed = failures == 0;
  result.max_error = min_abs;
  std::ostringstream os;
  os << "min |d/dx| = " << min_abs << " within distance " << T
     << "; float32 beta=1 gradient at distance " << T << " is " << dead;
  result.detail = os.str();
  return result;
}

std::vector<SuiteResult> run_all(const Options& opt) {
  return {
      geometry_oracle_suite(opt),  line_formula_suite(opt),
      rectangle_shoelace_suite(opt), gradient_suite(opt),
      crisp_allen_suite(opt),      nonvanishing_gradient_suite(opt),
  };
}

}  // namespace fitl::verify
