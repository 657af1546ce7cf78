#include "fitl/smooth.hpp"

#include <cmath>

namespace fitl::smooth {

namespace {

geom::GenTrapezoid<double> values_gen(const DiffInterval& itv) {
  return {itv.a.value, itv.b.value, itv.c.value, itv.d.value,
          itv.left_infinite, itv.right_infinite};
}

}  // namespace

DiffInterval constant_interval(const FuzzyInterval& itv) {
  return {DiffScalar(itv.a()), DiffScalar(itv.b()), DiffScalar(itv.c()),
          DiffScalar(itv.d()), itv.is_left_infinite(),
          itv.is_right_infinite()};
}

DiffScalar smooth_membership(const DiffInterval& itv, const DiffScalar& x,
                             const SmoothConfig& cfg, ad::Tape& tape) {
  const double av = itv.a.value, bv = itv.b.value;
  const double cv = itv.c.value, dv = itv.d.value;
  const double xv = x.value;
  const double beta = cfg.beta;
  const double fwd = membership(values_of(itv), xv);

  if (!itv.left_infinite && xv <= av) {
    // Left of the support: surrogate softplus(x - a).
    const double s = ad::sigmoid(beta * (xv - av));
    return tape.record(fwd, {{x, s}, {itv.a, -s}});
  }
  if (!itv.left_infinite && xv < bv) {
    // Rising ramp: the surrogate equals the crisp ramp (x - a) / (b - a).
    const double inv = 1.0 / (bv - av);
    return tape.record(fwd, {{x, inv},
                             {itv.a, (xv - bv) * inv * inv},
                             {itv.b, -(xv - av) * inv * inv}});
  }
  if (itv.right_infinite || xv <= cv) {
    // Plateau: surrogate softplus(max(b - x, x - c)); ties pick b - x.
    const double left_arg =
        itv.left_infinite ? -FuzzyInterval::kInf : bv - xv;
    const double right_arg =
        itv.right_infinite ? -FuzzyInterval::kInf : xv - cv;
    if (left_arg >= right_arg) {
      const double s = ad::sigmoid(beta * left_arg);
      return tape.record(fwd, {{x, -s}, {itv.b, s}});
    }
    const double s = ad::sigmoid(beta * right_arg);
    return tape.record(fwd, {{x, s}, {itv.c, -s}});
  }
  if (xv < dv) {
    // Falling ramp: crisp derivative of (x - d) / (c - d).
    const double inv = 1.0 / (cv - dv);
    return tape.record(fwd, {{x, inv},
                             {itv.c, -(xv - dv) * inv * inv},
                             {itv.d, (xv - cv) * inv * inv}});
  }
  // Right of the support: surrogate softplus(d - x).
  const double s = ad::sigmoid(beta * (dv - xv));
  return tape.record(fwd, {{x, -s}, {itv.d, s}});
}

DiffScalar smooth_rel_in(const DiffInterval& A, const DiffInterval& B,
                         const SmoothConfig& cfg, ad::Tape& tape,
                         double eps_duration) {
  if (A.left_infinite || A.right_infinite)
    throw std::invalid_argument(
        "smooth_rel_in: the contained operand must have finite duration");

  const double beta = cfg.beta;
  const double fwd =
      rel::contained_ratio(values_gen(A), values_gen(B), eps_duration);

  // Disjoint supports: couple the two facing edges.
  if (A.d.value <= B.a.value) {
    const double s = ad::sigmoid(beta * (A.d.value - B.a.value));
    return tape.record(fwd, {{A.d, s}, {B.a, -s}});
  }
  if (B.d.value <= A.a.value) {
    const double s = ad::sigmoid(beta * (B.d.value - A.a.value));
    return tape.record(fwd, {{B.d, s}, {A.a, -s}});
  }

  // A strictly inside B: surrogate softplus(a'-a + d-d'), dropping the term
  // of any infinite side of B.
  if (A.a.value > B.a.value && A.b.value > B.b.value &&
      A.c.value < B.c.value && A.d.value < B.d.value) {
    double arg = 0.0;
    if (!B.left_infinite) arg += B.a.value - A.a.value;
    if (!B.right_infinite) arg += A.d.value - B.d.value;
    const double s = ad::sigmoid(beta * arg);
    if (B.left_infinite)
      return tape.record(fwd, {{A.d, s}, {B.d, -s}});
    if (B.right_infinite)
      return tape.record(fwd, {{A.a, -s}, {B.a, s}});
    return tape.record(fwd, {{A.a, -s}, {B.a, s}, {A.d, s}, {B.d, -s}});
  }

  // Partial overlap: the analytic partials of |A ∩ B| / |A| are informative;
  // record the exact computation itself.
  return rel::contained_ratio(A, B, eps_duration);
}

DiffScalar t_norm(const DiffScalar& u, const DiffScalar& v, logic::TNorm norm) {
  switch (norm) {
    case logic::TNorm::kProduct:
      return u * v;
    case logic::TNorm::kMinimum:
      return ad::min(u, v);
  }
  throw std::logic_error("t_norm: unknown strategy");
}

DiffScalar negate(const DiffScalar& u) { return DiffScalar(1.0) - u; }

DiffScalar approx_eq(const DiffScalar& u, const DiffScalar& v) {
  return ad::exp(-ad::abs(u - v));
}

}  // namespace fitl::smooth
