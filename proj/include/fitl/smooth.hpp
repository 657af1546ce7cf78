#ifndef FITL_SMOOTH_HPP
#define FITL_SMOOTH_HPP

#include "fitl/autodiff.hpp"
#include "fitl/relations.hpp"

// Custom differentiable operators: the forward pass returns the exact crisp
// value, while the recorded partial derivatives come from a smooth softplus
// surrogate, so gradients do not vanish on the flat regions of the
// membership function or when two trapezoids are disjoint / nested.

namespace fitl::smooth {

using DiffScalar = ad::DiffScalar;
using DiffInterval = geom::GenTrapezoid<DiffScalar>;

struct SmoothConfig {
  double beta = 1.0;          // softplus temperature
  double trace_length = 1.0;  // largest time difference in the data

  /// The recommended configuration: beta = 1/T keeps surrogate gradients
  /// alive across the whole trace.
  static SmoothConfig for_horizon(double T) { return {1.0 / T, T}; }
};

DiffInterval constant_interval(const FuzzyInterval& itv);

inline FuzzyInterval values_of(const DiffInterval& itv) {
  return FuzzyInterval(itv.a.value, itv.b.value, itv.c.value, itv.d.value);
}

/// Membership with exact forward value (piecewise-linear trapezoid) and
/// backward partials taken from the smooth surrogate: softplus(x - a) left of
/// the support, softplus(max(b - x, x - c)) on the plateau and
/// softplus(d - x) right of the support; on the ramps the surrogate equals
/// the crisp function, so the exact ramp derivatives are used.
DiffScalar smooth_membership(const DiffInterval& itv, const DiffScalar& x,
                             const SmoothConfig& cfg, ad::Tape& tape);

/// Containment ratio with exact forward value. Backward partials: when the
/// supports are disjoint the surrogate softplus couples the two facing edges;
/// when A lies strictly inside B the surrogate is softplus(a'-a + d-d')
/// restricted to B's finite sides; otherwise the analytic partials of
/// |A∩B| / |A| are recorded.
DiffScalar smooth_rel_in(const DiffInterval& A, const DiffInterval& B,
                         const SmoothConfig& cfg, ad::Tape& tape,
                         double eps_duration = 1e-9);

// Fuzzy connectives on tape scalars.
DiffScalar t_norm(const DiffScalar& u, const DiffScalar& v,
                  logic::TNorm norm = logic::TNorm::kProduct);
DiffScalar negate(const DiffScalar& u);
DiffScalar approx_eq(const DiffScalar& u, const DiffScalar& v);

/// Policy wiring the smooth containment into the shared relation
/// compositions.
struct SmoothOps {
  using Scalar = DiffScalar;
  using Interval = DiffInterval;

  ad::Tape& tape;
  SmoothConfig smooth;
  rel::Config cfg;

  Scalar contained(const Interval& A, const Interval& B) const {
    return smooth_rel_in(A, B, smooth, tape, cfg.eps_duration);
  }
  Scalar conj(const Scalar& u, const Scalar& v) const {
    return t_norm(u, v, cfg.tnorm);
  }
  Interval before(const Interval& t) const { return geom::before_op(t); }
  Interval after(const Interval& t) const { return geom::after_op(t); }
  Interval start(const Interval& t) const {
    return geom::start_op(t, cfg.delta_min);
  }
  Interval end(const Interval& t) const {
    return geom::end_op(t, cfg.delta_min);
  }
};

using SmoothRelations = rel::Relations<SmoothOps>;

}  // namespace fitl::smooth

#endif  // FITL_SMOOTH_HPP
