#ifndef FITL_RELATIONS_HPP
#define FITL_RELATIONS_HPP

#include "fitl/geometry.hpp"
#include "fitl/interval.hpp"
#include "fitl/logic.hpp"

// Fuzzy temporal relations grounded as containment ratios between trapezoid
// areas: "A in B" is |A ∩ B| / |A|, and the Allen-style relations are
// compositions of "in" with the Before/After/Start/End operators.
//
// Directionality: rel_bf(X,Y) is high when X lies before Y, and rel_af(X,Y)
// is high when X lies after Y, i.e. rel_af(X,Y) = rel_in(X, after(Y)). This
// is the reading under which dr/fin ("starts after, ends before") compose
// correctly.

namespace fitl::rel {

struct Config {
  double delta_min = 0.1;
  double eps_duration = 1e-9;  // division guard for degenerate point intervals
  logic::TNorm tnorm = logic::TNorm::kProduct;
};

/// Containment ratio on generic trapezoids: clamp(|A ∩ B| / max(|A|, eps)).
/// A must be finite; B may be semi-infinite.
template <class T>
T contained_ratio(const geom::GenTrapezoid<T>& A, const geom::GenTrapezoid<T>& B,
                  double eps_duration) {
  if (A.left_infinite || A.right_infinite)
    throw std::invalid_argument(
        "rel_in: the contained operand must have finite duration");
  T area = geom::overlap_area(A, B);
  T denom = geom::vmax(geom::duration_op(A), T(eps_duration));
  T ratio = area / denom;
  if (geom::val(ratio) < 0.0) return T(0.0);
  if (geom::val(ratio) > 1.0) return T(1.0);
  return ratio;
}

// Relation compositions over an operations policy. A policy supplies the
// scalar/interval types, the containment relation, the conjunction, and the
// four interval operators; the crisp and the differentiable evaluation paths
// instantiate the same compositions.
template <class Ops>
struct Relations {
  using S = typename Ops::Scalar;
  using I = typename Ops::Interval;

  const Ops& ops;

  S in(const I& A, const I& B) const { return ops.contained(A, B); }

  S eq(const I& A, const I& B) const {
    return ops.conj(ops.contained(A, B), ops.contained(B, A));
  }

  S bf(const I& A, const I& B) const {
    return ops.contained(A, ops.before(B));
  }

  S af(const I& A, const I& B) const { return ops.contained(A, ops.after(B)); }

  S mt(const I& A, const I& B) const { return eq(ops.end(A), ops.start(B)); }

  S st(const I& A, const I& B) const {
    return ops.conj(eq(ops.start(A), ops.start(B)),
                    bf(ops.end(A), ops.end(B)));
  }

  S dr(const I& A, const I& B) const {
    return ops.conj(af(ops.start(A), ops.start(B)),
                    bf(ops.end(A), ops.end(B)));
  }

  S fin(const I& A, const I& B) const {
    return ops.conj(af(ops.start(A), ops.start(B)),
                    eq(ops.end(A), ops.end(B)));
  }

  S ol(const I& A, const I& B) const {
    S f1 = bf(ops.start(A), ops.start(B));
    S f2 = bf(ops.start(B), ops.end(A));
    S f3 = bf(ops.end(A), ops.end(B));
    return ops.conj(ops.conj(f1, f2), f3);
  }
};

double rel_in(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_eq(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_bf(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_af(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_mt(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_st(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_dr(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});
double rel_fin(const FuzzyInterval& A, const FuzzyInterval& B,
               const Config& cfg = {});
double rel_ol(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg = {});

}  // namespace fitl::rel

#endif  // FITL_RELATIONS_HPP
