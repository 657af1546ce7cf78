#ifndef FITL_LOGIC_HPP
#define FITL_LOGIC_HPP

#include <span>
#include <string>

#include "fitl/interval.hpp"

namespace fitl::logic {

// Truth degrees are plain doubles in [0,1].
using TruthValue = double;

/// Conjunction strategy. Product is the default used throughout; minimum
/// (Goedel) is available as an alternative.
enum class TNorm { kProduct, kMinimum };

TruthValue t_norm(TruthValue u, TruthValue v, TNorm norm = TNorm::kProduct);

inline TruthValue negate(TruthValue u) { return 1.0 - u; }

/// Smooth equality between two reals: exp(-|u - v|), 1 iff u == v.
TruthValue approx_eq(double u, double v);

/// Universal quantification over a finite batch: the product of the batch
/// truth values (empty batch gives 1).
TruthValue aggregate_forall(std::span<const TruthValue> vs);

// Derived connectives, consistent with product t-norm / standard negation.
inline TruthValue t_conorm(TruthValue u, TruthValue v) {
  return 1.0 - (1.0 - u) * (1.0 - v);
}
inline TruthValue implies(TruthValue u, TruthValue v) {
  return 1.0 - u + u * v;
}

/// An event: an activation interval plus the degree to which the event
/// happened at all.
struct Event {
  FuzzyInterval interval;
  TruthValue happ = 1.0;
  std::string label;

  Event(FuzzyInterval itv, TruthValue h, std::string name = "");
};

/// Whether the event is running at time point i: membership at i, weighted
/// by the happening degree through the t-norm.
TruthValue active(const Event& e, double i, TNorm norm = TNorm::kProduct);

inline TruthValue happ(const Event& e) { return e.happ; }

inline TruthValue membership_at(const FuzzyInterval& itv, double x) {
  return membership(itv, x);
}
inline TruthValue membership_at(const Event& e, double x) {
  return membership(e.interval, x);
}

}  // namespace fitl::logic

#endif  // FITL_LOGIC_HPP
