#include "fitl/logic.hpp"

#include <cmath>
#include <stdexcept>

namespace fitl::logic {

TruthValue t_norm(TruthValue u, TruthValue v, TNorm norm) {
  switch (norm) {
    case TNorm::kProduct:
      return u * v;
    case TNorm::kMinimum:
      return std::min(u, v);
  }
  throw std::logic_error("t_norm: unknown strategy");
}

TruthValue approx_eq(double u, double v) { return std::exp(-std::abs(u - v)); }

TruthValue aggregate_forall(std::span<const TruthValue> vs) {
  TruthValue prod = 1.0;
  for (TruthValue v : vs) prod *= v;
  return prod;
}

Event::Event(FuzzyInterval itv, TruthValue h, std::string name)
    : interval(itv), happ(h), label(std::move(name)) {
  if (!(h >= 0.0 && h <= 1.0))
    throw std::invalid_argument("event: happ degree must lie in [0,1]");
}

TruthValue active(const Event& e, double i, TNorm norm) {
  return t_norm(membership(e.interval, i), e.happ, norm);
}

}  // namespace fitl::logic
