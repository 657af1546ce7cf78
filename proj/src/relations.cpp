#include "fitl/relations.hpp"

namespace fitl::rel {

namespace {

struct CrispOps {
  using Scalar = double;
  using Interval = geom::GenTrapezoid<double>;

  Config cfg;

  Scalar contained(const Interval& A, const Interval& B) const {
    return contained_ratio(A, B, cfg.eps_duration);
  }
  Scalar conj(Scalar u, Scalar v) const {
    return logic::t_norm(u, v, cfg.tnorm);
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

template <class Fn>
double with_relations(const FuzzyInterval& A, const FuzzyInterval& B,
                      const Config& cfg, Fn fn) {
  CrispOps ops{cfg};
  Relations<CrispOps> rels{ops};
  const auto ga = geom::to_gen(A);
  const auto gb = geom::to_gen(B);
  return fn(rels, ga, gb);
}

}  // namespace

double rel_in(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.in(a, b);
  });
}

double rel_eq(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.eq(a, b);
  });
}

double rel_bf(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.bf(a, b);
  });
}

double rel_af(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.af(a, b);
  });
}

double rel_mt(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.mt(a, b);
  });
}

double rel_st(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.st(a, b);
  });
}

double rel_dr(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.dr(a, b);
  });
}

double rel_fin(const FuzzyInterval& A, const FuzzyInterval& B,
               const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.fin(a, b);
  });
}

double rel_ol(const FuzzyInterval& A, const FuzzyInterval& B,
              const Config& cfg) {
  return with_relations(A, B, cfg, [](const auto& r, const auto& a, const auto& b) {
    return r.ol(a, b);
  });
}

}  // namespace fitl::rel
