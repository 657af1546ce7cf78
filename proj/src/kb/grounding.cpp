#include "fitl/kb/grounding.hpp"

#include <stdexcept>

namespace fitl::kb {

using ad::DiffScalar;
using smooth::DiffInterval;

ParamLayout layout_of(const Program& program) {
  ParamLayout layout;
  for (const auto& ev : program.events) {
    if (!ev.trainable) continue;
    layout.entries.push_back({ev.name, true, layout.size});
    layout.size += 5;
  }
  for (const auto& sc : program.scalars) {
    layout.entries.push_back({sc.name, false, layout.size});
    layout.size += 1;
  }
  return layout;
}

std::vector<double> initial_theta(const Program& program) {
  std::vector<double> theta;
  for (const auto& ev : program.events) {
    if (!ev.trainable) continue;
    theta.insert(theta.end(), ev.logits.begin(), ev.logits.end());
  }
  for (const auto& sc : program.scalars) theta.push_back(sc.init);
  return theta;
}

Realized realize(const Program& program, std::span<const double> theta,
                 ad::Tape& tape) {
  Realized out;
  std::size_t offset = 0;
  auto next_var = [&]() {
    if (offset >= theta.size())
      throw std::invalid_argument("realize: parameter vector too short");
    DiffScalar v = tape.variable(theta[offset]);
    ++offset;
    out.params.push_back(v);
    return v;
  };

  for (const auto& ev : program.events) {
    if (ev.trainable) {
      DiffScalar l0 = next_var();
      DiffScalar l1 = next_var();
      DiffScalar l2 = next_var();
      DiffScalar l3 = next_var();
      DiffScalar l4 = next_var();
      DiffScalar a = ad::softplus(l1, 1.0);
      DiffScalar b = a + ad::softplus(l2, 1.0);
      DiffScalar c = b + ad::softplus(l3, 1.0);
      DiffScalar d = c + ad::softplus(l4, 1.0);
      out.intervals.emplace(ev.name, DiffInterval{a, b, c, d, false, false});
      out.happs.emplace(ev.name, ad::sigmoid(l0));
    } else {
      out.intervals.emplace(
          ev.name, smooth::constant_interval(
                       FuzzyInterval::finite(ev.a, ev.b, ev.c, ev.d)));
      out.happs.emplace(ev.name, DiffScalar(ev.happ));
    }
  }
  for (const auto& sc : program.scalars)
    out.scalars.emplace(sc.name, next_var());
  if (offset != theta.size())
    throw std::invalid_argument("realize: parameter vector too long");
  return out;
}

DiffInterval eval_term(const Term& term, const Realized& realized,
                       const EvalConfig& cfg) {
  switch (term.op) {
    case Term::Op::kRef:
      return realized.intervals.at(term.name);
    case Term::Op::kStart:
      return geom::start_op(eval_term(*term.arg, realized, cfg),
                            cfg.relation.delta_min);
    case Term::Op::kEnd:
      return geom::end_op(eval_term(*term.arg, realized, cfg),
                          cfg.relation.delta_min);
    case Term::Op::kBefore:
      return geom::before_op(eval_term(*term.arg, realized, cfg));
    case Term::Op::kAfter:
      return geom::after_op(eval_term(*term.arg, realized, cfg));
  }
  throw std::logic_error("unknown term op");
}

namespace {

DiffScalar eval_formula(const Formula& f, const Realized& realized,
                        ad::Tape& tape, const EvalConfig& cfg) {
  switch (f.kind) {
    case Formula::Kind::kRelation: {
      smooth::SmoothOps ops{tape, cfg.smooth, cfg.relation};
      smooth::SmoothRelations rels{ops};
      const DiffInterval lhs = eval_term(*f.lhs, realized, cfg);
      const DiffInterval rhs = eval_term(*f.rhs, realized, cfg);
      switch (f.relation) {
        case RelationKind::kBf: return rels.bf(lhs, rhs);
        case RelationKind::kAf: return rels.af(lhs, rhs);
        case RelationKind::kMt: return rels.mt(lhs, rhs);
        case RelationKind::kOl: return rels.ol(lhs, rhs);
        case RelationKind::kSt: return rels.st(lhs, rhs);
        case RelationKind::kDr: return rels.dr(lhs, rhs);
        case RelationKind::kFin: return rels.fin(lhs, rhs);
        case RelationKind::kEq: return rels.eq(lhs, rhs);
        case RelationKind::kIn: return rels.in(lhs, rhs);
      }
      throw std::logic_error("unknown relation kind");
    }
    case Formula::Kind::kDurationApprox: {
      const DiffInterval itv = realized.intervals.at(f.event_name);
      DiffScalar dur = geom::duration_op(itv);
      return smooth::approx_eq(dur, DiffScalar(f.target));
    }
    case Formula::Kind::kMembershipAt: {
      const DiffInterval itv = eval_term(*f.lhs, realized, cfg);
      const DiffScalar t = f.time.is_ref ? realized.scalars.at(f.time.name)
                                         : DiffScalar(f.time.value);
      return smooth::smooth_membership(itv, t, cfg.smooth, tape);
    }
    case Formula::Kind::kHapp:
      return realized.happs.at(f.event_name);
    case Formula::Kind::kNot:
      return smooth::negate(
          eval_formula(*f.child1, realized, tape, cfg));
    case Formula::Kind::kAnd: {
      DiffScalar u = eval_formula(*f.child1, realized, tape, cfg);
      DiffScalar v = eval_formula(*f.child2, realized, tape, cfg);
      return smooth::t_norm(u, v, cfg.relation.tnorm);
    }
  }
  throw std::logic_error("unknown formula kind");
}

}  // namespace

Evaluation evaluate(const Program& program, const Realized& realized,
                    ad::Tape& tape, const EvalConfig& cfg) {
  Evaluation out;
  out.satisfaction = DiffScalar(1.0);
  bool first = true;
  for (const auto& f : program.constraints) {
    DiffScalar v = eval_formula(*f, realized, tape, cfg);
    out.constraints.push_back(v);
    out.satisfaction = first
                           ? v
                           : smooth::t_norm(out.satisfaction, v,
                                            cfg.relation.tnorm);
    first = false;
  }
  return out;
}

}  // namespace fitl::kb
