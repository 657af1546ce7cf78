#include "fitl/kb/trainer.hpp"

#include <cmath>

namespace fitl::kb {

namespace {

EvalConfig eval_config(const Program& program, const TrainConfig& cfg,
                       double* horizon_out) {
  const double horizon = program.horizon.value_or(cfg.default_horizon);
  const double beta = cfg.beta_override.value_or(1.0 / horizon);
  if (horizon_out) *horizon_out = horizon;
  EvalConfig ec;
  ec.smooth = smooth::SmoothConfig{beta, horizon};
  ec.relation = rel::Config{cfg.delta_min, 1e-9, cfg.tnorm};
  return ec;
}

StepRecord make_record(int step, const Program& program,
                       const Evaluation& eval) {
  StepRecord rec;
  rec.step = step;
  rec.satisfaction = eval.satisfaction.value;
  rec.loss = 1.0 - rec.satisfaction;
  rec.constraint_values.reserve(eval.constraints.size());
  for (std::size_t i = 0; i < eval.constraints.size(); ++i) {
    const double v = eval.constraints[i].value;
    if (!std::isfinite(v))
      throw TrainError("constraint '" + to_text(*program.constraints[i]) +
                       "' produced a non-finite value at step " +
                       std::to_string(step));
    rec.constraint_values.push_back(v);
  }
  if (!std::isfinite(rec.satisfaction))
    throw TrainError("satisfaction became non-finite at step " +
                     std::to_string(step));
  return rec;
}

void collect_finals(const Program& program, const Realized& realized,
                    TrainRun& run) {
  for (const auto& ev : program.events) {
    const auto& itv = realized.intervals.at(ev.name);
    run.events.push_back({ev.name, ev.trainable, smooth::values_of(itv),
                          realized.happs.at(ev.name).value});
  }
  for (const auto& sc : program.scalars)
    run.scalars.emplace_back(sc.name, realized.scalars.at(sc.name).value);
}

}  // namespace

void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state, const TrainConfig& cfg) {
  if (params.size() != grads.size() || params.size() != state.m.size())
    throw std::invalid_argument("adam_step: size mismatch");
  ++state.step;
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * grads[i];
    state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * grads[i] * grads[i];
    const double m_hat = state.m[i] / bc1;
    const double v_hat = state.v[i] / bc2;
    params[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
  }
}

StepRecord evaluate_initial(const Program& program, const TrainConfig& cfg) {
  const EvalConfig ec = eval_config(program, cfg, nullptr);
  ad::Tape tape;
  const std::vector<double> theta = initial_theta(program);
  const Realized realized = realize(program, theta, tape);
  const Evaluation eval = evaluate(program, realized, tape, ec);
  return make_record(0, program, eval);
}

TrainRun train(const Program& program, const TrainConfig& cfg) {
  TrainRun run;
  const EvalConfig ec = eval_config(program, cfg, &run.horizon);
  run.beta = ec.smooth.beta;

  std::vector<double> theta = initial_theta(program);
  if (theta.empty())
    throw std::invalid_argument("train: no trainable groundings declared");

  AdamState state(theta.size());
  std::vector<double> grads(theta.size(), 0.0);
  ad::Tape tape;

  for (int step = 0;; ++step) {
    tape.clear();
    const Realized realized = realize(program, theta, tape);
    const Evaluation eval = evaluate(program, realized, tape, ec);
    run.history.push_back(make_record(step, program, eval));
    const double sat = run.history.back().satisfaction;

    const bool reached_target =
        cfg.target_satisfaction && sat >= *cfg.target_satisfaction;
    if (reached_target) run.early_stopped = step < cfg.steps;
    if (reached_target || step >= cfg.steps) {
      collect_finals(program, realized, run);
      break;
    }

    // loss = 1 - satisfaction, so the loss gradient is minus the
    // satisfaction gradient.
    if (eval.satisfaction.is_constant()) {
      std::fill(grads.begin(), grads.end(), 0.0);
    } else {
      tape.backward(eval.satisfaction);
      for (std::size_t i = 0; i < theta.size(); ++i)
        grads[i] = -realized.params[i].adjoint();
    }
    adam_step(theta, grads, state, cfg);
  }

  run.theta = std::move(theta);
  return run;
}

}  // namespace fitl::kb
