#ifndef FITL_KB_TRAINER_HPP
#define FITL_KB_TRAINER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fitl/kb/grounding.hpp"
#include "fitl/kb/parser.hpp"

namespace fitl::kb {

struct TrainConfig {
  double learning_rate = 0.1;
  int steps = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint64_t seed = 0;  // recorded in outputs; training itself is
                           // deterministic
  double default_horizon = 100.0;  // used when the kb declares none
  double delta_min = 0.1;
  std::optional<double> beta_override;  // otherwise beta = 1/horizon
  std::optional<double> target_satisfaction;  // early stop when reached
  logic::TNorm tnorm = logic::TNorm::kProduct;
};

struct StepRecord {
  int step = 0;
  double loss = 0.0;
  double satisfaction = 0.0;
  std::vector<double> constraint_values;
};

struct FinalEvent {
  std::string name;
  bool trainable = false;
  FuzzyInterval interval{0, 0, 0, 0};
  double happ = 1.0;
};

struct TrainRun {
  std::vector<StepRecord> history;
  std::vector<FinalEvent> events;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<double> theta;
  double horizon = 0.0;
  double beta = 0.0;
  bool early_stopped = false;

  const StepRecord& final_record() const { return history.back(); }
};

class TrainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  long step = 0;

  explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

/// One Adam update with bias correction; params and grads must have the
/// state's size.
void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state, const TrainConfig& cfg);

/// Evaluates the constraints at the declared/initial groundings, without
/// touching the parameters.
StepRecord evaluate_initial(const Program& program, const TrainConfig& cfg);

/// Minimizes 1 - satisfaction with Adam. The history holds one record per
/// visited parameter state (steps + 1 records without early stopping).
/// Deterministic for a fixed program and configuration.
TrainRun train(const Program& program, const TrainConfig& cfg);

}  // namespace fitl::kb

#endif  // FITL_KB_TRAINER_HPP
