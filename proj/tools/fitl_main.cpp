#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fitl/kb/parser.hpp"
#include "fitl/kb/result_io.hpp"
#include "fitl/kb/tasks.hpp"
#include "fitl/kb/trainer.hpp"
#include "fitl/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitThresholdFailed = 1;
constexpr int kExitInputError = 2;

struct RunSpec {
  std::string kb_path;
  std::string task_id;
  int steps = -1;  // -1: task default or 100
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
  std::optional<double> beta;
  double delta_min = 0.1;
  double default_horizon = 100.0;
  std::optional<double> target;
  bool no_target = false;
  std::string out_path;
  std::string curves_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

struct LoadedKb {
  std::string source;  // task id or path
  fitl::kb::Program program;
  int default_steps = 100;
};

LoadedKb load_kb(const RunSpec& spec) {
  LoadedKb loaded;
  if (!spec.task_id.empty()) {
    const auto* task = fitl::kb::tasks::find(spec.task_id);
    if (!task)
      throw std::runtime_error("unknown task id '" + spec.task_id +
                               "' (expected T1..T4)");
    loaded.source = task->id;
    loaded.program = fitl::kb::parse_kb(task->text);
    loaded.default_steps = task->default_steps;
  } else {
    loaded.source = spec.kb_path;
    loaded.program = fitl::kb::parse_kb(read_file(spec.kb_path));
  }
  return loaded;
}

fitl::kb::TrainConfig train_config(const RunSpec& spec, int default_steps) {
  fitl::kb::TrainConfig cfg;
  cfg.steps = spec.steps >= 0 ? spec.steps : default_steps;
  cfg.learning_rate = spec.learning_rate;
  cfg.seed = spec.seed;
  cfg.delta_min = spec.delta_min;
  cfg.default_horizon = spec.default_horizon;
  cfg.beta_override = spec.beta;
  if (!spec.no_target) {
    if (spec.target)
      cfg.target_satisfaction = spec.target;
    else if (!spec.task_id.empty())
      cfg.target_satisfaction = 0.99;  // bundled tasks stop early by default
  }
  return cfg;
}

std::string resolve_out_path(const RunSpec& spec, const std::string& source) {
  if (!spec.out_path.empty()) return spec.out_path;
  if (const char* dir = std::getenv("FITL_OUT_DIR"); dir && *dir) {
    std::filesystem::path base(dir);
    std::string name = std::filesystem::path(source).stem().string();
    if (name.empty()) name = "result";
    return (base / (name + ".json")).string();
  }
  return "";  // stdout
}

int cmd_run(const RunSpec& spec) {
  const LoadedKb loaded = load_kb(spec);
  const fitl::kb::TrainConfig cfg = train_config(spec, loaded.default_steps);
  const fitl::kb::TrainRun run = fitl::kb::train(loaded.program, cfg);

  const std::string json = fitl::kb::result_json(
      loaded.program, run, cfg, loaded.source, fitl::kb::current_timestamp());
  const std::string out_path = resolve_out_path(spec, loaded.source);
  if (out_path.empty())
    std::cout << json;
  else
    write_file(out_path, json);

  if (!spec.curves_path.empty())
    write_file(spec.curves_path, fitl::kb::curves_csv(run, run.horizon));

  const auto& final = run.final_record();
  std::cerr << "satisfaction " << final.satisfaction << " after " << final.step
            << " steps (loss " << final.loss << ")"
            << (run.early_stopped ? ", stopped early" : "") << "\n";

  if (cfg.target_satisfaction &&
      final.satisfaction < *cfg.target_satisfaction)
    return kExitThresholdFailed;
  return kExitOk;
}

int cmd_eval(const RunSpec& spec) {
  const LoadedKb loaded = load_kb(spec);
  fitl::kb::TrainConfig cfg = train_config(spec, 0);
  const fitl::kb::StepRecord rec =
      fitl::kb::evaluate_initial(loaded.program, cfg);
  for (std::size_t i = 0; i < loaded.program.constraints.size(); ++i)
    std::cout << rec.constraint_values[i] << "  "
              << fitl::kb::to_text(*loaded.program.constraints[i]) << "\n";
  std::cout << "satisfaction " << rec.satisfaction << "\n";
  return kExitOk;
}

int cmd_check(const fitl::verify::Options& opt) {
  const auto results = fitl::verify::run_all(opt);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
              << r.cases << " cases): " << r.detail << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? kExitOk : kExitThresholdFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy temporal interval logic engine"};
  app.require_subcommand(1);

  RunSpec spec;
  fitl::verify::Options verify_opt;
  int check_cases = 1000;
  bool inject_bug = false;

  auto add_kb_options = [&spec](CLI::App* cmd) {
    auto* kb = cmd->add_option("--kb", spec.kb_path, "knowledge-base file");
    auto* task =
        cmd->add_option("--task", spec.task_id, "bundled task id (T1..T4)");
    kb->excludes(task);
    task->excludes(kb);
    cmd->add_option("--delta-min", spec.delta_min,
                    "half-width floor for Start/End");
    cmd->add_option("--beta", spec.beta,
                    "softplus temperature (default 1/horizon)");
    cmd->add_option("--horizon", spec.default_horizon,
                    "horizon used when the kb declares none");
  };

  auto* run = app.add_subcommand("run", "train a knowledge base");
  add_kb_options(run);
  run->add_option("--steps", spec.steps, "training steps");
  run->add_option("--lr", spec.learning_rate, "Adam learning rate");
  run->add_option("--seed", spec.seed, "seed recorded in the result");
  run->add_option("--target", spec.target,
                  "satisfaction threshold: stop early and require at exit");
  run->add_flag("--no-target", spec.no_target,
                "disable the default task threshold");
  run->add_option("--out", spec.out_path,
                  "result JSON path (default stdout, or $FITL_OUT_DIR)");
  run->add_option("--curves", spec.curves_path,
                  "also write sampled membership curves (CSV)");

  auto* eval = app.add_subcommand(
      "eval", "print constraint truth values without training");
  add_kb_options(eval);

  auto* check =
      app.add_subcommand("check", "run the verification suites");
  check->add_option("--cases", check_cases, "number of geometry oracle cases");
  check->add_option("--grid-step", verify_opt.grid_step,
                    "oracle integration step");
  check->add_option("--seed", verify_opt.seed, "suite seed");
  check->add_option("--threads", verify_opt.threads,
                    "worker threads (0 = hardware)");
  check
      ->add_flag("--inject-geometry-bug", inject_bug,
                 "perturb the closed-form area (suite self-test)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (run->parsed()) return cmd_run(spec);
    if (eval->parsed()) return cmd_eval(spec);
    if (check->parsed()) {
      verify_opt.area_cases = check_cases;
      verify_opt.line_cases = std::max(1, check_cases / 2);
      verify_opt.gradient_cases = std::max(8, check_cases / 5);
      verify_opt.rectangle_cases = std::max(8, check_cases / 5);
      if (inject_bug) verify_opt.inject_area_bias = 0.01;
      return cmd_check(verify_opt);
    }
  } catch (const fitl::kb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
