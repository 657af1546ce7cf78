#include "fitl/kb/result_io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace fitl::kb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ordered_json record_json(const StepRecord& rec) {
  ordered_json j;
  j["step"] = rec.step;
  j["loss"] = rec.loss;
  j["satisfaction"] = rec.satisfaction;
  j["constraints"] = rec.constraint_values;
  return j;
}

}  // namespace

std::string result_json(const Program& program, const TrainRun& run,
                        const TrainConfig& cfg, std::string_view source,
                        std::string_view timestamp) {
  ordered_json j;
  j["source"] = std::string(source);
  j["timestamp"] = std::string(timestamp);

  ordered_json jc;
  jc["steps"] = cfg.steps;
  jc["learning_rate"] = cfg.learning_rate;
  jc["seed"] = cfg.seed;
  jc["horizon"] = run.horizon;
  jc["beta"] = run.beta;
  jc["delta_min"] = cfg.delta_min;
  if (cfg.target_satisfaction)
    jc["target_satisfaction"] = *cfg.target_satisfaction;
  else
    jc["target_satisfaction"] = nullptr;
  j["config"] = jc;

  j["early_stopped"] = run.early_stopped;

  const StepRecord& last = run.final_record();
  ordered_json jf;
  jf["step"] = last.step;
  jf["loss"] = last.loss;
  jf["satisfaction"] = last.satisfaction;
  ordered_json jcs = ordered_json::array();
  for (std::size_t i = 0; i < program.constraints.size(); ++i) {
    ordered_json item;
    item["text"] = to_text(*program.constraints[i]);
    item["value"] = last.constraint_values[i];
    jcs.push_back(item);
  }
  jf["constraints"] = jcs;

  ordered_json jev;
  for (const auto& ev : run.events) {
    ordered_json e;
    e["a"] = ev.interval.a();
    e["b"] = ev.interval.b();
    e["c"] = ev.interval.c();
    e["d"] = ev.interval.d();
    e["happ"] = ev.happ;
    e["trainable"] = ev.trainable;
    jev[ev.name] = e;
  }
  jf["events"] = jev;

  ordered_json jsc;
  for (const auto& [name, value] : run.scalars) jsc[name] = value;
  jf["scalars"] = jsc;
  j["final"] = jf;

  ordered_json jh = ordered_json::array();
  for (const auto& rec : run.history) jh.push_back(record_json(rec));
  j["history"] = jh;

  return j.dump(2) + "\n";
}

std::string curves_csv(const TrainRun& run, double horizon, double step) {
  std::ostringstream os;
  os << "x";
  for (const auto& ev : run.events) os << "," << ev.name;
  os << "\n";
  const auto n = static_cast<std::size_t>(horizon / step);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) * step;
    os << format_double(x);
    for (const auto& ev : run.events)
      os << "," << format_double(membership(ev.interval, x));
    os << "\n";
  }
  return os.str();
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace fitl::kb
