#ifndef FITL_KB_RESULT_IO_HPP
#define FITL_KB_RESULT_IO_HPP

#include <string>
#include <string_view>

#include "fitl/kb/trainer.hpp"

namespace fitl::kb {

/// Structured run result: configuration, final groundings, per-constraint
/// satisfactions and the full loss history. Deterministic except for the
/// timestamp field.
std::string result_json(const Program& program, const TrainRun& run,
                        const TrainConfig& cfg, std::string_view source,
                        std::string_view timestamp);

/// Membership curves of the final event groundings sampled on [0, horizon]
/// at the given step, one column per event.
std::string curves_csv(const TrainRun& run, double horizon,
                       double step = 0.01);

std::string current_timestamp();

}  // namespace fitl::kb

#endif  // FITL_KB_RESULT_IO_HPP
