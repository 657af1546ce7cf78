#include "fitl/kb/tasks.hpp"

#include <cctype>

namespace fitl::kb::tasks {

namespace {

// Initial placements in the bundled tasks are defaults of this project, not
// values taken from any dataset.

constexpr const char* kT1 = R"(# T1: fit B between two fixed events with a duration target.
# Initial placements are bundled defaults of this implementation.
horizon 10
event A fixed trapezoid(0,1,2,3)
event C fixed trapezoid(7,8,9,10)
event B trainable init logits(0,0,0,0,0)
constraint duration(B) ~= 2
constraint B af A
constraint B bf C
)";

constexpr const char* kT2 = R"(# T2: make B a starting part of C with a duration target.
# A is declared but unused by the constraints, as specified.
# Initial placements are bundled defaults of this implementation.
horizon 10
event A fixed trapezoid(0,0.5,1,1.5)
event C fixed trapezoid(2,3,8,9)
event B trainable init logits(0,0,0,0,0)
constraint duration(B) ~= 1.5
constraint B st C
)";

constexpr const char* kT3 = R"(# T3: overlap a fixed event while holding membership constraints.
# Initial placements are bundled defaults of this implementation.
horizon 10
event B fixed trapezoid(4,5,7,8)
event A trainable init logits(0,0,0,0,0)
constraint A ol B
constraint A at 3
constraint not (A at 2)
)";

constexpr const char* kT4 = R"(# T4: move a trainable time point into the ending phase of A.
# Initial placements are bundled defaults of this implementation.
horizon 10
event A fixed trapezoid(1,2,5,7)
scalar x trainable init 0
constraint End(A) at x
)";

}  // namespace

const std::vector<TaskSpec>& all() {
  static const std::vector<TaskSpec> specs = {
      {"T1", "duration target between two fixed events", kT1, 50},
      {"T2", "starting part of a fixed event", kT2, 500},
      {"T3", "overlap plus membership constraints", kT3, 5000},
      {"T4", "trainable time point at the end of an event", kT4, 200},
  };
  return specs;
}

const TaskSpec* find(std::string_view id) {
  std::string upper(id);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(ch));
  for (const auto& spec : all())
    if (spec.id == upper) return &spec;
  return nullptr;
}

}  // namespace fitl::kb::tasks
