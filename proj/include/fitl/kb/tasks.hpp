#ifndef FITL_KB_TASKS_HPP
#define FITL_KB_TASKS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace fitl::kb::tasks {

struct TaskSpec {
  std::string id;
  std::string description;
  std::string text;       // knowledge-base source
  int default_steps = 0;  // training steps the task is tuned for
};

const std::vector<TaskSpec>& all();

/// Case-insensitive lookup by id ("T1".."T4"); nullptr when unknown.
const TaskSpec* find(std::string_view id);

}  // namespace fitl::kb::tasks

#endif  // FITL_KB_TASKS_HPP
