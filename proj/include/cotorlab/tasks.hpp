#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotorlab/serialize.hpp"

namespace cotorlab {

/// Overrides for the parameters in a problem's task section.
struct TaskOptions {
    std::optional<int> max_degree;
    std::optional<GradedWindow> window;
    bool emit_bases = false;
};

/// The commands understood by run_task, in help order.
const std::vector<std::string>& task_commands();

/// Raised when a task lacks a parameter or names the wrong kind of object.
class TaskError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Validates every object of p and, unless the command is "validate", stops
/// there with a ValidationError if anything is invalid. Then runs the
/// command and returns its deterministic report (no timing field).
json run_task(const std::string& command, const Problem& p, const TaskOptions& opts = {});

/// Whether a report carries a failed comparison verdict.
bool report_failed(const json& report);

}  // namespace cotorlab
