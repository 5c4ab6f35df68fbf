#pragma once

#include <string>
#include <vector>

namespace pebble {

struct subprocess_result {
    int exit_code = -1;       // -1 when killed by a signal or timeout
    bool timed_out = false;
    std::string output;       // combined stdout + stderr, as written to the log
};

// Runs argv[0] with the given arguments, streaming stdout and stderr into
// log_path (created/truncated). A non-positive timeout means no limit;
// otherwise the process group is killed once the limit passes. Throws
// solver_error when the executable cannot be spawned at all.
subprocess_result run_process(const std::vector<std::string>& argv, const std::string& log_path,
                              double timeout_seconds);

}  // namespace pebble
