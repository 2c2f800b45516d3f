#pragma once

#include <string>
#include <vector>

namespace adskit::cli {

enum class Status { ok, ruled_out, precondition_failed, error };

struct CommandResult {
    Status status = Status::ok;
    std::string payload;  // JSON (or CSV/text for table outputs)
    std::vector<std::string> diagnostics;
    // exit code 0 for ok and ruled_out (analysis outcomes), 1 for
    // precondition/operational failures, 2 for usage errors
    int exit_code() const;
};

// Subcommands: verify, construct, filter, search, autocorr, interleave,
// cycnum, table.  argv excludes the program name.
CommandResult dispatch(const std::vector<std::string>& argv);

int run_main(int argc, char** argv);

}  // namespace adskit::cli
