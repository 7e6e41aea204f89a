#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ttskit::cli {

enum ExitCode : int {
    kPass = 0,
    kViolation = 1,
    kInputError = 2,
    kCapExceeded = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttskit::cli
