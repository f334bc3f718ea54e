#pragma once

#include "qnull/monomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qnull::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,          // bad flags, unreadable input, parse or validation failure
    kNegative = 2,            // non-member, condition fails, 1 not in the Rabinowitsch ideal
    kVerificationFailed = 3,  // a certificate identity did not hold
};

enum class OutputMode { text, doc };

struct RunConfig {
    std::vector<std::string> variables;
    OrderKind order = OrderKind::degrevlex;
    unsigned n_max = 8;
    std::vector<std::string> scalars;
    bool cofactors = false;
    std::string input_path;
    std::string output_path;
    OutputMode mode = OutputMode::text;
};

/// Runs one command. args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnull::cli
