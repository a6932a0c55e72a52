#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace osclab {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 2,
    exit_audit_failure = 3,
    exit_search_incomplete = 4,
    exit_covering_failure = 5,
};

/// exit_search_incomplete when the upper witness was not found, exit_ok otherwise.
inline int search_exit_code(const AuditReport& upper_witness) {
    return upper_witness.failed() ? exit_search_incomplete : exit_ok;
}

/// Runs the osclab command line; output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osclab
