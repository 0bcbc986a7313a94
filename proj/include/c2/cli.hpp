#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c2::cli {

/// Exit statuses of run().
enum Status : int { ok = 0, domain_failure = 1, usage_failure = 2 };

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`; `in` is read when an input argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Library operation name paired with an argv that reaches it.
struct Coverage {
  std::string operation;
  std::vector<std::string> args;
};

/// One runnable example per library operation.
std::vector<Coverage> operation_coverage();

} // namespace c2::cli
