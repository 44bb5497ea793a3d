/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_TOOLS_CLI_HH
#define LOCDOM_GUARD_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace locdom::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_verification_failed = 1,
        exit_parse_error = 2,
        exit_precondition = 3,
        exit_invariant = 4
    };

    /// Runs one command line (without the program name). Standard input is
    /// read from in when a command takes "-" or no --input.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
