#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "logleg/cli.hpp"

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline CliResult run_cli(std::vector<std::string> args, const logleg::cli::Hooks& hooks = {})
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = logleg::cli::run(args, out, err, hooks);
    return {code, out.str(), err.str()};
}
