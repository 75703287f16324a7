#include <iostream>
#include <string>
#include <vector>

#include "logleg/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    logleg::cli::Hooks hooks;
#ifdef LOGLEG_INJECT_FAULT
    // Test build: nudge N[3,1] by one part in 10^9 so `verify` must fail.
    hooks.verify_candidate = [](logleg::Order n, logleg::Order m) {
        logleg::ExactRational value = logleg::entry(n, m);
        if (n == logleg::Order(3) && m == logleg::Order(1))
            value += value / 1000000000;
        return value;
    };
#endif
    return logleg::cli::run(args, std::cout, std::cerr, hooks);
}
