#include <cstdlib>
#include <iostream>

#include "permtt/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = permtt::run_command_line(args, std::getenv("PERMTT_FORMAT"));
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
