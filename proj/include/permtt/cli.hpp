#ifndef PERMTT_CLI_HPP
#define PERMTT_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permtt/report.hpp"

namespace permtt
{

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CommandSpec
{
    std::string subcommand; // classify, census, closed-points, support, verify-residue, verify-separable, hom, trichotomy
    std::string group;      // descriptor; census takes a comma-separated list
    std::string primes = "2"; // census takes a comma-separated list
    Format format = Format::Json;
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_order = kDefaultOrderCap;
    std::optional<DegreeWindow> degree_window; // shifts i in Hom(k(G/K)[i], S)
    std::optional<std::string> complex_text;   // contents of --complex
    int random = 0;                            // hom: number of random oracle complexes
};

struct CommandResult
{
    int exit_code = 0; // 0 success, 1 verification failure, 2 usage or parse error
    std::string output;
    std::string diagnostics;
};

CommandResult run(const CommandSpec& spec);

/// Parses argv-style arguments (without the program name) and runs them.
/// `default_format` is used when --format is absent, e.g. from PERMTT_FORMAT.
CommandResult run_command_line(const std::vector<std::string>& args, const char* default_format = nullptr);

/// "LO:HI" with LO <= HI.
DegreeWindow parse_degree_window(std::string_view s);

} // namespace permtt

#endif
