#pragma once

#include "pzf/color_state.hpp"
#include "pzf/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pzf::cli {

inline constexpr std::uint64_t default_seed = 0x5EED;

/// Bad flags or flag combinations. Maps to exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Command
{
    std::string subcommand;
    std::optional<std::string> graph; ///< family spec, e.g. "path:5"
    std::optional<std::string> file;  ///< edge-list file
    std::optional<std::string> start; ///< index, list "0,2" or "best"
    std::optional<std::string> superset; ///< couple-check upper start set
    std::uint64_t seed = default_seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> steps;
    std::string format = "json";
    std::optional<std::string> out;
    std::optional<std::size_t> cap_override;
    std::optional<std::string> grid;
    std::size_t workers = 1;
    std::string mode = "exact"; ///< bounds: exact | mc

    bool show_help = false;
    std::string help;
};

/// Subcommand names in the order the help text lists them.
const std::vector<std::string>& subcommands();

/// Parses arguments without the program name. Throws UsageError naming the
/// offending flag; --help yields show_help with the rendered text.
Command parse_args(const std::vector<std::string>& args);

/// "2", "0,3", "{0,3}" -> set over n vertices. Throws std::invalid_argument.
ColorState parse_start(const std::string& spec, std::size_t n);

/// Seed text in decimal or 0x-prefixed hex.
std::uint64_t parse_seed(const std::string& text);

/// A sweep grid "r=2,4,8;s=8,16" expanded in row-major order (last key
/// fastest) into parameter strings "r=2,s=8", "r=2,s=16", ...
std::vector<std::string> expand_grid(const std::string& grid);

/// Executes the command, writing the report to `out` (or cmd.out).
/// Returns 0 on success, 1 on runtime failures, 2 on usage errors.
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run_command with exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pzf::cli
