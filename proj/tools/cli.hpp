#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chromcoh::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct RunConfig {
    std::string subcommand;
    std::string graph_path;
    std::string graph2_path;
    std::string algebra = "zx2";
    std::string twist;
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t max_edges = 20;
    std::size_t max_dim = 20000;
    std::vector<std::string> checks;
    bool all = false;
    std::vector<long> ring_params;
};

/// Parses argv-style arguments (without the program name), runs the
/// subcommand and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromcoh::cli
