#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace darx {

/// Options shared across subcommands, with their defaults.
struct CliConfig {
    std::string method = "bell";        ///< invariants: bell | omega | both
    std::string format = "text";        ///< invariants: text | json
    std::string alpha_symbol = "alpha";  ///< gauge: exponent symbol
    std::optional<int> order;           ///< invariants: explicit d override
    int max_order = 10;                 ///< selftest bound
    std::uint64_t seed = 12345;         ///< selftest seed
};

/// Dispatches one invocation. args excludes the program name. Exit code:
/// 0 on success or a verified identity, 1 when a verification fails,
/// 2 on usage or syntax errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace darx
