#ifndef TRUMPKIT_CLI_HPP
#define TRUMPKIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trumpkit/scalar.hpp"

namespace trumpkit::cli {

enum class OutputFormat { text, json };

struct RunConfig {
    ScalarBackend backend = ScalarBackend::exact();
    unsigned k_max = 8;
    unsigned m_max = 8;
    std::vector<double> alpha_grid;
    std::size_t search_budget = 10000;
    std::uint64_t seed = 0;
    OutputFormat output = OutputFormat::text;

    std::optional<unsigned> k;  // catalyst build/combine
    unsigned copies = 2;        // catalyst lift
    std::size_t dim_c = 2;      // catalyst search
    bool transcript = false;
    bool normalize = false;
};

// Exit codes shared by every command.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs `trumpkit <command> ...`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trumpkit::cli

#endif  // TRUMPKIT_CLI_HPP
