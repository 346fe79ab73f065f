#pragma once

#include "twinrow/partitions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace twinrow {

enum class Command { character, f, g, F, Z, G, verify };
enum class Basis { x, z, schur };
enum class OutputFormat { text, json };

inline constexpr std::size_t max_n = 6;
inline constexpr std::size_t max_order = 12;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage = 2;
inline constexpr int invariant_breach = 3;
} // namespace exit_code

struct RunConfig {
    Command command = Command::verify;
    std::size_t n = 2;
    std::optional<std::size_t> order;  // defaults to N + 2
    Basis basis = Basis::z;
    OutputFormat format = OutputFormat::text;
    bool su_specialize = false;  // z_n -> 1 in reported values
    std::optional<std::uint64_t> seed;  // accepted, unused
    std::optional<Partition> partition;  // row lengths for `char`

    std::size_t effective_order() const;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

/// Executes a validated config. Returns one of the exit_code values; diagnostics for
/// invariant breaches go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11), validates and runs.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string to_string(Command c);

} // namespace twinrow
