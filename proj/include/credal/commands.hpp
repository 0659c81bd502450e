#pragma once

#include "credal/scalar.hpp"

#include <optional>
#include <string>

namespace credal::cli {

enum class Format { Text, Json };
enum class Side { Lower, Upper, Both };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 2;
inline constexpr int sure_loss = 3;
inline constexpr int flag_misuse = 4;
inline constexpr int capacity = 5;
}  // namespace exit_code

/// What a command printed and how it wants the process to exit. Identical
/// inputs give byte-identical `out`.
struct CommandResult {
    int exit_code = exit_code::ok;
    std::string out;
    std::string err;
};

/// Sure-loss verdict and per-assessment coherence gaps. Exit 3 on sure
/// loss; incoherence only adds a warning on `err`.
CommandResult cmd_check(const std::string& path, Format format = Format::Text);

/// Lower and/or upper natural extension of `gamble_json` (a state->number
/// object) with the attaining mass functions.
CommandResult cmd_extend(const std::string& path, const std::string& gamble_json, Side side = Side::Both,
                         Format format = Format::Text);

struct OptimalOptions {
    std::string criterion = "all";  ///< a criterion name or "all"
    std::optional<std::string> mu_json;
    bool prefilter = false;
    bool witness = false;
    Format format = Format::Text;
};

/// Optimal decision sets. `all` reports every criterion (meu only when a
/// probability vector is given); the prefilter then applies to maximality
/// and E-admissibility.
CommandResult cmd_optimal(const std::string& path, const OptimalOptions& options);

/// Exact rational, followed by its decimal expansion when that is finite
/// and different: "57/25 (2.28)".
std::string render(const Scalar& s);

}  // namespace credal::cli
