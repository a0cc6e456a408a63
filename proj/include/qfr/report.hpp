#ifndef QFR_REPORT_HPP
#define QFR_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qfr/json_io.hpp"
#include "qfr/quiver.hpp"

namespace qfr {

/// Knobs shared by every command; echoed verbatim into each report so a run
/// can be reproduced from its own output.
struct RunConfig {
    int n = 2;
    std::uint64_t seed = 20240001;
    int trials = 20;
    long cap = 3;
    int max_len = 0;  // 0 = derived from the quiver
    std::string format = "json";  // "json" or "text"
};

struct CommandResult {
    Json report;
    int exit_code = 0;  // 0 ok, 3 precondition, 4 verification failure
};

/// Dispatches one batch command ("classify", "dims", "stab", "inv", "adhm",
/// "selftest") over an optional quiver. Output is deterministic for a fixed
/// (quiver, config): all randomness is derived from config.seed.
CommandResult run_command(const std::string& command, const std::optional<Quiver>& quiver,
                          const RunConfig& config);

/// Human-readable rendering of a report produced by run_command.
std::string render_text(const Json& report);

} // namespace qfr

#endif
