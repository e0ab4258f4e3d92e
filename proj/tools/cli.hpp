#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dedekind::cli {

enum class Status { ok, domain_error, usage_error };

struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;
    std::optional<std::string> text;  // printed instead of the JSON payload (DOT, counts, help)
    std::vector<std::string> diagnostics;

    /// 0 ok, 1 domain error, 2 usage error.
    int exit_code() const { return static_cast<int>(status); }

    /// What goes to stdout; empty on error.
    std::string stdout_text() const {
        if (status != Status::ok) return {};
        if (text) return *text;
        return payload.dump(2) + "\n";
    }
};

inline constexpr std::uint64_t kDefaultSeed = 1888;

/// Dispatch one invocation. `args` excludes the program name; `env_seed` is DEDEKIND_FORGE_SEED if set.
CommandResult run(const std::vector<std::string>& args, const std::optional<std::string>& env_seed = std::nullopt);

}  // namespace dedekind::cli
