#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "regpump/pumping.hpp"
#include "regpump/syntax.hpp"

namespace regpump {

enum class OutputFormat { Plain, JsonLines };

/// Environment variable naming a config file, used when --config is absent.
inline constexpr const char* kConfigEnvVar = "REGPUMP_CONFIG";

struct CliConfig {
    ReservedSymbols reserved;
    OutputFormat format = OutputFormat::Plain;
    std::optional<std::size_t> max_len;
    PumpingLimits limits;
};

/// Applies `key=value` lines (keys: union, concat, star, empty, epsilon,
/// max_len, state_cap). Blank lines and lines starting with '#' are skipped.
/// Throws std::invalid_argument naming the offending line.
void apply_config_text(CliConfig& config, std::string_view text);

/// Reads a config file and applies it.
void apply_config_file(CliConfig& config, const std::string& path);

} // namespace regpump
