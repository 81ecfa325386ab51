#pragma once

// The CLI subcommands as plain functions returning their stdout text, so the
// tests can drive them without spawning a process.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concave/extremal.hpp"
#include "concave/io.hpp"

namespace concave {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitIo = 3 };

enum class RegionWhat { omega, hankel, both };
enum class RegionFormat { csv, svg, json };

inline constexpr int kOmegaBoundaryPoints = 512;

struct CommandResult {
  int exit_code = kExitOk;
  std::string text;
};

/// Rows sorted by p. Throws InvalidInput for p outside (0,1).
std::vector<BoundsRow> bounds_rows(std::vector<double> p_values, const SearchOptions& opts);

CommandResult cmd_bounds(const std::vector<double>& p_values, const SearchOptions& opts,
                         const std::optional<std::string>& csv_path);

/// Region document as text; written to `out` when given, otherwise returned.
std::string region_document(double p, RegionWhat what, RegionFormat format, std::int64_t samples,
                            std::uint64_t seed);
CommandResult cmd_region(double p, RegionWhat what, RegionFormat format, std::int64_t samples, std::uint64_t seed,
                         const std::optional<std::string>& out);

CommandResult cmd_verify(const std::vector<double>& p_values, std::int64_t samples, std::uint64_t seed,
                         const std::optional<std::string>& out);

CommandResult cmd_extremal(double p, const SearchOptions& opts, const std::optional<std::string>& out);

}  // namespace concave
