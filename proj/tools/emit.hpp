#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

// Deterministic output helpers shared by the CLI commands: shortest
// round-trip float formatting, atomic file writes, stable JSON emission.

namespace xychain::cli {

inline constexpr int schema_version = 1;

// Shortest decimal representation that round-trips to the same double;
// locale independent.
std::string format_double(double value);

// Write-temp-then-rename; throws std::runtime_error on I/O failure.
void write_atomic(const std::filesystem::path& path, const std::string& data);

// Serializes with lexicographic key order (nlohmann default map) and a
// trailing newline; schema_version is stamped at the top level.
std::string dump_json(nlohmann::json j);

}  // namespace xychain::cli
