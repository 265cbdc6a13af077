#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgprobe {

std::string_view tool_version();  // semantic version of this toolkit

/// Hex SHA-256 of a whole file / of an in-memory buffer.
std::string sha256_file(const std::filesystem::path& file);
std::string sha256_bytes(std::string_view bytes);

/// Reproducibility record written next to every command's outputs: what ran,
/// with which parameters, over which exact inputs.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> input_digests;
    std::vector<std::string> outputs;
    std::string tool;
    std::string timestamp;  // ISO 8601 UTC

    void add_parameter(std::string_view key, std::string_view value);
    /// Records `label` → sha256(file). Missing file raises IoError.
    void add_input(std::string_view label, const std::filesystem::path& file);
    void add_output(const std::filesystem::path& file);
};

/// Manifest stamped with version and current UTC time.
RunManifest make_manifest(std::string_view command);

std::string manifest_to_json(const RunManifest& m);
void write_manifest(const RunManifest& m, const std::filesystem::path& file);

}  // namespace kgprobe
