#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace aucgap {

// Lowercase hex SHA-256 digest of a byte string.
std::string sha256_hex(std::string_view data);

// Digest of a file's raw bytes; throws IoError when the file cannot be read.
std::string sha256_hex_file(const std::filesystem::path& path);

} // namespace aucgap
