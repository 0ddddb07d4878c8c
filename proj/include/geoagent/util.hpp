#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geoagent::util {

/// Hex-encoded SHA-256 of a byte buffer.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

std::string base64_encode(std::span<const std::uint8_t> bytes);

/// Normalization used wherever names or queries act as lookup keys:
/// lowercase, diacritics folded to ASCII where a Latin mapping exists,
/// punctuation kept, whitespace collapsed to single spaces, trimmed.
std::string normalize_text(std::string_view text);

/// True when `needle` occurs in `haystack` at token boundaries, after
/// normalize_text on both sides. "mali" does not match inside "somalia".
bool contains_normalized(std::string_view haystack, std::string_view needle);

std::string read_file(const std::filesystem::path& path);

/// Write via temp file + rename so readers never observe partial content.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string trim(std::string_view text);

}  // namespace geoagent::util
