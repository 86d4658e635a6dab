#pragma once
// Minimal SHA-256 (FIPS 180-4) for data-file digests in reports.

#include <cstdint>
#include <string>

namespace fs19 {

std::string sha256_hex(const std::string& bytes);
std::string sha256_file_hex(const std::string& path);  // throws if unreadable

}  // namespace fs19
