#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gibbsflow {

std::string_view version_string();

// Shortest round-trip decimal form.
std::string format_number(double x);

std::uint64_t fnv1a64(std::string_view text);

// Writes through a sibling temp file and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace gibbsflow
