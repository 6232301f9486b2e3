#pragma once

#include <filesystem>
#include <string>

namespace collapsim::csv {

// Shortest decimal string that parses back to exactly the same double.
std::string number(double value);
std::string number(long long value);
std::string number(unsigned long long value);

// Write atomically: stream into <path>.tmp, then rename over <path>.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace collapsim::csv
