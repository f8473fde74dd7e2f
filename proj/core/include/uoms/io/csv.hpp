#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace uoms::io {

// Reproducibility contract for every emitted CSV: fixed column order and
// 17-significant-digit decimals, which round-trip doubles exactly.
std::string format_double(double v);
double parse_double(const std::string& token, const std::string& context);

struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name) const; // throws FormatError
};

csv_table read_csv(const std::filesystem::path& path); // throws IoError / FormatError
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

std::vector<std::string> split_csv_line(const std::string& line);
std::string join_csv(const std::vector<std::string>& fields);

} // namespace uoms::io
