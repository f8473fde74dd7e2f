#include "uoms/io/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "uoms/error.hpp"

namespace uoms::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, const std::string& context) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
        fail(errc::format_error, "bad number '" + token + "' in " + context);
    }
    return v;
}

std::size_t csv_table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    fail(errc::format_error, "missing column '" + name + "'");
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        std::string field = line.substr(start, pos - start);
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(std::move(field));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return fields;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += fields[i];
    }
    return line;
}

csv_table read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open '" + path.string() + "'");

    csv_table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
        } else {
            if (fields.size() != table.header.size()) {
                fail(errc::format_error, "ragged row in '" + path.string() + "'");
            }
            table.rows.push_back(std::move(fields));
        }
    }
    if (!have_header) fail(errc::format_error, "'" + path.string() + "' has no header row");
    return table;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot write '" + path.string() + "'");
    for (const std::string& line : lines) out << line << '\n';
    if (!out) fail(errc::io_error, "short write to '" + path.string() + "'");
}

} // namespace uoms::io
