#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gwva/errors.hpp"

namespace gwva::detail {

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline double parse_csv_number(const std::string& field,
                               const std::filesystem::path& path,
                               std::size_t line_no)
{
    double v = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw input_error(path.string() + ":" + std::to_string(line_no) +
                          ": non-numeric field '" + field + "'");
    return v;
}

// Opens a CSV, checks the exact lowercase header, and returns the numeric
// rows (every field parsed as double).
inline std::vector<std::vector<double>>
read_numeric_csv(const std::filesystem::path& path,
                 const std::string& expected_header)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open CSV file: " + path.string());
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw input_error(path.string() + ": empty file");
    ++line_no;
    std::string header = line;
    if (!header.empty() && header.back() == '\r')
        header.pop_back();
    if (header != expected_header)
        throw input_error(path.string() + ": expected header '" +
                          expected_header + "', got '" + header + "'");
    const std::size_t n_fields = split_csv_line(line).size();
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != n_fields)
            throw input_error(path.string() + ":" + std::to_string(line_no) +
                              ": expected " + std::to_string(n_fields) +
                              " fields, got " + std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(n_fields);
        for (const std::string& f : fields)
            row.push_back(parse_csv_number(f, path, line_no));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gwva::detail
