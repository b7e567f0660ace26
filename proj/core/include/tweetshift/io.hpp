#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tweetshift {

std::string slurp_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Calls fn(line, line_number) for every line; line numbers are 1-based.
// Handles trailing "\r" and a missing final newline.
void for_each_line(const std::string& path,
                   const std::function<void(const std::string&, std::size_t)>& fn);

// RFC-4180-ish: double quotes, escaped quotes, no embedded newlines.
std::vector<std::string> split_csv_row(const std::string& line);
std::string join_csv_row(const std::vector<std::string>& fields);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);
std::string to_lower(const std::string& s);  // ASCII-only fold

// Shortest round-trip decimal form; stable for byte-identical artifacts.
std::string format_double(double v);
double parse_double(const std::string& s);  // full-string, finite; throws ParseError
long long parse_int(const std::string& s);

}  // namespace tweetshift
