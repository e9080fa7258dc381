// Small helpers shared by the test binaries.
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kcomp/cli.hpp"
#include "kcomp/numeric.hpp"

namespace kcomp::testsupport {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        cells.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return cells;
}

// Exact rational value of a plain decimal string such as "-12.075" or "44".
inline bigrat parse_decimal(std::string_view text) {
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.remove_prefix(1);
    std::size_t dot = text.find('.');
    std::string digits(text.substr(0, dot));
    bigint scale(1);
    if (dot != std::string_view::npos) {
        for (char c : text.substr(dot + 1)) {
            digits += c;
            scale *= 10;
        }
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_decimal: malformed value: " + std::string(text));
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    bigrat value{bigint(digits), scale};
    return negative ? -value : value;
}

struct cli_result {
    int status;
    std::string out;
    std::string err;
};

inline cli_result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = kcomp::cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

// First value following "name = " in a line-oriented command output.
inline std::string field_value(const std::string& text, const std::string& name) {
    for (const std::string& line : split_lines(text)) {
        const std::string prefix = name + " = ";
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    }
    throw std::invalid_argument("field_value: no line starts with '" + name + " = '");
}

} // namespace kcomp::testsupport
