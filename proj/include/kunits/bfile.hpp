#pragma once

// OEIS b-file reader: "index value" per line, '#' comments, blank lines.

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kunits/arith.hpp"

namespace kunits {

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::string source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct BFileEntry {
    std::int64_t index;
    Natural value;

    bool operator==(const BFileEntry&) const = default;
};

struct BFile {
    std::string source_path;
    std::vector<BFileEntry> entries;
};

BFile parse_bfile(std::istream& in, std::string source = "<stream>");

/// Throws std::runtime_error when the file cannot be opened.
BFile read_bfile(const std::string& path);

}  // namespace kunits
