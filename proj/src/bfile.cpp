#include "kunits/bfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kunits {

namespace {

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

BFile parse_bfile(std::istream& in, std::string source)
{
    BFile file;
    file.source_path = std::move(source);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokens(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (toks.size() != 2) {
            throw BFileParseError(file.source_path, line_no,
                                  "expected '<index> <value>', found " + std::to_string(toks.size()) + " tokens");
        }

        std::int64_t index = 0;
        const auto [ptr, ec] = std::from_chars(toks[0].data(), toks[0].data() + toks[0].size(), index);
        if (ec != std::errc() || ptr != toks[0].data() + toks[0].size()) {
            throw BFileParseError(file.source_path, line_no, "malformed index '" + std::string(toks[0]) + "'");
        }
        if (!all_digits(toks[1])) {
            throw BFileParseError(file.source_path, line_no, "malformed value '" + std::string(toks[1]) + "'");
        }
        if (!file.entries.empty() && index <= file.entries.back().index) {
            throw BFileParseError(file.source_path, line_no,
                                  "index " + std::to_string(index) + " does not increase");
        }
        file.entries.push_back({index, Natural(std::string(toks[1]))});
    }
    return file;
}

BFile read_bfile(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file '" + path + "'");
    return parse_bfile(in, path);
}

}  // namespace kunits
