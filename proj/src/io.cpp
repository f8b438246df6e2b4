#include "medoids/io.hpp"

#include "medoids/errors.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

namespace medoids {

namespace {

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return in;
}

}  // namespace

Dataset read_vectors_csv(std::istream& in) {
    std::vector<double> values;
    std::size_t         dim = 0;
    std::string         line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        const std::string_view row = trim(line);
        if (row.empty() || row.front() == '#') {
            continue;
        }
        std::size_t width = 0;
        std::size_t begin = 0;
        while (true) {
            const auto end  = row.find(',', begin);
            const auto cell = trim(row.substr(begin, end == std::string_view::npos ? end : end - begin));
            double     value = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + std::string(cell) + "'",
                                 line_no, begin);
            }
            values.push_back(value);
            ++width;
            if (end == std::string_view::npos) {
                break;
            }
            begin = end + 1;
        }
        if (dim == 0) {
            dim = width;
        } else if (width != dim) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                                 " columns, found " + std::to_string(width),
                             line_no, 0);
        }
    }
    if (values.empty()) {
        throw ParseError("no data rows", 0, 0);
    }
    return Dataset::from_flat(std::move(values), dim);
}

Dataset load_vectors_csv(const std::filesystem::path& path) {
    auto in = open(path);
    return read_vectors_csv(in);
}

Dataset read_trees(std::istream& in) {
    std::vector<TreeNode> trees;
    std::string           line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        const std::string_view text = trim(line);
        if (text.empty()) {
            continue;
        }
        try {
            trees.push_back(parse_tree(text));
        } catch (const ParseError& error) {
            throw ParseError("line " + std::to_string(line_no) + ": " + error.what(), line_no, error.offset());
        }
    }
    if (trees.empty()) {
        throw ParseError("no trees", 0, 0);
    }
    return Dataset::from_trees(std::move(trees));
}

Dataset load_trees(const std::filesystem::path& path) {
    auto in = open(path);
    return read_trees(in);
}

}  // namespace medoids
