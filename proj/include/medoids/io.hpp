#pragma once

#include "medoids/dataset.hpp"

#include <filesystem>
#include <istream>

namespace medoids {

/// Comma-separated decimal rows, one point per line. Lines starting with '#'
/// and blank lines are skipped. Errors carry the 1-based line number.
Dataset read_vectors_csv(std::istream& in);
Dataset load_vectors_csv(const std::filesystem::path& path);

/// One tree expression per non-empty line.
Dataset read_trees(std::istream& in);
Dataset load_trees(const std::filesystem::path& path);

}  // namespace medoids
