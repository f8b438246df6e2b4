#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace medoids {

/// Invalid argument to a public operation (bad k, duplicate medoid, ...).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Metric and dataset do not fit together.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A metric was evaluated outside its domain (e.g. cosine of a zero vector).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed input text. `line` is 1-based and 0 when unknown; `offset` is a
/// 0-based character offset within the line.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what)
      , line_(line)
      , offset_(offset) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t line_;
    std::size_t offset_;
};

}  // namespace medoids
