#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textmetrics {

/// Malformed input in one of the line-oriented formats (CoNLL-U, JSONL,
/// embedding text, threshold config). Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ": line " + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Invalid metric selection, resource combination or threshold config.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A metric needs UPOS tags and/or dependency heads the document lacks.
class SyntaxRequiredError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace textmetrics
