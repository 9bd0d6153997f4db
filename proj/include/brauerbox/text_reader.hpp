#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>

namespace brauerbox {

/// Line-oriented reader that tags parse errors with source name and line.
/// Blank lines and lines starting with '#' are skipped.
class TextReader {
public:
  TextReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  std::optional<std::string> next_line();
  std::string require_line(const std::string& what);

  [[noreturn]] void fail(const std::string& message) const;

  const std::string& source() const { return source_; }
  std::size_t line_number() const { return line_; }

  /// Parses `<keyword> k1=v1 k2=v2 ...`; fails if the keyword differs.
  std::map<std::string, std::string> parse_header(const std::string& line,
                                                  const std::string& keyword) const;
  long long header_int(const std::map<std::string, std::string>& header,
                       const std::string& key) const;

private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

} // namespace brauerbox
