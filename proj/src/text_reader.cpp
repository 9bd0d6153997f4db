#include "brauerbox/text_reader.hpp"

#include <sstream>

#include "brauerbox/error.hpp"

namespace brauerbox {

std::optional<std::string> TextReader::next_line() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    return line.substr(first);
  }
  return std::nullopt;
}

std::string TextReader::require_line(const std::string& what) {
  auto line = next_line();
  if (!line)
    fail("unexpected end of input, expected " + what);
  return *line;
}

void TextReader::fail(const std::string& message) const {
  throw InputError(source_ + ":" + std::to_string(line_) + ": " + message);
}

std::map<std::string, std::string> TextReader::parse_header(const std::string& line,
                                                            const std::string& keyword) const {
  std::istringstream is(line);
  std::string word;
  is >> word;
  if (word != keyword)
    fail("expected '" + keyword + "' header, got '" + word + "'");
  std::map<std::string, std::string> out;
  while (is >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0)
      fail("malformed header field '" + word + "'");
    out[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return out;
}

long long TextReader::header_int(const std::map<std::string, std::string>& header,
                                 const std::string& key) const {
  auto it = header.find(key);
  if (it == header.end())
    fail("missing header field '" + key + "'");
  try {
    std::size_t used = 0;
    long long v = std::stoll(it->second, &used);
    if (used != it->second.size() || v < 0)
      throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    fail("header field '" + key + "' is not a non-negative integer: '" + it->second + "'");
  }
}

} // namespace brauerbox
