#include "brauerbox/cli/scenario_config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "brauerbox/error.hpp"

namespace brauerbox::cli {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

bool bare_key(const std::string& k) {
  if (k.empty())
    return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      return false;
  return true;
}

class ValueParser {
public:
  ValueParser(const std::string& text, const std::string& where) : s_(text), where_(where) {}

  json parse() {
    auto v = value();
    skip_space();
    if (pos_ != s_.size())
      fail("trailing characters after value");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw InputError(where_ + ": " + msg); }

  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
      ++pos_;
  }

  json value() {
    skip_space();
    if (pos_ >= s_.size())
      fail("missing value");
    const char c = s_[pos_];
    if (c == '"')
      return string();
    if (c == '[')
      return array();
    if (s_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      return true;
    }
    if (s_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      return false;
    }
    return integer();
  }

  json string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        if (pos_ + 1 >= s_.size())
          fail("unterminated escape");
        const char e = s_[++pos_];
        if (e == 'n')
          out += '\n';
        else if (e == '"' || e == '\\')
          out += e;
        else
          fail("unsupported escape");
      } else {
        out += s_[pos_];
      }
      ++pos_;
    }
    if (pos_ >= s_.size())
      fail("unterminated string");
    ++pos_;
    return out;
  }

  json array() {
    ++pos_;
    json out = json::array();
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(value());
      skip_space();
      if (pos_ >= s_.size())
        fail("unterminated array");
      if (s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      if (s_[pos_] != ',')
        fail("expected ',' or ']' in array");
      ++pos_;
    }
  }

  json integer() {
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    const auto tok = s_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+")
      fail("unsupported value");
    try {
      if (tok[0] == '-')
        return std::stoll(tok);
      return std::stoull(tok);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  const std::string& s_;
  std::string where_;
  std::size_t pos_ = 0;
};

// strip a comment that is not inside a string
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && in_string)
      ++i;
    else if (line[i] == '"')
      in_string = !in_string;
    else if (line[i] == '#' && !in_string)
      return line.substr(0, i);
  }
  return line;
}

} // namespace

json parse_toml_subset(const std::string& text, const std::string& source) {
  json out = json::object();
  std::istringstream in(text);
  std::string line, table;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string where = source + ":" + std::to_string(number);
    line = trim(strip_comment(line));
    if (line.empty())
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw InputError(where + ": malformed table header");
      table = trim(line.substr(1, line.size() - 2));
      if (!bare_key(table))
        throw InputError(where + ": unsupported table name '" + table + "'");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError(where + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (!bare_key(key))
      throw InputError(where + ": unsupported key '" + key + "'");
    const auto full = table.empty() ? key : table + "." + key;
    if (out.contains(full))
      throw InputError(where + ": duplicate key '" + full + "'");
    out[full] = ValueParser(line.substr(eq + 1), where).parse();
  }
  return out;
}

Scenario scenario_from_text(const std::string& text, const std::string& source) {
  const auto flat = parse_toml_subset(text, source);
  Scenario s;
  for (const auto& [key, value] : flat.items()) {
    if (key == "name") {
      if (!value.is_string())
        throw InputError(source + ": name must be a string");
      s.name = value.get<std::string>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned())
        throw InputError(source + ": seed must be a non-negative integer");
      s.seed = value.get<std::uint64_t>();
    } else if (key.rfind("inputs.", 0) == 0) {
      if (!value.is_string())
        throw InputError(source + ": " + key + " must be a file name");
      s.inputs[key.substr(7)] = value.get<std::string>();
    } else if (key.rfind("expect.", 0) == 0) {
      s.expect[key.substr(7)] = value;
    } else {
      throw InputError(source + ": unknown key '" + key + "'");
    }
  }
  if (s.name.empty())
    throw InputError(source + ": missing name");
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return scenario_from_text(buf.str(), path);
}

} // namespace brauerbox::cli
