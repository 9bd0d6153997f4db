#include "brauerbox/ffla/matrix_io.hpp"

#include <ostream>
#include <sstream>

namespace brauerbox::ffla {

void write_matrix(std::ostream& os, const FpMatrix& m) {
  os << "fpmat p=" << m.p() << " rows=" << m.rows() << " cols=" << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m.at(r, c);
    os << '\n';
  }
}

FpMatrix read_matrix(TextReader& reader) {
  const auto header = reader.parse_header(reader.require_line("fpmat header"), "fpmat");
  const auto p = reader.header_int(header, "p");
  const auto rows = reader.header_int(header, "rows");
  const auto cols = reader.header_int(header, "cols");
  if (p > kMaxPrime || !is_prime(static_cast<std::uint32_t>(p)))
    reader.fail("modulus " + std::to_string(p) + " is not a prime <= 251");
  FpMatrix m(static_cast<std::uint32_t>(p), static_cast<std::size_t>(rows),
             static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    std::istringstream is(reader.require_line("matrix row"));
    for (long long c = 0; c < cols; ++c) {
      long long v = -1;
      if (!(is >> v))
        reader.fail("expected " + std::to_string(cols) + " entries");
      if (v < 0 || v >= p)
        reader.fail("entry " + std::to_string(v) + " outside [0, " + std::to_string(p) + ")");
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
    }
    std::string extra;
    if (is >> extra)
      reader.fail("trailing data '" + extra + "' in matrix row");
  }
  return m;
}

std::string to_text(const FpMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

FpMatrix matrix_from_text(const std::string& text, const std::string& source) {
  std::istringstream is(text);
  TextReader reader(is, source);
  return read_matrix(reader);
}

} // namespace brauerbox::ffla
