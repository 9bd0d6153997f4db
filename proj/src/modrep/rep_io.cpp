#include "brauerbox/modrep/rep_io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "brauerbox/error.hpp"
#include "brauerbox/ffla/matrix_io.hpp"

namespace brauerbox::modrep {

void write_rep(std::ostream& os, const MatRep& rep) {
  os << "matrep p=" << rep.p() << " dim=" << rep.dim() << " gens=" << rep.matrices().size() << '\n';
  for (const auto& m : rep.matrices())
    ffla::write_matrix(os, m);
}

MatRep read_rep(TextReader& reader, GroupPtr group) {
  const auto header = reader.parse_header(reader.require_line("matrep header"), "matrep");
  const auto p = reader.header_int(header, "p");
  const auto dim = reader.header_int(header, "dim");
  const auto gens = reader.header_int(header, "gens");
  if (gens != static_cast<long long>(group->generators().size()))
    reader.fail("representation has " + std::to_string(gens) + " matrices but the group has " +
                std::to_string(group->generators().size()) + " generators");
  std::vector<FpMatrix> mats;
  for (long long i = 0; i < gens; ++i) {
    auto m = ffla::read_matrix(reader);
    if (static_cast<long long>(m.p()) != p || static_cast<long long>(m.rows()) != dim ||
        static_cast<long long>(m.cols()) != dim)
      reader.fail("matrix " + std::to_string(i + 1) + " does not match the header");
    mats.push_back(std::move(m));
  }
  if (reader.next_line())
    reader.fail("trailing data after the last matrix");
  try {
    MatRep rep(std::move(group), static_cast<std::uint32_t>(p), static_cast<std::size_t>(dim), std::move(mats));
    spot_check(rep);
    return rep;
  } catch (const std::invalid_argument& e) {
    throw InputError(reader.source() + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(reader.source() + ": " + e.what());
  }
}

MatRep rep_from_text(const std::string& text, GroupPtr group, const std::string& source) {
  std::istringstream in(text);
  TextReader reader(in, source);
  return read_rep(reader, std::move(group));
}

std::string to_text(const MatRep& rep) {
  std::ostringstream os;
  write_rep(os, rep);
  return os.str();
}

} // namespace brauerbox::modrep
