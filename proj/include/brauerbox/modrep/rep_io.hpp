#pragma once

#include <iosfwd>
#include <string>

#include "brauerbox/modrep/rep.hpp"
#include "brauerbox/text_reader.hpp"

namespace brauerbox::modrep {

// Text format:
//   matrep p=<p> dim=<d> gens=<m>
//   m fpmat blocks, in the order of the group's generators

void write_rep(std::ostream& os, const MatRep& rep);
/// Throws InputError (with source and line) on malformed data or when the
/// matrices do not fit `group`.
MatRep read_rep(TextReader& reader, GroupPtr group);
MatRep rep_from_text(const std::string& text, GroupPtr group, const std::string& source = "<string>");
std::string to_text(const MatRep& rep);

} // namespace brauerbox::modrep
