#pragma once

#include <iosfwd>
#include <string>

#include "brauerbox/ffla/matrix.hpp"
#include "brauerbox/text_reader.hpp"

namespace brauerbox::ffla {

// Text format:
//   fpmat p=<p> rows=<r> cols=<c>
//   r lines of c whitespace-separated entries in [0, p)

void write_matrix(std::ostream& os, const FpMatrix& m);
FpMatrix read_matrix(TextReader& reader);

std::string to_text(const FpMatrix& m);
FpMatrix matrix_from_text(const std::string& text, const std::string& source = "<string>");

} // namespace brauerbox::ffla
