#pragma once

// Text format:
//
//   BH <n> <k>
//   <n lines of n space-separated exponents>
//
// Lines starting with '#' are comments. The reader accepts any integers and
// reduces them mod k; the writer emits the canonical form with single spaces
// and a trailing newline.

#include <iosfwd>
#include <string>
#include <string_view>

#include "butson/bh_matrix.hpp"

namespace butson {

BhMatrix read_matrix(std::istream& in);
BhMatrix read_matrix(std::string_view text);
BhMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const BhMatrix& m);
std::string write_matrix(const BhMatrix& m);

}  // namespace butson
