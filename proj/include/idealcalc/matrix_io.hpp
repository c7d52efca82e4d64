#pragma once

#include <iosfwd>
#include <string>

#include "idealcalc/operators.hpp"

namespace idealcalc {

// Text format: a line with the size n, then n rows of 2n whitespace-separated
// reals, the real and imaginary part of each entry in turn.  Lines starting
// with '#' are comments.  Values are written with round-trip precision.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& x);
void write_matrix_file(const std::string& path, const Matrix& x);

}  // namespace idealcalc
