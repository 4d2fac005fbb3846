#pragma once

#include "rankcode/field_matrix.hpp"
#include "rankcode/linear_code.hpp"
#include "rankcode/mcode.hpp"

#include <istream>
#include <string>

namespace rankcode {

// Text format:
//   field N=<nat> [poly=<hex>]
//   code n=<nat> k=<nat>
//   row <hex> ... <hex>        (k lines, n elements each)
// Blank lines and '#' comments are ignored. Errors are ParseError with the
// offending line number.
FieldMatrix parse_matrix(std::istream& in);
FieldMatrix parse_matrix_text(const std::string& text);
LinearRdCode parse_code(std::istream& in);
LinearRdCode parse_code_text(const std::string& text);

// Blocks separated by '---'. A block is either a code definition as above or
//   circulant N=<nat>
//   basis <hex> ...            (one or more lines)
Ensemble parse_ensemble(std::istream& in);
Ensemble parse_ensemble_text(const std::string& text);

std::string format_matrix(const FieldMatrix& m);
std::string format_code(const LinearRdCode& code);
std::string format_circulant(const CirculantRankCode& code);
std::string format_ensemble(const Ensemble& e);

LinearRdCode load_code(const std::string& path);
FieldMatrix load_matrix(const std::string& path);
Ensemble load_ensemble(const std::string& path);

}  // namespace rankcode
