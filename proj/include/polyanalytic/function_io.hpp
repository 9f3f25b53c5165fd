#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "polyanalytic/poly_function.hpp"

namespace polyanalytic {

/// Malformed function file. line() is 1-based; 0 when the file is unreadable.
class FunctionFormatError : public std::runtime_error {
 public:
  FunctionFormatError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the text format:
///
///     # comment
///     q <int>
///     k j re im      (conj(z) power, z power, coefficient)
///
/// Blank lines and lines starting with '#' are skipped. The q header must be
/// the first significant line; duplicate (k, j) pairs are rejected.
PolyFunctiond parse_function(std::istream& in);

PolyFunctiond load_function(const std::string& path);

/// Writes nonzero coefficients in the same format with 17 significant digits.
void write_function(const PolyFunctiond& f, std::ostream& out);

}  // namespace polyanalytic
