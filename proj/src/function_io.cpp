#include "polyanalytic/function_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "polyanalytic/csv.hpp"

namespace polyanalytic {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

template <typename T>
T parse_number(const std::string& tok, int line, const char* field) {
  T value{};
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw FunctionFormatError(line, std::string("non-numeric ") + field + " '" + tok + "'");
  return value;
}

}  // namespace

PolyFunctiond parse_function(std::istream& in) {
  std::map<Monomial, std::complex<double>> entries;
  int q = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (q == 0) {
      if (tokens.size() != 2 || tokens[0] != "q") throw FunctionFormatError(line_no, "expected header 'q <int>'");
      q = parse_number<int>(tokens[1], line_no, "q");
      if (q < 1) throw FunctionFormatError(line_no, "q must be >= 1");
      continue;
    }
    if (tokens.size() != 4) throw FunctionFormatError(line_no, "expected 'k j re im'");
    const int k = parse_number<int>(tokens[0], line_no, "k");
    const int j = parse_number<int>(tokens[1], line_no, "j");
    const double re = parse_number<double>(tokens[2], line_no, "re");
    const double im = parse_number<double>(tokens[3], line_no, "im");
    if (k < 0 || j < 0) throw FunctionFormatError(line_no, "negative exponent");
    if (k >= q)
      throw FunctionFormatError(line_no, "conj(z) power " + std::to_string(k) + " >= q = " + std::to_string(q));
    if (!entries.emplace(Monomial{k, j}, std::complex<double>(re, im)).second)
      throw FunctionFormatError(line_no, "duplicate entry (" + std::to_string(k) + ", " + std::to_string(j) + ")");
  }
  if (q == 0) throw FunctionFormatError(line_no, "missing header 'q <int>'");
  return from_monomials<double>(entries, q);
}

PolyFunctiond load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FunctionFormatError(0, "cannot open function file '" + path + "'");
  return parse_function(in);
}

void write_function(const PolyFunctiond& f, std::ostream& out) {
  out << "q " << f.q() << '\n';
  for (Eigen::Index k = 0; k < f.q(); ++k)
    for (Eigen::Index j = 0; j < f.width(); ++j) {
      const auto c = f.coeffs()(k, j);
      if (c == std::complex<double>(0)) continue;
      out << k << ' ' << j << ' ' << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
    }
}

}  // namespace polyanalytic
