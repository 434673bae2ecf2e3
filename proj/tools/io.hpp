#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace effnum::cli {

/// Malformed input file; the message carries "path:line: ...".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what);
  ParseError(const std::string& path, const std::string& what);
};

/// Complex data as interleaved (re, im) pairs.
struct StateData {
  std::size_t n = 0;
  std::vector<double> re_im;
};

/// Square complex matrix, row-major, interleaved (re, im).
struct MatrixData {
  std::size_t n = 0;
  std::vector<double> re_im;
};

struct GridData {
  std::vector<std::size_t> dims;
  std::vector<double> spacing;
  std::vector<double> origin;
  std::vector<double> re_im;
};

std::string read_file(const std::string& path);

/// "path:line" for the first occurrence of "key" in the text, or just the
/// path when the key is absent.
std::string locate(const std::string& path, const std::string& text, const std::string& key);

/// {"n": N, "amplitudes": [[re, im], ...]}; a bare number is read as a real
/// amplitude.
StateData parse_state(const std::string& text, const std::string& path);
/// {"n": N, "matrix": [[entry, ...], ...]} with entries [re, im] or real.
MatrixData parse_observable(const std::string& text, const std::string& path);
/// {"n": N, "rows": [[entry, ...], ...]}: row i is basis state i.
MatrixData parse_basis(const std::string& text, const std::string& path);
/// Either a single JSON document {"dims", "spacing", "origin"?, "samples"},
/// or a JSON header line {"dims", "spacing", "origin"?} followed by one
/// "re,im" row per cell in row-major order. Blank lines and lines starting
/// with '#' are ignored in the CSV body, as is an optional "re,im" title row.
GridData parse_grid(const std::string& text, const std::string& path);

/// Serialized state file; doubles round-trip exactly.
std::string write_state(const StateData& state);

/// Shortest representation that round-trips (at most 17 significant digits).
std::string format_double(double x);

}  // namespace effnum::cli
