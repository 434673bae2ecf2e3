#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace effnum::cli {
namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key": in the text, or 0 when absent.
std::size_t line_of_key(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

[[noreturn]] void fail_at_key(const std::string& path, const std::string& text, const std::string& key,
                              const std::string& what) {
  const std::size_t line = line_of_key(text, key);
  if (line == 0) throw ParseError(path, what);
  throw ParseError(path, line, what);
}

json parse_json(const std::string& text, const std::string& path, std::size_t first_line = 1) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(path, first_line - 1 + line_of_offset(text, byte), e.what());
  }
}

const json& require_key(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) throw ParseError(path, 1, "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(path, std::string("missing key \"") + key + '"');
  return *it;
}

// A complex entry: a real number or a [re, im] pair.
void read_complex(const json& v, std::vector<double>& out, const std::string& text, const std::string& path,
                  const char* key) {
  if (v.is_number()) {
    out.push_back(v.get<double>());
    out.push_back(0.0);
    return;
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    out.push_back(v[0].get<double>());
    out.push_back(v[1].get<double>());
    return;
  }
  fail_at_key(path, text, key, std::string("entries of \"") + key + "\" must be numbers or [re, im] pairs");
}

std::size_t read_dimension(const json& doc, const std::string& text, const std::string& path) {
  const json& n = require_key(doc, "n", path);
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0)
    fail_at_key(path, text, "n", "\"n\" must be a positive integer");
  return n.get<std::size_t>();
}

MatrixData parse_square(const std::string& text, const std::string& path, const char* key) {
  const json doc = parse_json(text, path);
  MatrixData m;
  m.n = read_dimension(doc, text, path);
  const json& rows = require_key(doc, key, path);
  if (!rows.is_array() || rows.size() != m.n) {
    std::ostringstream msg;
    msg << '"' << key << "\" must hold " << m.n << " rows";
    fail_at_key(path, text, key, msg.str());
  }
  m.re_im.reserve(2 * m.n * m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.n) {
      std::ostringstream msg;
      msg << "row " << i << " of \"" << key << "\" must hold " << m.n << " entries";
      fail_at_key(path, text, key, msg.str());
    }
    for (const json& v : rows[i]) read_complex(v, m.re_im, text, path, key);
  }
  return m;
}

std::vector<std::size_t> read_dims(const json& doc, const std::string& text, const std::string& path) {
  const json& d = require_key(doc, "dims", path);
  if (!d.is_array() || d.empty()) fail_at_key(path, text, "dims", "\"dims\" must be a non-empty array");
  std::vector<std::size_t> dims;
  for (const json& v : d) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
      fail_at_key(path, text, "dims", "\"dims\" entries must be positive integers");
    dims.push_back(v.get<std::size_t>());
  }
  return dims;
}

std::vector<double> read_reals(const json& doc, const char* key, std::size_t rank, bool optional,
                               const std::string& text, const std::string& path) {
  if (optional && (!doc.is_object() || !doc.contains(key))) return {};
  const json& a = require_key(doc, key, path);
  if (!a.is_array() || a.size() != rank) {
    std::ostringstream msg;
    msg << '"' << key << "\" must hold " << rank << " numbers";
    fail_at_key(path, text, key, msg.str());
  }
  std::vector<double> out;
  for (const json& v : a) {
    if (!v.is_number()) fail_at_key(path, text, key, std::string('"' + std::string(key) + "\" entries must be numbers"));
    out.push_back(v.get<double>());
  }
  return out;
}

GridData read_header(const json& doc, const std::string& text, const std::string& path) {
  GridData g;
  g.dims = read_dims(doc, text, path);
  g.spacing = read_reals(doc, "spacing", g.dims.size(), false, text, path);
  g.origin = read_reals(doc, "origin", g.dims.size(), true, text, path);
  return g;
}

bool parse_number(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& what)
    : std::runtime_error(path + ':' + std::to_string(line) + ": " + what) {}

ParseError::ParseError(const std::string& path, const std::string& what) : std::runtime_error(path + ": " + what) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string locate(const std::string& path, const std::string& text, const std::string& key) {
  const std::size_t line = line_of_key(text, key);
  return line == 0 ? path : path + ':' + std::to_string(line);
}

StateData parse_state(const std::string& text, const std::string& path) {
  const json doc = parse_json(text, path);
  StateData s;
  s.n = read_dimension(doc, text, path);
  const json& a = require_key(doc, "amplitudes", path);
  if (!a.is_array() || a.size() != s.n) {
    std::ostringstream msg;
    msg << "\"amplitudes\" must hold " << s.n << " entries";
    fail_at_key(path, text, "amplitudes", msg.str());
  }
  s.re_im.reserve(2 * s.n);
  for (const json& v : a) read_complex(v, s.re_im, text, path, "amplitudes");
  return s;
}

MatrixData parse_observable(const std::string& text, const std::string& path) {
  return parse_square(text, path, "matrix");
}

MatrixData parse_basis(const std::string& text, const std::string& path) { return parse_square(text, path, "rows"); }

GridData parse_grid(const std::string& text, const std::string& path) {
  // Single JSON document first.
  const json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded() && whole.is_object() && whole.contains("samples")) {
    GridData g = read_header(whole, text, path);
    const json& s = whole["samples"];
    if (!s.is_array()) fail_at_key(path, text, "samples", "\"samples\" must be an array");
    g.re_im.reserve(2 * s.size());
    for (const json& v : s) read_complex(v, g.re_im, text, path, "samples");
    return g;
  }

  // Header line plus CSV body.
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t header_line = 0;
  GridData g;
  bool have_header = false;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      header_line = lineno;
      const json header = parse_json(line, path, lineno);
      if (!header.is_object()) throw ParseError(path, lineno, "grid header must be a JSON object");
      g = read_header(header, line, path);
      have_header = true;
      continue;
    }
    const std::string_view row(line);
    const auto comma = row.find(',');
    double re = 0.0;
    double im = 0.0;
    bool ok = false;
    if (comma == std::string_view::npos) {
      ok = parse_number(row, re);
    } else if (row.find(',', comma + 1) == std::string_view::npos) {
      ok = parse_number(row.substr(0, comma), re) && parse_number(row.substr(comma + 1), im);
    }
    if (!ok) {
      if (first_row && row.find_first_of("0123456789") == std::string_view::npos) {
        first_row = false;
        continue;
      }
      throw ParseError(path, lineno, "expected \"re,im\", got \"" + line + '"');
    }
    first_row = false;
    g.re_im.push_back(re);
    g.re_im.push_back(im);
  }
  if (!have_header) throw ParseError(path, "grid file has no header line");
  std::size_t cells = 1;
  for (std::size_t d : g.dims) cells *= d;
  if (g.re_im.size() != 2 * cells) {
    std::ostringstream msg;
    msg << "header declares " << cells << " cells but the file has " << g.re_im.size() / 2 << " rows";
    throw ParseError(path, header_line, msg.str());
  }
  return g;
}

std::string write_state(const StateData& state) {
  json amplitudes = json::array();
  for (std::size_t i = 0; i < state.n; ++i) amplitudes.push_back({state.re_im[2 * i], state.re_im[2 * i + 1]});
  nlohmann::ordered_json doc = {{"n", state.n}, {"amplitudes", std::move(amplitudes)}};
  return doc.dump(2) + '\n';
}

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace effnum::cli
