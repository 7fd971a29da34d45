#include "butson/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "butson/errors.hpp"

namespace butson {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

bool parse_int(std::string_view tok, std::int64_t& value) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

bool is_skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

BhMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_skippable(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing 'BH <n> <k>' header");
  const auto header = split_ws(line);
  std::int64_t n = 0;
  std::int64_t k = 0;
  if (header.size() != 3 || header[0] != "BH" || !parse_int(header[1], n) || !parse_int(header[2], k)) {
    throw ParseError(line_no, "malformed header, expected 'BH <n> <k>'");
  }
  if (n < 1 || n > kMaxMatrixOrder) throw ParseError(line_no, "order n out of range");
  if (k < 1 || k > kMaxRootOrder) throw ParseError(line_no, "root order k out of range");

  std::vector<std::int64_t> exps;
  exps.reserve(static_cast<std::size_t>(n * n));
  for (std::int64_t r = 0; r < n; ++r) {
    if (!next_line()) {
      throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    }
    const auto toks = split_ws(line);
    if (static_cast<std::int64_t>(toks.size()) != n) {
      throw ParseError(line_no, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    for (auto tok : toks) {
      std::int64_t e = 0;
      if (!parse_int(tok, e)) throw ParseError(line_no, "exponent '" + std::string(tok) + "' is not an integer");
      exps.push_back(e);
    }
  }
  if (next_line()) throw ParseError(line_no, "unexpected data after " + std::to_string(n) + " rows");
  return BhMatrix(static_cast<int>(n), static_cast<int>(k), exps);
}

BhMatrix read_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

BhMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const BhMatrix& m) {
  out << "BH " << m.order() << ' ' << m.root_order() << '\n';
  for (int i = 0; i < m.order(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

std::string write_matrix(const BhMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace butson
