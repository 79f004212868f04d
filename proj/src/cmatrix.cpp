// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/cmatrix.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nhgap/errors.hpp"

namespace nhgap {

void validate_matrix(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidMatrix("matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw InvalidMatrix("matrix contains non-finite entries");
  }
}

namespace {

// Parses a double starting at s[pos]; advances pos. Locale-independent.
double parse_double_at(const std::string& s, size_t& pos) {
  const char* begin = s.data() + pos;
  const char* end = s.data() + s.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{}) {
    throw SchemaError("bad numeric literal in matrix entry: '" + s + "'");
  }
  pos += static_cast<size_t>(ptr - begin);
  return value;
}

}  // namespace

Complex parse_complex_entry(const std::string& token) {
  if (token.empty()) throw SchemaError("empty matrix entry");
  size_t pos = 0;
  double first = parse_double_at(token, pos);
  if (pos == token.size()) return {first, 0.0};
  if (token[pos] == 'j') {
    if (pos + 1 != token.size()) {
      throw SchemaError("trailing characters in matrix entry: '" + token + "'");
    }
    return {0.0, first};
  }
  if (token[pos] != '+' && token[pos] != '-') {
    throw SchemaError("malformed matrix entry: '" + token + "'");
  }
  // from_chars rejects an explicit leading '+'.
  if (token[pos] == '+') ++pos;
  double second = parse_double_at(token, pos);
  if (pos + 1 != token.size() || token[pos] != 'j') {
    throw SchemaError("matrix entry must end in 'j': '" + token + "'");
  }
  return {first, second};
}

std::string format_complex_entry(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", z.real());
  std::string out = buf;
  std::snprintf(buf, sizeof(buf), "%.17g", z.imag());
  if (buf[0] != '-') out += '+';
  out += buf;
  out += 'j';
  return out;
}

CMatrix read_cmatrix(std::istream& in) {
  std::string tag;
  long n = 0;
  if (!(in >> tag >> n)) throw SchemaError("missing 'cmatrix <N>' header");
  if (tag != "cmatrix") throw SchemaError("expected 'cmatrix' header, got '" + tag + "'");
  if (n <= 0) throw SchemaError("matrix dimension must be positive");
  CMatrix m(n, n);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      std::string token;
      if (!(in >> token)) {
        throw SchemaError("matrix file truncated at row " + std::to_string(r));
      }
      m(r, c) = parse_complex_entry(token);
    }
  }
  validate_matrix(m);
  return m;
}

CMatrix read_cmatrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open matrix file: " + path);
  return read_cmatrix(f);
}

void write_cmatrix(std::ostream& out, const CMatrix& m) {
  out << "cmatrix " << m.rows() << "\n";
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_complex_entry(m(r, c));
    }
    out << "\n";
  }
}

void write_cmatrix_file(const std::string& path, const CMatrix& m) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open file for writing: " + path);
  write_cmatrix(f, m);
  if (!f.good()) throw IoError("write failed: " + path);
}

}  // namespace nhgap
