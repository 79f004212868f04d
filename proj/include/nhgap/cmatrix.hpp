// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_CMATRIX_HPP
#define NHGAP_CMATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <string>

namespace nhgap {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Throws InvalidMatrix if m is not square or contains non-finite entries.
void validate_matrix(const CMatrix& m);

/// Parses one entry in the `re+imj` form, e.g. "0.5-0.25j", "1", "2j".
/// Locale-independent: '.' is always the decimal separator.
Complex parse_complex_entry(const std::string& token);

/// Formats an entry so that parse_complex_entry round-trips it exactly.
std::string format_complex_entry(const Complex& z);

/// Reads the `cmatrix <N>` text container. Throws SchemaError on malformed
/// input, IoError if the stream is unreadable.
CMatrix read_cmatrix(std::istream& in);
CMatrix read_cmatrix_file(const std::string& path);

void write_cmatrix(std::ostream& out, const CMatrix& m);
void write_cmatrix_file(const std::string& path, const CMatrix& m);

}  // namespace nhgap

#endif  // NHGAP_CMATRIX_HPP
