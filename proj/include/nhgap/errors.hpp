// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_ERRORS_HPP
#define NHGAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nhgap {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Input is numerically non-diagonalizable; caller must supply K and m_max.
class DefectiveMatrix : public Error {
 public:
  using Error::Error;
};

class FilterSynthesisFailure : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class CoverTooLarge : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// A promise stated by the problem definition was violated by the input.
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nhgap

#endif  // NHGAP_ERRORS_HPP
