// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

// Base for every error raised by the library. `kind()` is the short
// machine-readable tag the CLI puts in its error JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Parameters or inputs outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// Exhaustive routines refuse graphs above their vertex cap.
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "size"; }
};

class ConnectivityError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "connectivity"; }
};

class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "unsupported"; }
};

// A caller-supplied hypothesis (e.g. a pruning seed) does not hold.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "precondition"; }
};

// Raised when lambda_2 is not simple, so spectral bisection is undefined.
class MultiplicityError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "multiplicity"; }
};

// Malformed graph documents.
class SchemaError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "schema"; }
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  const char* kind() const noexcept override { return "numeric"; }
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace speclab
