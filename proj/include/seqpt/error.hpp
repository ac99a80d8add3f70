// Copyright 2026 The seqpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace seqpt {

/// Base class for every error raised by the library. The CLI maps the
/// subclasses onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or matrix dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A dense operation was requested above the supported qubit cap.
class DenseCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed Pauli string.
class LabelParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed channel spec, triplet log or other input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Channel fails validation (not CPTP within tolerance, bad weights, ...).
class InvalidChannelError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Triplets all come from one MUB base, so no label can be solved for.
class SingleBaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An invariant that the algebra guarantees was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqpt
