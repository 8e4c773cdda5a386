// Copyright 2026 The EECS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EECS_ERRORS_H_
#define EECS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace eecs {

// Base class for every error raised by the library. The CLI maps
// ValidationError and its subclasses to exit code 1 and everything else to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not conform to a file format or a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed record in an input file. Carries the 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string &path, long line, const std::string &what)
      : ValidationError(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

// Model file written by an incompatible format version or not a model file.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Model file whose checksum does not match its contents.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A lookup for a type, entity, or relation that does not exist.
class NotFoundError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Violated numeric contract, e.g. coefficients that left the simplex.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Non-finite values produced during optimization.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace eecs

#endif  // EECS_ERRORS_H_
