// Copyright 2026 The coalradio Authors
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

#ifndef COALRADIO_ERRORS_HPP
#define COALRADIO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coalradio {

// Base class of every error raised by the library. The CLI maps
// ValidationError subclasses to exit code 1 and the rest to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroDistance : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MissingLink : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SingularMatrix : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotMember : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace coalradio

#endif  // COALRADIO_ERRORS_HPP
