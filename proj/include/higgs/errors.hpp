/*
   Copyright 2026 The higgscover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace higgs {

enum class ErrorKind {
  UndefinedResultant,
  ZeroInput,
  Shape,
  InternalAssumption,
  InvalidPoint,
  InfiniteOrder,
  ModulusMismatch,
  NotInvertible,
  DegreeMismatch,
  HomogenizationOverflow,
  NonReducedCurve,
  PullbackSection,
  NotDepressed,
  Unsupported,
  InvalidAlgebra,
  Schema,
};

const char* to_string(ErrorKind kind);

/// All library failures are reported through this type. The kind drives the
/// CLI exit code (input-type kinds map to 2, internal ones to 3).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Schema violations in job files carry a JSON pointer to the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(ErrorKind::Schema, pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

inline bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::InternalAssumption || kind == ErrorKind::HomogenizationOverflow;
}

}  // namespace higgs
