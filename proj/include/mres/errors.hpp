// Copyright 2026 The mres Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace mres {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range indices, malformed systems, bad documents.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class VariableCountMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ScalarKindMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MissingParameter : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A division that was required to be exact left a remainder. Inside the
// resultant pipeline this always means a bug, never bad input.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// Every extraneous factor tried for a specialized system vanished.
class DegenerateSpecialization : public Error {
 public:
  using Error::Error;
};

// Symbolic work refused because the matrix exceeds the configured size.
class SymbolicBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace mres
