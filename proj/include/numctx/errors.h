// Copyright 2026 The numctx Authors.
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

#ifndef NUMCTX_ERRORS_H_
#define NUMCTX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace numctx {

// Base of every error the library raises. Data problems derive from
// Error; broken caller contracts raise ContractError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed CSV / lexicon input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class LabelError : public ParseError {
 public:
  using ParseError::ParseError;
};

class SpanError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateError : public ParseError {
 public:
  using ParseError::ParseError;
};

class StratificationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class CompatibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace numctx

#endif  // NUMCTX_ERRORS_H_
