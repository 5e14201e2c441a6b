// Copyright 2026 The XQA Authors.
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

#ifndef XQA_ERRORS_H_
#define XQA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace xqa {

// Common base for everything thrown by this library, so callers can catch
// one type at the CLI boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text is not syntactically valid (malformed JSON, bad CSV row).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Syntactically valid input missing a required field or with a wrong type.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// Well-formed input that violates a semantic constraint.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// An identifier does not resolve to an entity.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& msg) : Error(msg) {}
};

// A function argument violates a precondition.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Inconsistent evaluation data (missing metadata, disjoint rating sets).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// Language model training cannot proceed (e.g. empty corpus).
class TrainingError : public Error {
 public:
  explicit TrainingError(const std::string& msg) : Error(msg) {}
};

}  // namespace xqa

#endif  // XQA_ERRORS_H_
