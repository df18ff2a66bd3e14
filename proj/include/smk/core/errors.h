// Copyright 2026 The Authors.
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

#ifndef SMK_CORE_ERRORS_H_
#define SMK_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace smk {

// Element id outside [0, n) or an instance that violates its invariants.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke an API contract, e.g. an empty oracle batch.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Algorithm parameters out of range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input file did not parse. The message carries the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Input parsed but the data is unusable (non-finite weight, zero vector...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute force asked to enumerate an instance above its size cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smk

#endif  // SMK_CORE_ERRORS_H_
