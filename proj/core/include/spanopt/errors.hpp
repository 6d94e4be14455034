// Copyright 2026 The spanopt Authors
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

#ifndef SPANOPT_ERRORS_HPP_
#define SPANOPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spanopt {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance cannot be satisfied at all (unreachable pair, bound below the
// true distance, ...).
class InfeasibleInstanceError : public Error {
 public:
  using Error::Error;
};

// A configured size budget would be exceeded; the operation refused to run.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A randomized procedure ran out of retries.
class RoundingFailureError : public Error {
 public:
  using Error::Error;
};

// Malformed text input.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace spanopt

#endif  // SPANOPT_ERRORS_HPP_
