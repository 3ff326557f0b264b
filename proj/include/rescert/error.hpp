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

#ifndef RESCERT_ERROR_HPP_
#define RESCERT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rescert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent user input (documents, flags, indices).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A precondition of an operation does not hold for the given arguments.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A randomized construction ran out of attempts.
class RetryBudgetExhausted : public Error {
 public:
  explicit RetryBudgetExhausted(const std::string& what) : Error(what) {}
};

}  // namespace rescert

#endif  // RESCERT_ERROR_HPP_
