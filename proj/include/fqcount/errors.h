// Copyright 2026 The fqcount Authors
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

#ifndef FQCOUNT_ERRORS_H_
#define FQCOUNT_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqcount {

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured item budget. Raised before any
// work is done; the message carries the computed enumeration size.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what_for, const std::string& size,
                 std::uint64_t budget)
      : std::runtime_error(what_for + ": enumeration size " + size +
                           " exceeds budget " + std::to_string(budget)) {}
};

// A closed form produced a non-integral value, or two exact routes that must
// agree did not.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fqcount

#endif  // FQCOUNT_ERRORS_H_
