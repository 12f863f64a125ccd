// Copyright 2026 The qmatch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qmatch {

/// Violated precondition on caller-supplied arguments.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A computed quantity broke an invariant (bad POM, negative probability, ...).
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define QMATCH_REQUIRE(cond, message)                                          \
    do {                                                                       \
        if (!(cond)) {                                                         \
            throw ::qmatch::InvalidArgument(std::string(message));             \
        }                                                                      \
    } while (false)

} // namespace qmatch
