// Copyright 2026 The qblock Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by the simulator engines and the benchmark harness.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qblock {

/// Requested state does not fit the configured amplitude/qubit cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Qubit index or physical slot outside the register.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Internal precondition of the blocked engine was violated by the caller.
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qblock
