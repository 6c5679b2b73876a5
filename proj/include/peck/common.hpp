// Copyright (c) 2026 The peck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace peck {

/// Arbitrary-precision signed integer. Entries of raising-operator powers and
/// Bareiss intermediates overflow every fixed-width type long before n = 6,
/// so all operator and determinant arithmetic runs on this type.
using Int = boost::multiprecision::cpp_int;

inline constexpr const char* version = "0.1.0";
inline constexpr int schema_version = 1;

/// Malformed input or violated precondition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Refusal to start a computation that exceeds a configured budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace peck
