// Copyright 2026 The netfail Authors
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

#ifndef NETFAIL_ERRORS_H_
#define NETFAIL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace netfail {

// Argument and index errors use std::invalid_argument / std::out_of_range.
// The types below mark conditions where the inputs are well-formed but the
// requested model is infeasible; the CLI maps them to exit code 3.

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public InfeasibleError {
 public:
  explicit DisconnectedGraphError(const std::string& what)
      : InfeasibleError("graph is disconnected: " + what) {}
};

class CapExceededError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace netfail

#endif  // NETFAIL_ERRORS_H_
