// Copyright 2026 The JSS Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace jss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed numbers, out-of-range journal parameters, unreadable files.
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exhaustive method.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A method was called outside the hypothesis class where it is correct
// (index rule with feedback, subset DP without order independence, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace jss
