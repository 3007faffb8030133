// Copyright 2026 The Scoot Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCOOT_ERROR_HPP_
#define SCOOT_ERROR_HPP_

#include <stdexcept>

namespace scoot {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation's precondition.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Filesystem or decode failure; the message names the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed manifest or report; the message identifies the record.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A score list has zero rank variance, so rank correlation is undefined.
class DegenerateRanking : public Error {
 public:
  using Error::Error;
};

}  // namespace scoot

#endif  // SCOOT_ERROR_HPP_
