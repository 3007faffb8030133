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

#ifndef SCOOT_VERSION_HPP_
#define SCOOT_VERSION_HPP_

#include <string>

namespace scoot {

inline constexpr const char* kToolName = "scoot";
inline constexpr const char* kVersion = "0.1.0";

inline std::string tool_version_string() {
  return std::string(kToolName) + " " + kVersion;
}

}  // namespace scoot

#endif  // SCOOT_VERSION_HPP_
