// Copyright 2026 The FeatForge Authors
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

#ifndef FEATFORGE_ERRORS_H_
#define FEATFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace featforge {

// Malformed or inconsistent configuration (unknown keys, missing columns,
// out-of-range parameters). The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with the input data itself: unreadable files, unparseable cells,
// kind mismatches between tables. The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace featforge

#endif  // FEATFORGE_ERRORS_H_
