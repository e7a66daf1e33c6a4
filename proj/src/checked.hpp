// Copyright 2026 The cisst Authors
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

#ifndef CISST_SRC_CHECKED_HPP_
#define CISST_SRC_CHECKED_HPP_

#include <stdexcept>
#include <string>

#include "cisst/verify.hpp"

namespace cisst::detail {

// Constructors never hand out an unverified family.
inline TreeFamily checked(TreeFamily f, const char* who) {
  if (auto v = verify_characterization(f))
    throw std::logic_error(std::string(who) + " emitted a dependent family: " +
                           v->describe());
  return f;
}

}  // namespace cisst::detail

#endif  // CISST_SRC_CHECKED_HPP_
