// Copyright 2026 The qfractal Authors
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

#ifndef QFRACTAL_ERRORS_H
#define QFRACTAL_ERRORS_H

#include <stdexcept>
#include <string>

namespace qfractal {

/// Raised when an operation would exceed one of the desk-scale size ceilings
/// (dense vector length, Schmidt matrix side, constructor support size).
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string &msg) : std::runtime_error(msg) {
    }
};

/// Raised when colliding amplitudes cannot be combined inside the exact
/// amplitude ring. Callers should fall back to the dense path.
struct AmplitudeRingOverflow : std::runtime_error {
    explicit AmplitudeRingOverflow(const std::string &msg) : std::runtime_error("amplitude ring overflow: " + msg) {
    }
};

/// Malformed state or rule text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {
    }
};

}  // namespace qfractal

#endif
