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

#ifndef QFRACTAL_RULE_FILE_H
#define QFRACTAL_RULE_FILE_H

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "qfractal/constructors.h"

namespace qfractal {

// Rule files describe one scale step. '#' starts a comment.
//
//     qfs-rule/1
//     c 2
//     s 3
//     scale 1                  # optional: scale index of the predecessor
//     phase_order 8            # optional, default 8
//     slot 1 0 predecessor     # slot number (1..c), index, vector
//     slot 2 0 basis:00
//     slot 2 1 file:partner.qfs
//     coef 0,0 0               # index tuple, phase index
//
// `file:` paths are resolved relative to the rule file's directory.

ScaleRule parse_rule(std::string_view text, const std::filesystem::path &base_dir = ".");
ScaleRule read_rule_file(const std::filesystem::path &path);

/// Named slot vectors are written as `file:<name>`; the caller is
/// responsible for the referenced state files.
std::string serialize_rule(const ScaleRule &rule);

/// Writes the rule plus every Named slot vector as a state file next to it.
void write_rule_file(const std::filesystem::path &path, const ScaleRule &rule);

}  // namespace qfractal

#endif
