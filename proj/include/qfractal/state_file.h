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

#ifndef QFRACTAL_STATE_FILE_H
#define QFRACTAL_STATE_FILE_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qfractal/sparse_state.h"

namespace qfractal {

/// Text state format, one record per nonzero amplitude:
///
///     qfs/1
///     local_dim 3
///     num_qudits 2
///     phase_order 8
///     provenance family=cantor c=2 s=3 n=1     (optional)
///     entries 3
///     00 0 3:1
///     01 0 3:1
///     02 0 3:1
///
/// A record is `<digits> <phase_index> <base:exp[,base:exp...]>` with value
/// e^{2 pi i phase / R} * prod base^{-exp/2}; a magnitude of one is written
/// `1`. Digits are comma separated when local_dim > 10. Records are sorted
/// strictly ascending by digits.
std::string serialize_state(const SparseState &state);
SparseState parse_state(std::string_view text);

SparseState read_state_file(const std::filesystem::path &path);
/// Writes to a sibling temporary file and renames it into place.
void write_text_file_atomic(const std::filesystem::path &path, std::string_view contents);
void write_state_file(const std::filesystem::path &path, const SparseState &state);

std::string read_text_file(const std::filesystem::path &path);

/// Splits on runs of spaces/tabs.
std::vector<std::string_view> split_fields(std::string_view line);
int parse_int(std::string_view text, std::string_view what);
/// Digit string: plain decimal characters, or comma separated values
/// (always comma separated when `wide`).
BasisIndex parse_digits(std::string_view text, bool wide = false);

}  // namespace qfractal

#endif
