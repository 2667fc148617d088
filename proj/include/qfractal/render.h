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

#ifndef QFRACTAL_RENDER_H
#define QFRACTAL_RENDER_H

#include <string>
#include <vector>

#include "qfractal/sparse_state.h"

namespace qfractal {

/// [lo, hi) subinterval of the unit interval.
struct SupportInterval {
    Rational lo;
    Rational hi;

    bool operator==(const SupportInterval &) const = default;
};

/// Each supported basis string x maps to [v/N^Q, (v+1)/N^Q), v = x read in
/// base N. Output is in ascending order; adjacent intervals are not merged.
std::vector<SupportInterval> support_intervals(const SparseState &state);

/// Adjacent intervals merged.
std::vector<SupportInterval> merged_support_intervals(const SparseState &state);

/// One row of `width` characters per state: '#' where the cell overlaps the
/// support, '.' elsewhere.
std::string render_ascii(const std::vector<SparseState> &rows, size_t width = 81);

/// SVG 1.1 document with one bar row per state, stacked top to bottom.
std::string render_svg(const std::vector<SparseState> &rows);

}  // namespace qfractal

#endif
