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

#ifndef QFRACTAL_CODES_H
#define QFRACTAL_CODES_H

#include <string>
#include <vector>

#include "qfractal/sparse_state.h"

namespace qfractal {

enum class CodeKind { BitFlip, BellPair };

/// A self-concatenated code: the same encoder used at every one of `levels` levels.
struct CodeSpec {
    CodeKind kind = CodeKind::BitFlip;
    int levels = 1;

    /// Physical qubits per encoded qubit at one level: 3 for BitFlip, 2 for BellPair.
    size_t block_arity() const {
        return kind == CodeKind::BitFlip ? 3 : 2;
    }
    void validate() const;

    /// Parses `bitflip:L` or `bellpair:L`.
    static CodeSpec parse(std::string_view text);
    std::string str() const;

    bool operator==(const CodeSpec &) const = default;
};

/// Encoding levels count from 1 = innermost (physical) blocks.
struct Correction {
    int level;
    size_t block;

    auto operator<=>(const Correction &) const = default;
};

struct DecodeReport {
    SparseState decoded;
    std::vector<Correction> corrections;
    bool success = false;
};

SparseState encode(const SparseState &state, const CodeSpec &spec);
SparseState inject_errors(const SparseState &state, const std::vector<size_t> &positions);

/// Coherent majority decoding of the bit-flip code, innermost level first.
/// Every basis component must require the same corrections.
DecodeReport decode_majority(const SparseState &state, const CodeSpec &spec);

/// decode(inject(encode(state))) == state exactly.
bool roundtrip_check(const SparseState &state, const CodeSpec &spec, const std::vector<size_t> &error_positions);

}  // namespace qfractal

#endif
