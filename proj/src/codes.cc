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

#include "qfractal/codes.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qfractal/constructors.h"
#include "qfractal/errors.h"

namespace qfractal {

void CodeSpec::validate() const {
    if (levels < 1) {
        throw std::invalid_argument("code needs at least one level");
    }
}

CodeSpec CodeSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("code spec must look like bitflip:LEVELS or bellpair:LEVELS");
    }
    std::string_view kind = text.substr(0, colon);
    std::string_view num = text.substr(colon + 1);
    CodeSpec spec;
    if (kind == "bitflip") {
        spec.kind = CodeKind::BitFlip;
    } else if (kind == "bellpair") {
        spec.kind = CodeKind::BellPair;
    } else {
        throw ParseError("unknown code kind '" + std::string(kind) + "'");
    }
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), spec.levels);
    if (ec != std::errc() || ptr != num.data() + num.size() || spec.levels < 1) {
        throw ParseError("bad code level count '" + std::string(num) + "'");
    }
    return spec;
}

std::string CodeSpec::str() const {
    return std::string(kind == CodeKind::BitFlip ? "bitflip:" : "bellpair:") + std::to_string(levels);
}

namespace {

void require_qubits(const SparseState &state, const char *op) {
    if (state.local_dim() != 2) {
        throw std::invalid_argument(std::string(op) + " requires qubits (local dimension 2)");
    }
}

SparseState encode_bitflip_once(const SparseState &state) {
    SparseState out(2, state.num_qudits() * 3, state.phase_order());
    for (const auto &[x, amp] : state.entries()) {
        BasisIndex y;
        y.digits.reserve(x.size() * 3);
        for (Digit d : x.digits) {
            y.digits.insert(y.digits.end(), 3, d);
        }
        out.insert(y, amp);
    }
    return out;
}

SparseState encode_bellpair_once(const SparseState &state) {
    const SparseState plus = build_bell_pair(Sign::Plus);
    const SparseState minus = build_bell_pair(Sign::Minus);
    if (state.size() * (size_t{1} << std::min<size_t>(state.num_qudits(), 40)) > MAX_SUPPORT_ENTRIES) {
        throw GuardExceeded("encode: Bell-pair encoding support exceeds 10^6 entries");
    }
    std::vector<PhasedTerm> terms;
    for (const auto &[x, amp] : state.entries()) {
        SparseState product = SparseState::basis(2, BasisIndex{}, state.phase_order());
        for (Digit d : x.digits) {
            product = tensor(product, d == 0 ? plus : minus);
        }
        product = product.with_phase_order(std::lcm(product.phase_order(), state.phase_order()));
        terms.push_back({0, scaled(product, amp.promoted(state.phase_order(), product.phase_order()))});
    }
    if (terms.empty()) {
        return SparseState(2, state.num_qudits() * 2, state.phase_order());
    }
    return superpose(terms);
}

}  // namespace

SparseState encode(const SparseState &state, const CodeSpec &spec) {
    spec.validate();
    require_qubits(state, "encode");
    size_t q = state.num_qudits();
    for (int k = 0; k < spec.levels; k++) {
        q *= spec.block_arity();
        if (q > MAX_QUDITS) {
            throw GuardExceeded("encode: more than 10^4 physical qubits");
        }
    }
    SparseState out = state;
    for (int k = 0; k < spec.levels; k++) {
        out = spec.kind == CodeKind::BitFlip ? encode_bitflip_once(out) : encode_bellpair_once(out);
    }
    return out;
}

SparseState inject_errors(const SparseState &state, const std::vector<size_t> &positions) {
    require_qubits(state, "inject_errors");
    std::set<size_t> seen;
    for (size_t p : positions) {
        if (p >= state.num_qudits()) {
            throw std::out_of_range("error position " + std::to_string(p) + " out of range");
        }
        if (!seen.insert(p).second) {
            throw std::invalid_argument("error positions must be distinct");
        }
    }
    SparseState out = state;
    for (size_t p : positions) {
        out = apply_bit_flip(out, p);
    }
    return out;
}

DecodeReport decode_majority(const SparseState &state, const CodeSpec &spec) {
    spec.validate();
    if (spec.kind != CodeKind::BitFlip) {
        throw std::invalid_argument("majority decoding is only defined for the bit-flip code");
    }
    require_qubits(state, "decode_majority");
    size_t block = 1;
    for (int k = 0; k < spec.levels; k++) {
        block *= 3;
    }
    if (state.num_qudits() % block != 0 || state.num_qudits() == 0) {
        throw std::invalid_argument(
            "qubit count " + std::to_string(state.num_qudits()) + " is not divisible by 3^" + std::to_string(spec.levels));
    }

    DecodeReport report{state, {}, false};
    for (int level = 1; level <= spec.levels; level++) {
        const SparseState &cur = report.decoded;
        size_t blocks = cur.num_qudits() / 3;
        std::optional<std::vector<size_t>> agreed;
        std::vector<PhasedTerm> terms;
        for (const auto &[x, amp] : cur.entries()) {
            BasisIndex y{std::vector<Digit>(blocks)};
            std::vector<size_t> fixes;
            for (size_t b = 0; b < blocks; b++) {
                int ones = static_cast<int>(x[3 * b] + x[3 * b + 1] + x[3 * b + 2]);
                y.digits[b] = ones >= 2 ? 1 : 0;
                if (ones == 1 || ones == 2) {
                    fixes.push_back(b);
                }
            }
            if (!agreed) {
                agreed = fixes;
            } else if (*agreed != fixes) {
                throw std::runtime_error(
                    "inconsistent corrections across basis components at level " + std::to_string(level) +
                    "; the input is not a correctable code state");
            }
            SparseState ket(2, blocks, cur.phase_order());
            ket.insert(y, amp);
            terms.push_back({0, std::move(ket)});
        }
        if (terms.empty()) {
            report.decoded = SparseState(2, blocks, cur.phase_order());
        } else {
            report.decoded = superpose(terms);
        }
        if (agreed) {
            for (size_t b : *agreed) {
                report.corrections.push_back({level, b});
            }
        }
    }
    report.success = report.decoded.num_qudits() == state.num_qudits() / block;
    return report;
}

bool roundtrip_check(const SparseState &state, const CodeSpec &spec, const std::vector<size_t> &error_positions) {
    SparseState noisy = inject_errors(encode(state, spec), error_positions);
    DecodeReport report = decode_majority(noisy, spec);
    return report.success && report.decoded == state;
}

}  // namespace qfractal
