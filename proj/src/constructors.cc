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

#include "qfractal/constructors.h"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qfractal/errors.h"

namespace qfractal {

void FractalParams::validate() const {
    if (c <= 1) {
        throw std::invalid_argument("c must be greater than 1");
    }
    if (s < 1) {
        throw std::invalid_argument("s must be at least 1");
    }
    if (n < 0) {
        throw std::invalid_argument("n must be non-negative");
    }
}

SparseState SlotVector::resolve(const SparseState &prev) const {
    if (std::holds_alternative<Predecessor>(value)) {
        return prev;
    }
    if (const auto *b = std::get_if<Basis>(&value)) {
        if (b->digits.size() != prev.num_qudits()) {
            throw std::invalid_argument(
                "basis slot vector |" + b->digits.str() + "> does not match the predecessor's " +
                std::to_string(prev.num_qudits()) + " qudits");
        }
        return SparseState::basis(prev.local_dim(), b->digits, prev.phase_order());
    }
    const auto &named = std::get<Named>(value);
    if (named.state->num_qudits() != prev.num_qudits() || named.state->local_dim() != prev.local_dim()) {
        throw std::invalid_argument("named slot vector '" + named.name + "' does not match the predecessor's shape");
    }
    return *named.state;
}

bool SlotVector::is_predecessor(const SparseState &prev) const {
    if (std::holds_alternative<Predecessor>(value)) {
        return true;
    }
    if (const auto *named = std::get_if<Named>(&value)) {
        return *named->state == prev;
    }
    return false;
}

void ScaleRule::validate_shape() const {
    params.validate();
    if (phase_order <= 0 || phase_order % 2 != 0) {
        throw std::invalid_argument("rule phase order must be a positive even integer");
    }
    if (slot_tables.size() != static_cast<size_t>(params.c)) {
        throw std::invalid_argument(
            "rule declares c=" + std::to_string(params.c) + " but has " + std::to_string(slot_tables.size()) +
            " slot tables");
    }
    if (coefficients.size() != static_cast<size_t>(params.s)) {
        throw std::invalid_argument(
            "rule declares s=" + std::to_string(params.s) + " but has " + std::to_string(coefficients.size()) +
            " nonzero coefficients");
    }
    std::set<std::vector<int>> seen;
    for (const auto &rec : coefficients) {
        if (rec.indices.size() != slot_tables.size()) {
            throw std::invalid_argument("coefficient index tuple length differs from c");
        }
        if (rec.phase_index < 0 || rec.phase_index >= phase_order) {
            throw std::invalid_argument("coefficient phase index out of range");
        }
        for (size_t j = 0; j < rec.indices.size(); j++) {
            int i = rec.indices[j];
            if (i < 0 || i >= params.s) {
                throw std::invalid_argument("coefficient index " + std::to_string(i) + " outside [0, s)");
            }
            if (!slot_tables[j].contains(i)) {
                throw std::invalid_argument(
                    "slot " + std::to_string(j + 1) + " has no vector for index " + std::to_string(i));
            }
        }
        if (!seen.insert(rec.indices).second) {
            throw std::invalid_argument("duplicate coefficient index tuple");
        }
    }
}

std::vector<std::vector<SparseState>> resolved_slot_vectors(const ScaleRule &rule, const SparseState &prev) {
    std::vector<std::vector<SparseState>> out(rule.slot_tables.size());
    for (size_t j = 0; j < rule.slot_tables.size(); j++) {
        std::set<int> used;
        for (const auto &rec : rule.coefficients) {
            used.insert(rec.indices[j]);
        }
        for (int i : used) {
            SparseState v = rule.slot_tables[j].at(i).resolve(prev);
            bool dup = false;
            for (const auto &w : out[j]) {
                dup |= (w == v);
            }
            if (!dup) {
                out[j].push_back(std::move(v));
            }
        }
    }
    return out;
}

SparseState slot_product(const ScaleRule &rule, const CoefficientRecord &record, const SparseState &prev) {
    SparseState acc = rule.slot_tables[0].at(record.indices[0]).resolve(prev);
    for (size_t j = 1; j < record.indices.size(); j++) {
        acc = tensor(acc, rule.slot_tables[j].at(record.indices[j]).resolve(prev));
    }
    return acc;
}

SparseState build_initial(Digit local_dim) {
    if (local_dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    return SparseState::basis(local_dim, BasisIndex({0}));
}

namespace {

void check_orthonormal(const std::vector<std::vector<SparseState>> &slots) {
    for (size_t j = 0; j < slots.size(); j++) {
        const auto &vs = slots[j];
        for (size_t a = 0; a < vs.size(); a++) {
            for (size_t b = a; b < vs.size(); b++) {
                double overlap = std::abs(inner_product(vs[a], vs[b]));
                double expected = a == b ? 1.0 : 0.0;
                if (std::abs(overlap - expected) > 1e-9) {
                    throw std::invalid_argument(
                        "slot " + std::to_string(j + 1) + " vectors are not orthonormal (|<v" + std::to_string(a) +
                        "|v" + std::to_string(b) + ">| = " + std::to_string(overlap) + ")");
                }
            }
        }
    }
}

Provenance next_provenance(const SparseState &prev, const ScaleRule &rule) {
    Provenance p;
    if (prev.provenance().has_value()) {
        p = *prev.provenance();
    }
    p.c = rule.params.c;
    p.s = rule.params.s;
    p.n = (p.n.has_value() ? *p.n : rule.params.n) + 1;
    return p;
}

}  // namespace

SparseState apply_scale_rule(const SparseState &prev, const ScaleRule &rule) {
    rule.validate_shape();
    if (prev.num_qudits() * rule.slot_tables.size() > MAX_QUDITS) {
        throw GuardExceeded("apply_scale_rule: output would exceed 10^4 qudits");
    }
    bool has_predecessor = false;
    for (const auto &rec : rule.coefficients) {
        for (size_t j = 0; j < rec.indices.size(); j++) {
            has_predecessor |= rule.slot_tables[j].at(rec.indices[j]).is_predecessor(prev);
        }
    }
    if (!has_predecessor) {
        throw std::invalid_argument("no coefficient references the predecessor state");
    }
    auto slots = resolved_slot_vectors(rule, prev);
    check_orthonormal(slots);

    std::vector<PhasedTerm> terms;
    terms.reserve(rule.coefficients.size());
    size_t total_support = 0;
    for (const auto &rec : rule.coefficients) {
        SparseState product = slot_product(rule, rec, prev);
        total_support += product.size();
        if (total_support > MAX_SUPPORT_ENTRIES) {
            throw GuardExceeded("apply_scale_rule: support would exceed 10^6 entries");
        }
        int r = std::lcm(product.phase_order(), rule.phase_order);
        product = product.with_phase_order(r);
        int phase = rec.phase_index * (r / rule.phase_order);
        terms.push_back({0, scaled(product, Amplitude::radical(phase, static_cast<std::uint64_t>(rule.params.s)))});
    }
    SparseState out = superpose(terms);
    if (norm_squared(out) != 1) {
        throw std::invalid_argument("scale rule output is not normalized (norm^2 = " + rational_str(norm_squared(out)) + ")");
    }
    out.set_provenance(next_provenance(prev, rule));
    return out;
}

namespace {

BasisIndex repeated(Digit d, size_t count) {
    return BasisIndex(std::vector<Digit>(count, d));
}

size_t checked_size_power(int base, int exponent, size_t limit, const char *what) {
    std::uint64_t v = checked_power(static_cast<std::uint64_t>(base), static_cast<size_t>(exponent));
    if (v > limit) {
        throw GuardExceeded(std::string(what));
    }
    return static_cast<size_t>(v);
}

}  // namespace

ScaleRule representative_rule(int c, int s, int prev_scale) {
    FractalParams params{c, s, prev_scale};
    params.validate();
    size_t width = checked_size_power(c, prev_scale, MAX_QUDITS, "representative_rule: predecessor too wide");
    ScaleRule rule;
    rule.params = params;
    rule.slot_tables.resize(c);
    for (int j = 0; j < s; j++) {
        rule.slot_tables[0][j] = SlotVector::predecessor();
        for (int slot = 1; slot < c; slot++) {
            rule.slot_tables[slot][j] = SlotVector::basis(repeated(static_cast<Digit>(j), width));
        }
        rule.coefficients.push_back({std::vector<int>(c, j), 0});
    }
    return rule;
}

ScaleRule cantor_rule(int prev_scale) {
    return representative_rule(2, 3, prev_scale);
}

ScaleRule bitflip_rule(int prev_scale, Digit logical) {
    if (logical > 1) {
        throw std::invalid_argument("bit-flip logical value must be 0 or 1");
    }
    size_t width = checked_size_power(3, prev_scale, MAX_QUDITS, "bitflip_rule: predecessor too wide");
    ScaleRule rule;
    rule.params = {3, 1, prev_scale};
    rule.slot_tables.resize(3);
    rule.slot_tables[0][0] = SlotVector::predecessor();
    rule.slot_tables[1][0] = SlotVector::basis(repeated(logical, width));
    rule.slot_tables[2][0] = SlotVector::basis(repeated(logical, width));
    rule.coefficients.push_back({{0, 0, 0}, 0});
    return rule;
}

ScaleRule gem_rule(const SparseState &partner, Sign sign) {
    ScaleRule rule;
    rule.params = {2, 2, partner.provenance() && partner.provenance()->n ? *partner.provenance()->n : 0};
    rule.slot_tables.resize(2);
    for (auto &table : rule.slot_tables) {
        table[0] = SlotVector::named("partner", partner);
        table[1] = SlotVector::predecessor();
    }
    rule.coefficients.push_back({{0, 1}, 0});
    rule.coefficients.push_back({{1, 0}, sign == Sign::Plus ? 0 : rule.phase_order / 2});
    return rule;
}

SparseState build_representative(int c, int s, int n, Digit local_dim) {
    FractalParams{c, s, n}.validate();
    if (local_dim < static_cast<Digit>(s)) {
        throw std::invalid_argument("representative state needs local dimension >= s");
    }
    checked_size_power(c, n, MAX_QUDITS, "build_representative: more than 10^4 qudits");
    checked_size_power(s, n, MAX_SUPPORT_ENTRIES, "build_representative: support exceeds 10^6 entries");

    SparseState state = build_initial(local_dim);
    size_t width = 1;
    for (int m = 0; m < n; m++) {
        // (1/sqrt s) sum_j |j...j> over the (c-1) c^m qudits appended at this scale.
        size_t block_len = static_cast<size_t>(c - 1) * width;
        SparseState block(local_dim, block_len);
        for (int j = 0; j < s; j++) {
            block.insert(repeated(static_cast<Digit>(j), block_len), Amplitude::radical(0, static_cast<std::uint64_t>(s)));
        }
        state = tensor(state, block);
        width *= static_cast<size_t>(c);
    }
    state.set_provenance(Provenance{"representative", c, s, n});
    return state;
}

SparseState build_cantor(int n) {
    SparseState state = build_representative(2, 3, n, 3);
    state.set_provenance(Provenance{"cantor", 2, 3, n});
    return state;
}

SparseState build_bell_pair(Sign sign) {
    SparseState state(2, 2);
    state.insert(BasisIndex({0, 1}), Amplitude::radical(0, 2));
    state.insert(BasisIndex({1, 0}), Amplitude::radical(sign == Sign::Plus ? 0 : DEFAULT_PHASE_ORDER / 2, 2));
    state.set_provenance(Provenance{"bellgem", 2, 2, 0});
    return state;
}

SparseState build_gem_step(const SparseState &i, const SparseState &j, Sign sign) {
    if (i.local_dim() != 2 || j.local_dim() != 2) {
        throw std::invalid_argument("gem states are built from qubits");
    }
    if (i.num_qudits() != j.num_qudits()) {
        throw std::invalid_argument("gem step inputs must have equal qubit counts");
    }
    if (i == j) {
        throw std::invalid_argument("gem step inputs must differ");
    }
    if (std::abs(inner_product(i, j)) > 1e-9) {
        throw std::invalid_argument("gem step inputs must be orthogonal");
    }
    if (2 * i.num_qudits() > MAX_QUDITS || 2 * i.size() * j.size() > MAX_SUPPORT_ENTRIES) {
        throw GuardExceeded("build_gem_step: output exceeds desk-scale limits");
    }
    int r = std::lcm(i.phase_order(), j.phase_order());
    Amplitude half = Amplitude::radical(0, 2);
    SparseState ij = scaled(tensor(i, j).with_phase_order(r), half);
    SparseState ji = scaled(tensor(j, i).with_phase_order(r), half);
    SparseState out = superpose({{0, ij}, {sign == Sign::Plus ? 0 : r / 2, ji}});
    int n = 0;
    if (i.provenance() && i.provenance()->n) {
        n = *i.provenance()->n + 1;
    }
    out.set_provenance(Provenance{"bellgem", 2, 2, n});
    return out;
}

std::vector<GemPair> build_gem_levels(int levels) {
    if (levels < 1) {
        throw std::invalid_argument("gem sequence needs at least one level");
    }
    if (levels > 13) {
        throw GuardExceeded("build_gem_sequence: more than 10^4 qubits");
    }
    std::vector<GemPair> out;
    out.push_back({build_bell_pair(Sign::Plus), build_bell_pair(Sign::Minus)});
    for (int k = 2; k <= levels; k++) {
        const GemPair &last = out.back();
        GemPair next{
            build_gem_step(last.plus, last.minus, Sign::Plus),
            build_gem_step(last.plus, last.minus, Sign::Minus),
        };
        out.push_back(std::move(next));
    }
    return out;
}

GemPair build_gem_sequence(int levels) {
    return build_gem_levels(levels).back();
}

SparseState build_bitflip_state(int n, Digit logical) {
    if (n < 0) {
        throw std::invalid_argument("n must be non-negative");
    }
    if (logical > 1) {
        throw std::invalid_argument("bit-flip logical value must be 0 or 1");
    }
    size_t width = checked_size_power(3, n, MAX_QUDITS, "build_bitflip_state: more than 10^4 qubits");
    SparseState state = SparseState::basis(2, repeated(logical, width));
    state.set_provenance(Provenance{"bitflip", 3, 1, n});
    return state;
}

SparseState build_cluster(size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > 14) {
        throw GuardExceeded("build_cluster: qubit count must be in [1, 14]");
    }
    SparseState state(2, num_qubits);
    int minus = state.phase_order() / 2;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << num_qubits); v++) {
        BasisIndex x{std::vector<Digit>(num_qubits)};
        for (size_t a = 0; a < num_qubits; a++) {
            x.digits[a] = static_cast<Digit>((v >> (num_qubits - 1 - a)) & 1);
        }
        // sigma_z on qubit a+1 rides on the |0> branch of qubit a; none after the last.
        int flips = 0;
        for (size_t a = 0; a + 1 < num_qubits; a++) {
            flips += (x[a] == 0 && x[a + 1] == 1);
        }
        state.insert(x, Amplitude::radical(flips % 2 ? minus : 0, 2, static_cast<int>(num_qubits)));
    }
    state.set_provenance(Provenance{"cluster", 2, 2, std::nullopt});
    return state;
}

}  // namespace qfractal
