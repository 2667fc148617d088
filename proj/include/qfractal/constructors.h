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

#ifndef QFRACTAL_CONSTRUCTORS_H
#define QFRACTAL_CONSTRUCTORS_H

#include <map>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "qfractal/sparse_state.h"

namespace qfractal {

constexpr size_t MAX_SUPPORT_ENTRIES = 1000000;
constexpr size_t MAX_QUDITS = 10000;

/// Self-similarity parameters: c subsystems per scale change, probability
/// scaling factor s, scale index n.
struct FractalParams {
    int c = 2;
    int s = 1;
    int n = 0;

    void validate() const;
    bool operator==(const FractalParams &) const = default;
};

enum class Sign { Plus, Minus };

/// One tensor factor choice of a scale step.
struct SlotVector {
    struct Predecessor {
        bool operator==(const Predecessor &) const = default;
    };
    struct Basis {
        BasisIndex digits;
        bool operator==(const Basis &) const = default;
    };
    struct Named {
        std::string name;
        std::shared_ptr<const SparseState> state;
        bool operator==(const Named &o) const {
            return name == o.name && *state == *o.state;
        }
    };

    std::variant<Predecessor, Basis, Named> value;

    static SlotVector predecessor() {
        return {Predecessor{}};
    }
    static SlotVector basis(BasisIndex digits) {
        return {Basis{std::move(digits)}};
    }
    static SlotVector named(std::string name, SparseState state) {
        return {Named{std::move(name), std::make_shared<const SparseState>(std::move(state))}};
    }

    /// Concrete state for this slot given the predecessor.
    SparseState resolve(const SparseState &prev) const;
    /// True for Predecessor, or a Named state exactly equal to prev.
    bool is_predecessor(const SparseState &prev) const;

    bool operator==(const SlotVector &) const = default;
};

/// A nonzero coefficient alpha_{i_1..i_c} = e^{2 pi i r / R} / sqrt(s).
struct CoefficientRecord {
    std::vector<int> indices;
    int phase_index = 0;

    bool operator==(const CoefficientRecord &) const = default;
};

/// One recursive scale step: slot tables per tensor position plus exactly s
/// equal-magnitude coefficients. Phase indices are relative to phase_order.
struct ScaleRule {
    FractalParams params;
    int phase_order = DEFAULT_PHASE_ORDER;
    std::vector<std::map<int, SlotVector>> slot_tables;
    std::vector<CoefficientRecord> coefficients;

    /// Checks the prev-independent invariants: c slot tables, exactly s
    /// distinct records with indices in [0, s) that resolve to table entries.
    void validate_shape() const;

    bool operator==(const ScaleRule &) const = default;
};

/// Slot-vector states referenced by the rule, per slot, deduplicated.
std::vector<std::vector<SparseState>> resolved_slot_vectors(const ScaleRule &rule, const SparseState &prev);

/// Tensor product of the slot vectors selected by one coefficient record.
SparseState slot_product(const ScaleRule &rule, const CoefficientRecord &record, const SparseState &prev);

SparseState build_initial(Digit local_dim);

/// Sum over records of (phase / sqrt(s)) * (slot product). Throws on
/// mismatched slot vectors, missing predecessor, non-orthonormal slot
/// vectors, or ring overflow.
SparseState apply_scale_rule(const SparseState &prev, const ScaleRule &rule);

/// The rule taking the representative state at scale `prev_scale` to the next
/// scale: predecessor in slot 1, |j...j> in the remaining slots.
ScaleRule representative_rule(int c, int s, int prev_scale);
ScaleRule cantor_rule(int prev_scale);
/// Repetition-code step: predecessor followed by c - 1 copies of |i...i>.
ScaleRule bitflip_rule(int prev_scale, Digit logical);
/// Gem step with `partner` in index 0 and the predecessor in index 1:
/// (1/sqrt2)(|partner>|prev> +- |prev>|partner>).
ScaleRule gem_rule(const SparseState &partner, Sign sign);

SparseState build_representative(int c, int s, int n, Digit local_dim);
SparseState build_cantor(int n);
SparseState build_bell_pair(Sign sign);
SparseState build_gem_step(const SparseState &i, const SparseState &j, Sign sign);

struct GemPair {
    SparseState plus;
    SparseState minus;
};
/// Level 1 is (Psi+, Psi-); level k pairs the gem steps of level k-1.
GemPair build_gem_sequence(int levels);
/// All levels 1..levels, element k-1 being level k.
std::vector<GemPair> build_gem_levels(int levels);

SparseState build_bitflip_state(int n, Digit logical);
SparseState build_cluster(size_t num_qubits);

}  // namespace qfractal

#endif
