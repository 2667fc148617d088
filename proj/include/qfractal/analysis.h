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

#ifndef QFRACTAL_ANALYSIS_H
#define QFRACTAL_ANALYSIS_H

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfractal/constructors.h"
#include "qfractal/sparse_state.h"

namespace qfractal {

/// ln c / ln s, or log2 c when s == 1.
double fractal_dimension(int c, int s);

struct StepCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct StepReport {
    bool valid = false;
    std::vector<StepCheck> checks;
    std::optional<int> extracted_s;

    std::string str() const;
};

/// Checks that `next` is the image of `prev` under `rule` and that the rule
/// satisfies the scale-step constraints. Never throws; failures become
/// report entries.
StepReport verify_scale_step(const SparseState &prev, const SparseState &next, const ScaleRule &rule);

/// |<slot product|state>|^2 per coefficient record, snapped to k/s.
std::vector<Rational> rule_basis_probabilities(const SparseState &state, const ScaleRule &rule, const SparseState &prev);

struct ScalingReport {
    std::vector<Rational> per_scale_probabilities;
    std::vector<Rational> ratios;
    bool uniform = true;

    std::string str() const;
};

/// Common computational-basis outcome probability at each scale and the
/// ratios p(k) / p(k+1). Throws if a state is not uniform over its support.
ScalingReport probability_scaling_ratio(const std::vector<SparseState> &sequence);

/// Common outcome probability if the state is uniform over its support.
std::optional<Rational> uniform_probability(const SparseState &state);

std::vector<std::pair<size_t, size_t>> product_cut_report(const SparseState &state, const std::vector<size_t> &cuts);

using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

struct SingleQubitClifford {
    Matrix2 matrix;
    /// Shortest generating word over {H, S}, applied left to right; "I" for identity.
    std::string word;
};

/// The 24 single-qubit Cliffords modulo global phase, in BFS order from I.
const std::vector<SingleQubitClifford> &single_qubit_cliffords();

struct LocalCliffordMatch {
    std::vector<size_t> cliffords;  // index into single_qubit_cliffords() per qubit
    std::vector<std::string> words;
    double fidelity;
};

/// Searches U = U_0 (x) ... (x) U_{Q-1} over single-qubit Cliffords for
/// |<b|U|a>| > 1 - 1e-9. Returns the lexicographically first match.
std::optional<LocalCliffordMatch> lu_equivalent_by_local_clifford(const SparseState &a, const SparseState &b);

}  // namespace qfractal

#endif
