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

#include "qfractal/analysis.h"

#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "qfractal/errors.h"

namespace qfractal {

double fractal_dimension(int c, int s) {
    if (c <= 1 || s < 1) {
        throw std::invalid_argument("fractal_dimension requires c > 1 and s >= 1");
    }
    if (s == 1) {
        return std::log2(static_cast<double>(c));
    }
    return std::log(static_cast<double>(c)) / std::log(static_cast<double>(s));
}

std::string StepReport::str() const {
    std::ostringstream ss;
    ss << (valid ? "valid" : "invalid") << '\n';
    for (const auto &c : checks) {
        ss << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) {
            ss << ": " << c.detail;
        }
        ss << '\n';
    }
    ss << "  extracted_s: " << (extracted_s ? std::to_string(*extracted_s) : std::string("-")) << '\n';
    return ss.str();
}

namespace {

// Overlap probabilities |<slot product|state>|^2 per record, unsnapped.
std::vector<double> raw_rule_overlaps(const SparseState &state, const ScaleRule &rule, const SparseState &prev) {
    std::vector<double> out;
    for (const auto &rec : rule.coefficients) {
        SparseState product = slot_product(rule, rec, prev);
        if (product.num_qudits() != state.num_qudits() || product.local_dim() != state.local_dim()) {
            throw std::invalid_argument("rule slot products do not match the state's shape");
        }
        out.push_back(std::norm(inner_product(product, state)));
    }
    return out;
}

std::optional<int> extract_s(const std::vector<double> &overlaps) {
    if (overlaps.empty() || overlaps[0] < 1e-9) {
        return std::nullopt;
    }
    double total = 0;
    for (double p : overlaps) {
        if (std::abs(p - overlaps[0]) > 1e-9) {
            return std::nullopt;
        }
        total += p;
    }
    if (std::abs(total - 1) > 1e-9) {
        return std::nullopt;
    }
    double inv = 1 / overlaps[0];
    long long k = std::llround(inv);
    if (std::abs(inv - static_cast<double>(k)) > 1e-6) {
        return std::nullopt;
    }
    return static_cast<int>(k);
}

}  // namespace

StepReport verify_scale_step(const SparseState &prev, const SparseState &next, const ScaleRule &rule) {
    StepReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    bool shape_ok = true;
    try {
        rule.validate_shape();
        add("coefficients", true,
            std::to_string(rule.coefficients.size()) + " records, each |alpha|^2 = 1/" + std::to_string(rule.params.s));
    } catch (const std::exception &e) {
        shape_ok = false;
        add("coefficients", false, e.what());
    }

    bool slots_ok = shape_ok;
    if (shape_ok) {
        bool has_pred = false;
        for (const auto &rec : rule.coefficients) {
            for (size_t j = 0; j < rec.indices.size(); j++) {
                has_pred |= rule.slot_tables[j].at(rec.indices[j]).is_predecessor(prev);
            }
        }
        add("predecessor", has_pred, has_pred ? "" : "no slot resolves to the predecessor");

        try {
            auto slots = resolved_slot_vectors(rule, prev);
            std::string worst;
            bool ok = true;
            for (size_t j = 0; j < slots.size() && ok; j++) {
                for (size_t a = 0; a < slots[j].size() && ok; a++) {
                    for (size_t b = a; b < slots[j].size() && ok; b++) {
                        double overlap = std::abs(inner_product(slots[j][a], slots[j][b]));
                        if (std::abs(overlap - (a == b ? 1.0 : 0.0)) > 1e-9) {
                            ok = false;
                            worst = "slot " + std::to_string(j + 1) + " overlap " + std::to_string(overlap);
                        }
                    }
                }
            }
            add("orthonormality", ok, worst);
            slots_ok = ok && has_pred;
        } catch (const std::exception &e) {
            slots_ok = false;
            add("orthonormality", false, e.what());
        }
    } else {
        add("predecessor", false, "skipped: malformed rule");
        add("orthonormality", false, "skipped: malformed rule");
    }

    if (slots_ok) {
        try {
            SparseState rebuilt = apply_scale_rule(prev, rule);
            bool same = rebuilt == next;
            add("reconstruction", same, same ? "" : "rule applied to prev differs from next");
        } catch (const std::exception &e) {
            add("reconstruction", false, e.what());
        }
    } else {
        add("reconstruction", false, "skipped: rule constraints failed");
    }

    Rational norm = norm_squared(next);
    add("norm", norm == 1, "norm^2 = " + rational_str(norm));

    report.valid = true;
    for (const auto &c : report.checks) {
        report.valid &= c.passed;
    }
    if (shape_ok) {
        try {
            report.extracted_s = extract_s(raw_rule_overlaps(next, rule, prev));
        } catch (const std::exception &) {
            report.extracted_s = std::nullopt;
        }
    }
    return report;
}

std::vector<Rational> rule_basis_probabilities(const SparseState &state, const ScaleRule &rule, const SparseState &prev) {
    rule.validate_shape();
    if (state.num_qudits() != prev.num_qudits() * rule.slot_tables.size()) {
        throw std::invalid_argument("state qudit count is not c times the predecessor's");
    }
    std::vector<Rational> out;
    int s = rule.params.s;
    for (double p : raw_rule_overlaps(state, rule, prev)) {
        double scaled_p = p * s;
        long long k = std::llround(scaled_p);
        if (std::abs(p - static_cast<double>(k) / s) > 1e-9) {
            throw std::runtime_error("rule-basis probability " + std::to_string(p) + " is not a multiple of 1/" + std::to_string(s));
        }
        out.emplace_back(k, s);
    }
    return out;
}

std::optional<Rational> uniform_probability(const SparseState &state) {
    if (state.empty()) {
        return std::nullopt;
    }
    const Amplitude &first = state.entries().begin()->second;
    for (const auto &[x, amp] : state.entries()) {
        if (!amp.same_magnitude(first)) {
            return std::nullopt;
        }
    }
    return first.squared_magnitude();
}

std::string ScalingReport::str() const {
    std::ostringstream ss;
    ss << "probabilities:";
    for (const auto &p : per_scale_probabilities) {
        ss << ' ' << rational_str(p);
    }
    ss << "\nratios:";
    for (const auto &r : ratios) {
        ss << ' ' << rational_str(r);
    }
    ss << "\nuniform: " << (uniform ? "yes" : "no") << '\n';
    return ss.str();
}

ScalingReport probability_scaling_ratio(const std::vector<SparseState> &sequence) {
    ScalingReport report;
    for (size_t k = 0; k < sequence.size(); k++) {
        auto p = uniform_probability(sequence[k]);
        if (!p) {
            throw std::invalid_argument("state " + std::to_string(k) + " is not uniform over its support");
        }
        report.per_scale_probabilities.push_back(*p);
    }
    for (size_t k = 0; k + 1 < report.per_scale_probabilities.size(); k++) {
        report.ratios.push_back(report.per_scale_probabilities[k] / report.per_scale_probabilities[k + 1]);
    }
    return report;
}

std::vector<std::pair<size_t, size_t>> product_cut_report(const SparseState &state, const std::vector<size_t> &cuts) {
    std::vector<std::pair<size_t, size_t>> out;
    out.reserve(cuts.size());
    for (size_t cut : cuts) {
        out.emplace_back(cut, schmidt_rank(state, cut));
    }
    return out;
}

namespace {

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Matrix2 strip_global_phase(Matrix2 m) {
    for (const auto &x : m) {
        if (std::abs(x) > 1e-9) {
            std::complex<double> unphase = std::conj(x) / std::abs(x);
            for (auto &y : m) {
                y *= unphase;
            }
            break;
        }
    }
    return m;
}

bool close(const Matrix2 &a, const Matrix2 &b) {
    for (size_t k = 0; k < 4; k++) {
        if (std::abs(a[k] - b[k]) > 1e-9) {
            return false;
        }
    }
    return true;
}

std::vector<SingleQubitClifford> generate_cliffords() {
    const double h = 1 / std::sqrt(2.0);
    const std::array<std::pair<char, Matrix2>, 2> gens{{
        {'H', Matrix2{h, h, h, -h}},
        {'S', Matrix2{1, 0, 0, std::complex<double>(0, 1)}},
    }};
    std::vector<SingleQubitClifford> group{{Matrix2{1, 0, 0, 1}, "I"}};
    std::deque<size_t> frontier{0};
    while (!frontier.empty()) {
        size_t k = frontier.front();
        frontier.pop_front();
        for (const auto &[name, g] : gens) {
            Matrix2 m = strip_global_phase(matmul(g, group[k].matrix));
            bool known = false;
            for (const auto &e : group) {
                known |= close(e.matrix, m);
            }
            if (!known) {
                std::string word = group[k].word == "I" ? std::string(1, name) : group[k].word + name;
                group.push_back({m, word});
                frontier.push_back(group.size() - 1);
            }
        }
    }
    return group;
}

using Vec = std::vector<std::complex<double>>;

void apply_single_qubit(const Matrix2 &u, size_t qubit, size_t num_qubits, const Vec &in, Vec &out) {
    size_t stride = size_t{1} << (num_qubits - 1 - qubit);
    for (size_t i = 0; i < in.size(); i++) {
        if (i & stride) {
            continue;
        }
        auto a0 = in[i];
        auto a1 = in[i | stride];
        out[i] = u[0] * a0 + u[1] * a1;
        out[i | stride] = u[2] * a0 + u[3] * a1;
    }
}

}  // namespace

const std::vector<SingleQubitClifford> &single_qubit_cliffords() {
    static const std::vector<SingleQubitClifford> group = generate_cliffords();
    return group;
}

std::optional<LocalCliffordMatch> lu_equivalent_by_local_clifford(const SparseState &a, const SparseState &b) {
    if (a.local_dim() != 2 || b.local_dim() != 2) {
        throw std::invalid_argument("local Clifford search requires qubits");
    }
    if (a.num_qudits() != b.num_qudits()) {
        throw std::invalid_argument("local Clifford search requires equal qubit counts");
    }
    size_t q = a.num_qudits();
    if (q > 5) {
        throw GuardExceeded("local Clifford search is limited to 5 qubits");
    }
    const auto &group = single_qubit_cliffords();
    Vec target = to_dense(b);
    std::vector<Vec> stack(q + 1, Vec(target.size()));
    stack[0] = to_dense(a);
    std::vector<size_t> choice(q, 0);

    // Depth-first in lexicographic order of the per-qubit Clifford indices.
    std::optional<LocalCliffordMatch> found;
    auto search = [&](auto &&self, size_t depth) -> bool {
        if (depth == q) {
            std::complex<double> overlap = 0;
            for (size_t i = 0; i < target.size(); i++) {
                overlap += std::conj(target[i]) * stack[q][i];
            }
            double fidelity = std::abs(overlap);
            if (fidelity > 1 - 1e-9) {
                LocalCliffordMatch m{choice, {}, fidelity};
                for (size_t k : choice) {
                    m.words.push_back(group[k].word);
                }
                found = std::move(m);
                return true;
            }
            return false;
        }
        for (size_t k = 0; k < group.size(); k++) {
            choice[depth] = k;
            apply_single_qubit(group[k].matrix, depth, q, stack[depth], stack[depth + 1]);
            if (self(self, depth + 1)) {
                return true;
            }
        }
        return false;
    };
    search(search, 0);
    return found;
}

}  // namespace qfractal
