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

#include "qfractal/sparse_state.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "qfractal/errors.h"

namespace qfractal {

BasisIndex BasisIndex::from_string(std::string_view text) {
    BasisIndex r;
    r.digits.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("basis index must consist of decimal digits: " + std::string(text));
        }
        r.digits.push_back(static_cast<Digit>(ch - '0'));
    }
    return r;
}

BasisIndex BasisIndex::operator+(const BasisIndex &other) const {
    BasisIndex r;
    r.digits.reserve(digits.size() + other.digits.size());
    r.digits.insert(r.digits.end(), digits.begin(), digits.end());
    r.digits.insert(r.digits.end(), other.digits.begin(), other.digits.end());
    return r;
}

std::string BasisIndex::str(Digit local_dim) const {
    std::string out;
    for (size_t k = 0; k < digits.size(); k++) {
        if (local_dim > 10) {
            if (k) {
                out += ',';
            }
            out += std::to_string(digits[k]);
        } else {
            out += static_cast<char>('0' + digits[k]);
        }
    }
    return out;
}

SparseState::SparseState(Digit local_dim, size_t num_qudits, int phase_order)
    : local_dim_(local_dim), num_qudits_(num_qudits), phase_order_(phase_order) {
    if (local_dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    if (phase_order <= 0 || phase_order % 2 != 0) {
        throw std::invalid_argument("phase order must be a positive even integer");
    }
}

SparseState SparseState::basis(Digit local_dim, const BasisIndex &index, int phase_order) {
    SparseState s(local_dim, index.size(), phase_order);
    s.insert(index, Amplitude(0));
    return s;
}

const Amplitude *SparseState::find(const BasisIndex &index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? nullptr : &it->second;
}

void SparseState::insert(const BasisIndex &index, const Amplitude &amplitude) {
    if (index.size() != num_qudits_) {
        throw std::invalid_argument(
            "basis index has " + std::to_string(index.size()) + " digits but the state has " +
            std::to_string(num_qudits_) + " qudits");
    }
    for (Digit d : index.digits) {
        if (d >= local_dim_) {
            throw std::invalid_argument(
                "digit " + std::to_string(d) + " out of range for local dimension " + std::to_string(local_dim_));
        }
    }
    if (amplitude.phase_index() < 0 || amplitude.phase_index() >= phase_order_) {
        throw std::invalid_argument("phase index out of range");
    }
    if (!entries_.emplace(index, amplitude).second) {
        throw std::invalid_argument("duplicate basis index " + index.str(local_dim_));
    }
}

SparseState SparseState::with_phase_order(int phase_order) const {
    if (phase_order == phase_order_) {
        return *this;
    }
    SparseState r(local_dim_, num_qudits_, phase_order);
    for (const auto &[x, amp] : entries_) {
        r.entries_.emplace_hint(r.entries_.end(), x, amp.promoted(phase_order_, phase_order));
    }
    r.provenance_ = provenance_;
    return r;
}

bool SparseState::operator==(const SparseState &other) const {
    if (local_dim_ != other.local_dim_ || num_qudits_ != other.num_qudits_) {
        return false;
    }
    if (phase_order_ != other.phase_order_) {
        int r = std::lcm(phase_order_, other.phase_order_);
        return with_phase_order(r).entries_ == other.with_phase_order(r).entries_;
    }
    return entries_ == other.entries_;
}

std::string SparseState::str() const {
    std::ostringstream ss;
    bool first = true;
    for (const auto &[x, amp] : entries_) {
        if (!first) {
            ss << " + ";
        }
        first = false;
        ss << '(' << amp.str() << ")|" << x.str(local_dim_) << '>';
    }
    if (first) {
        ss << "0";
    }
    return ss.str();
}

SparseState tensor(const SparseState &a, const SparseState &b) {
    if (a.local_dim() != b.local_dim()) {
        throw std::invalid_argument("tensor: mismatched local dimensions");
    }
    int r = std::lcm(a.phase_order(), b.phase_order());
    SparseState pa = a.with_phase_order(r);
    SparseState pb = b.with_phase_order(r);
    SparseState out(a.local_dim(), a.num_qudits() + b.num_qudits(), r);
    for (const auto &[x, ax] : pa.entries()) {
        for (const auto &[y, by] : pb.entries()) {
            out.insert(x + y, ax.times(by, r));
        }
    }
    return out;
}

SparseState scaled(const SparseState &a, const Amplitude &factor) {
    SparseState out(a.local_dim(), a.num_qudits(), a.phase_order());
    for (const auto &[x, amp] : a.entries()) {
        out.insert(x, amp.times(factor, a.phase_order()));
    }
    out.set_provenance(a.provenance());
    return out;
}

namespace {

// Sum of amplitudes landing on one basis index. Returns nullopt on exact cancellation.
std::optional<Amplitude> combine(const std::vector<Amplitude> &parts, int phase_order, const BasisIndex &where) {
    if (parts.size() == 1) {
        return parts[0];
    }
    const Amplitude &ref = parts[0];
    for (const auto &p : parts) {
        if (!p.same_magnitude(ref)) {
            throw AmplitudeRingOverflow("colliding amplitudes of different magnitude at |" + where.str() + ">");
        }
    }
    // Each phase r and r + R/2 contribute with opposite signs to one phase class.
    int half = phase_order / 2;
    std::vector<long long> weight(half, 0);
    for (const auto &p : parts) {
        int r = p.phase_index();
        if (r < half) {
            weight[r] += 1;
        } else {
            weight[r - half] -= 1;
        }
    }
    std::optional<int> cls;
    for (int k = 0; k < half; k++) {
        if (weight[k] != 0) {
            if (cls.has_value()) {
                throw AmplitudeRingOverflow("colliding amplitudes with unrelated phases at |" + where.str() + ">");
            }
            cls = k;
        }
    }
    if (!cls.has_value()) {
        return std::nullopt;
    }
    long long w = weight[*cls];
    int phase = w > 0 ? *cls : *cls + half;
    Amplitude base = Amplitude::from_factors(phase, ref.factors());
    return base.scaled_by_integer(static_cast<std::uint64_t>(w > 0 ? w : -w));
}

}  // namespace

SparseState superpose(const std::vector<PhasedTerm> &terms) {
    if (terms.empty()) {
        throw std::invalid_argument("superpose: no terms");
    }
    const SparseState &first = terms[0].state;
    int r = first.phase_order();
    for (const auto &t : terms) {
        if (t.state.local_dim() != first.local_dim() || t.state.num_qudits() != first.num_qudits()) {
            throw std::invalid_argument("superpose: terms differ in local dimension or qudit count");
        }
        r = std::lcm(r, t.state.phase_order());
    }
    std::map<BasisIndex, std::vector<Amplitude>> gathered;
    for (const auto &t : terms) {
        int scale = r / t.state.phase_order();
        int shift = ((t.phase_index % t.state.phase_order()) + t.state.phase_order()) % t.state.phase_order() * scale;
        for (const auto &[x, amp] : t.state.entries()) {
            gathered[x].push_back(amp.promoted(t.state.phase_order(), r).rotated(shift, r));
        }
    }
    SparseState out(first.local_dim(), first.num_qudits(), r);
    for (const auto &[x, parts] : gathered) {
        if (auto amp = combine(parts, r, x)) {
            out.insert(x, *amp);
        }
    }
    return out;
}

Rational norm_squared(const SparseState &a) {
    Rational total = 0;
    for (const auto &[x, amp] : a.entries()) {
        total += amp.squared_magnitude();
    }
    return total;
}

Rational outcome_probability(const SparseState &a, const BasisIndex &x) {
    if (x.size() != a.num_qudits()) {
        throw std::invalid_argument("outcome_probability: basis index length mismatch");
    }
    const Amplitude *amp = a.find(x);
    return amp ? amp->squared_magnitude() : Rational(0);
}

std::complex<double> inner_product(const SparseState &a, const SparseState &b) {
    if (a.local_dim() != b.local_dim() || a.num_qudits() != b.num_qudits()) {
        throw std::invalid_argument("inner_product: mismatched dimensions");
    }
    std::complex<double> total = 0;
    if (a.size() <= b.size()) {
        for (const auto &[x, ax] : a.entries()) {
            if (const Amplitude *bx = b.find(x)) {
                total += std::conj(ax.value(a.phase_order())) * bx->value(b.phase_order());
            }
        }
    } else {
        for (const auto &[x, bx] : b.entries()) {
            if (const Amplitude *ax = a.find(x)) {
                total += std::conj(ax->value(a.phase_order())) * bx.value(b.phase_order());
            }
        }
    }
    return total;
}

namespace {

void require_qubit_position(const SparseState &a, size_t qudit, const char *op) {
    if (a.local_dim() != 2) {
        throw std::invalid_argument(std::string(op) + " requires qubits (local dimension 2)");
    }
    if (qudit >= a.num_qudits()) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(qudit) + " out of range");
    }
}

}  // namespace

SparseState apply_bit_flip(const SparseState &a, size_t qudit) {
    require_qubit_position(a, qudit, "apply_bit_flip");
    SparseState out(a.local_dim(), a.num_qudits(), a.phase_order());
    for (const auto &[x, amp] : a.entries()) {
        BasisIndex y = x;
        y.digits[qudit] ^= 1;
        out.insert(y, amp);
    }
    out.set_provenance(a.provenance());
    return out;
}

SparseState apply_sigma_z(const SparseState &a, size_t qudit) {
    require_qubit_position(a, qudit, "apply_sigma_z");
    SparseState out(a.local_dim(), a.num_qudits(), a.phase_order());
    int half = a.phase_order() / 2;
    for (const auto &[x, amp] : a.entries()) {
        out.insert(x, x[qudit] == 1 ? amp.rotated(half, a.phase_order()) : amp);
    }
    out.set_provenance(a.provenance());
    return out;
}

std::uint64_t checked_power(std::uint64_t base, size_t exponent) {
    std::uint64_t r = 1;
    for (size_t k = 0; k < exponent; k++) {
        if (base != 0 && r > UINT64_MAX / base) {
            return UINT64_MAX;
        }
        r *= base;
    }
    return r;
}

namespace {

std::uint64_t digits_value(const std::vector<Digit> &digits, size_t begin, size_t end, Digit base) {
    std::uint64_t v = 0;
    for (size_t k = begin; k < end; k++) {
        v = v * base + digits[k];
    }
    return v;
}

}  // namespace

std::vector<std::complex<double>> to_dense(const SparseState &a) {
    std::uint64_t dim = checked_power(a.local_dim(), a.num_qudits());
    if (dim > MAX_DENSE_DIM) {
        throw GuardExceeded("to_dense: dimension exceeds 2^14");
    }
    std::vector<std::complex<double>> out(dim);
    for (const auto &[x, amp] : a.entries()) {
        out[digits_value(x.digits, 0, x.size(), a.local_dim())] = amp.value(a.phase_order());
    }
    return out;
}

size_t schmidt_rank(const SparseState &a, size_t cut) {
    if (cut == 0 || cut >= a.num_qudits()) {
        throw std::invalid_argument("schmidt_rank: cut must satisfy 0 < cut < num_qudits");
    }
    if (checked_power(a.local_dim(), cut) > MAX_SCHMIDT_SIDE ||
        checked_power(a.local_dim(), a.num_qudits() - cut) > MAX_SCHMIDT_SIDE) {
        throw GuardExceeded("schmidt_rank: coefficient matrix side exceeds 4096");
    }
    if (a.empty()) {
        return 0;
    }
    // Rows and columns outside the support are zero; only supported prefixes
    // and suffixes are materialised.
    std::map<std::vector<Digit>, Eigen::Index> rows;
    std::map<std::vector<Digit>, Eigen::Index> cols;
    for (const auto &[x, amp] : a.entries()) {
        rows.emplace(std::vector<Digit>(x.digits.begin(), x.digits.begin() + cut), 0);
        cols.emplace(std::vector<Digit>(x.digits.begin() + cut, x.digits.end()), 0);
    }
    Eigen::Index k = 0;
    for (auto &[key, idx] : rows) {
        idx = k++;
    }
    k = 0;
    for (auto &[key, idx] : cols) {
        idx = k++;
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (const auto &[x, amp] : a.entries()) {
        auto r = rows.at(std::vector<Digit>(x.digits.begin(), x.digits.begin() + cut));
        auto c = cols.at(std::vector<Digit>(x.digits.begin() + cut, x.digits.end()));
        m(r, c) = amp.value(a.phase_order());
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0) {
        return 0;
    }
    double threshold = 1e-9 * sv(0);
    size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        if (sv(i) > threshold) {
            rank++;
        }
    }
    return rank;
}

}  // namespace qfractal
