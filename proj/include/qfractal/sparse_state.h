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

#ifndef QFRACTAL_SPARSE_STATE_H
#define QFRACTAL_SPARSE_STATE_H

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfractal/amplitude.h"

namespace qfractal {

using Digit = std::uint32_t;

/// Computational basis label. Position 0 is the leftmost ket symbol and the
/// most significant digit.
struct BasisIndex {
    std::vector<Digit> digits;

    BasisIndex() = default;
    explicit BasisIndex(std::vector<Digit> d) : digits(std::move(d)) {
    }
    /// Parses a plain digit string such as "0101" (local dimensions up to 10).
    static BasisIndex from_string(std::string_view text);

    size_t size() const {
        return digits.size();
    }
    Digit operator[](size_t k) const {
        return digits[k];
    }

    /// Concatenation x || y.
    BasisIndex operator+(const BasisIndex &other) const;

    /// Digits concatenated when local_dim <= 10, comma separated otherwise.
    std::string str(Digit local_dim = 10) const;

    auto operator<=>(const BasisIndex &) const = default;
    bool operator==(const BasisIndex &) const = default;
};

/// Construction record carried alongside a state. Not part of state equality.
struct Provenance {
    std::string family;
    std::optional<int> c;
    std::optional<int> s;
    std::optional<int> n;

    bool operator==(const Provenance &) const = default;
};

/// Sparse pure state of `num_qudits` qudits of dimension `local_dim`, storing
/// only nonzero exact amplitudes.
class SparseState {
   public:
    using Entries = std::map<BasisIndex, Amplitude>;

    SparseState(Digit local_dim, size_t num_qudits, int phase_order = DEFAULT_PHASE_ORDER);

    /// Single basis ket with amplitude one.
    static SparseState basis(Digit local_dim, const BasisIndex &index, int phase_order = DEFAULT_PHASE_ORDER);

    Digit local_dim() const {
        return local_dim_;
    }
    size_t num_qudits() const {
        return num_qudits_;
    }
    int phase_order() const {
        return phase_order_;
    }
    const Entries &entries() const {
        return entries_;
    }
    size_t size() const {
        return entries_.size();
    }
    bool empty() const {
        return entries_.empty();
    }
    const Amplitude *find(const BasisIndex &index) const;

    /// Adds a new entry. The index must be valid and not already present.
    void insert(const BasisIndex &index, const Amplitude &amplitude);

    const std::optional<Provenance> &provenance() const {
        return provenance_;
    }
    void set_provenance(std::optional<Provenance> p) {
        provenance_ = std::move(p);
    }

    /// Same state under a phase order that is a multiple of the current one.
    SparseState with_phase_order(int phase_order) const;

    /// Exact entrywise comparison after promoting both sides to a common phase
    /// order. Provenance is ignored.
    bool operator==(const SparseState &other) const;

    /// Human readable ket listing, e.g. `(0 2:1)|01> + (4 2:1)|10>`.
    std::string str() const;

   private:
    Digit local_dim_;
    size_t num_qudits_;
    int phase_order_;
    Entries entries_;
    std::optional<Provenance> provenance_;
};

/// a (x) b. Promotes to the lcm of the phase orders.
SparseState tensor(const SparseState &a, const SparseState &b);

/// Every amplitude multiplied by `factor` (phase index relative to a.phase_order()).
SparseState scaled(const SparseState &a, const Amplitude &factor);

/// One term of a superposition: phase e^{2 pi i r / R} applied to `state`,
/// with R the state's phase order.
struct PhasedTerm {
    int phase_index;
    SparseState state;
};

/// Exact sum of phased states, without renormalisation. Colliding amplitudes
/// of one magnitude combine as integer multiples of a single phase or cancel;
/// anything else raises AmplitudeRingOverflow.
SparseState superpose(const std::vector<PhasedTerm> &terms);

Rational norm_squared(const SparseState &a);
Rational outcome_probability(const SparseState &a, const BasisIndex &x);

/// <a|b> in double precision.
std::complex<double> inner_product(const SparseState &a, const SparseState &b);

SparseState apply_bit_flip(const SparseState &a, size_t qudit);
SparseState apply_sigma_z(const SparseState &a, size_t qudit);

constexpr std::uint64_t MAX_DENSE_DIM = std::uint64_t{1} << 14;
constexpr std::uint64_t MAX_SCHMIDT_SIDE = 4096;

/// N^Q with overflow saturated to UINT64_MAX.
std::uint64_t checked_power(std::uint64_t base, size_t exponent);

/// Dense amplitude vector indexed by the digits read as a base-N number.
std::vector<std::complex<double>> to_dense(const SparseState &a);

/// Numerical rank of the coefficient matrix across the cut after the first
/// `cut` qudits. Singular values <= 1e-9 * largest are treated as zero.
size_t schmidt_rank(const SparseState &a, size_t cut);

}  // namespace qfractal

#endif
