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

#ifndef QFRACTAL_AMPLITUDE_H
#define QFRACTAL_AMPLITUDE_H

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfractal {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

constexpr int DEFAULT_PHASE_ORDER = 8;

/// An exact nonzero amplitude e^{2 pi i r / R} * prod_b b^{-e_b / 2}.
///
/// The phase order R is not stored here; it belongs to the owning state so
/// that every amplitude of a state shares it. Magnitude bases are kept in
/// prime-factored form, so two amplitudes are equal as complex numbers iff
/// they compare equal (given the same R).
class Amplitude {
   public:
    using Factor = std::pair<std::uint64_t, int>;  // (prime, exponent)

    Amplitude() = default;
    explicit Amplitude(int phase_index) : phase_index_(phase_index) {
    }

    /// Phase index r, magnitude 1/sqrt(base)^exponent. base >= 1.
    static Amplitude radical(int phase_index, std::uint64_t base, int exponent = 1);

    /// Amplitude from explicit (base, exponent) pairs; bases may be composite and repeated.
    static Amplitude from_factors(int phase_index, const std::vector<Factor> &base_exponents);

    int phase_index() const {
        return phase_index_;
    }
    /// Canonical prime factors: strictly increasing primes, no zero exponents.
    const std::vector<Factor> &factors() const {
        return factors_;
    }

    /// Product of two amplitudes under phase order R.
    Amplitude times(const Amplitude &other, int phase_order) const;
    /// Phase rotated by delta (mod R).
    Amplitude rotated(int delta, int phase_order) const;
    /// Magnitude multiplied by a positive integer k.
    Amplitude scaled_by_integer(std::uint64_t k) const;
    /// Same value under a phase order that is a multiple of `from_order`.
    Amplitude promoted(int from_order, int to_order) const;

    bool same_magnitude(const Amplitude &other) const {
        return factors_ == other.factors_;
    }

    Rational squared_magnitude() const;
    double magnitude() const;
    std::complex<double> value(int phase_order) const;

    bool operator==(const Amplitude &other) const = default;

    /// `r b:e[,b:e...]` (exponent list `1` when the magnitude is one).
    std::string str() const;

   private:
    int phase_index_ = 0;
    std::vector<Factor> factors_;

    void add_factor(std::uint64_t base, int exponent);
};

/// Prime factorisation by trial division; n >= 1.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Exact rational rendered as `p` or `p/q`.
std::string rational_str(const Rational &q);

}  // namespace qfractal

#endif
