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

#include "qfractal/amplitude.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qfractal {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("cannot factorize zero");
    }
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p++) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        if (e) {
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::string rational_str(const Rational &q) {
    std::ostringstream ss;
    ss << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) {
        ss << '/' << boost::multiprecision::denominator(q);
    }
    return ss.str();
}

void Amplitude::add_factor(std::uint64_t prime, int exponent) {
    if (exponent == 0) {
        return;
    }
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime, [](const Factor &f, std::uint64_t p) {
        return f.first < p;
    });
    if (it != factors_.end() && it->first == prime) {
        it->second += exponent;
        if (it->second == 0) {
            factors_.erase(it);
        }
    } else {
        factors_.insert(it, {prime, exponent});
    }
}

Amplitude Amplitude::radical(int phase_index, std::uint64_t base, int exponent) {
    return from_factors(phase_index, {{base, exponent}});
}

Amplitude Amplitude::from_factors(int phase_index, const std::vector<Factor> &base_exponents) {
    Amplitude a(phase_index);
    for (const auto &[base, exp] : base_exponents) {
        if (base == 0) {
            throw std::invalid_argument("magnitude base must be positive");
        }
        for (const auto &[p, e] : factorize(base)) {
            a.add_factor(p, e * exp);
        }
    }
    return a;
}

Amplitude Amplitude::times(const Amplitude &other, int phase_order) const {
    Amplitude r((phase_index_ + other.phase_index_) % phase_order);
    r.factors_ = factors_;
    for (const auto &[p, e] : other.factors_) {
        r.add_factor(p, e);
    }
    return r;
}

Amplitude Amplitude::rotated(int delta, int phase_order) const {
    Amplitude r = *this;
    r.phase_index_ = ((phase_index_ + delta) % phase_order + phase_order) % phase_order;
    return r;
}

Amplitude Amplitude::scaled_by_integer(std::uint64_t k) const {
    if (k == 0) {
        throw std::invalid_argument("amplitudes are nonzero; cannot scale by 0");
    }
    Amplitude r = *this;
    // k = prod p^v contributes p^{-(-2v)/2}.
    for (const auto &[p, v] : factorize(k)) {
        r.add_factor(p, -2 * v);
    }
    return r;
}

Amplitude Amplitude::promoted(int from_order, int to_order) const {
    if (to_order % from_order != 0) {
        throw std::invalid_argument("phase order promotion must go to a multiple");
    }
    Amplitude r = *this;
    r.phase_index_ = phase_index_ * (to_order / from_order);
    return r;
}

Rational Amplitude::squared_magnitude() const {
    BigInt num = 1;
    BigInt den = 1;
    for (const auto &[p, e] : factors_) {
        BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(std::abs(e)));
        if (e > 0) {
            den *= pk;
        } else {
            num *= pk;
        }
    }
    return Rational(num, den);
}

double Amplitude::magnitude() const {
    double m = 1;
    for (const auto &[p, e] : factors_) {
        m *= std::pow(static_cast<double>(p), -0.5 * e);
    }
    return m;
}

std::complex<double> Amplitude::value(int phase_order) const {
    // Exact quarter turns avoid sin/cos rounding on the common +-1, +-i phases.
    int r = ((phase_index_ % phase_order) + phase_order) % phase_order;
    double m = magnitude();
    if ((4 * r) % phase_order == 0) {
        switch ((4 * r) / phase_order) {
            case 0:
                return {m, 0};
            case 1:
                return {0, m};
            case 2:
                return {-m, 0};
            default:
                return {0, -m};
        }
    }
    return std::polar(m, 2 * std::numbers::pi * r / phase_order);
}

std::string Amplitude::str() const {
    std::ostringstream ss;
    ss << phase_index_ << ' ';
    if (factors_.empty()) {
        ss << '1';
    }
    for (size_t k = 0; k < factors_.size(); k++) {
        if (k) {
            ss << ',';
        }
        ss << factors_[k].first << ':' << factors_[k].second;
    }
    return ss.str();
}

}  // namespace qfractal
