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

#include <random>

#include <gtest/gtest.h>

using namespace qfractal;

TEST(amplitude, radical_is_prime_factored) {
    Amplitude a = Amplitude::radical(0, 4);
    ASSERT_EQ(a.factors().size(), 1u);
    EXPECT_EQ(a.factors()[0], Amplitude::Factor(2, 2));
    EXPECT_EQ(a, Amplitude::radical(0, 2, 2));
    EXPECT_EQ(a.squared_magnitude(), Rational(1, 4));

    Amplitude b = Amplitude::radical(0, 12);
    EXPECT_EQ(b.str(), "0 2:2,3:1");
    EXPECT_EQ(b.squared_magnitude(), Rational(1, 12));
}

TEST(amplitude, unit_magnitude_prints_one) {
    EXPECT_EQ(Amplitude(0).str(), "0 1");
    EXPECT_EQ(Amplitude::radical(3, 1).str(), "3 1");
    EXPECT_EQ(Amplitude(0).squared_magnitude(), 1);
}

TEST(amplitude, times_adds_phases_and_exponents) {
    Amplitude a = Amplitude::radical(6, 3);
    Amplitude b = Amplitude::radical(4, 3);
    Amplitude p = a.times(b, 8);
    EXPECT_EQ(p.phase_index(), 2);
    EXPECT_EQ(p, Amplitude::radical(2, 9));
    EXPECT_EQ(p.squared_magnitude(), Rational(1, 9));
}

TEST(amplitude, exponents_cancel_to_canonical_form) {
    Amplitude a = Amplitude::radical(0, 2).times(Amplitude::radical(0, 2, -1), 8);
    EXPECT_TRUE(a.factors().empty());
    EXPECT_EQ(a, Amplitude(0));
}

TEST(amplitude, scaled_by_integer) {
    // 2 * (1/(2 sqrt2)) = 1/sqrt2
    Amplitude a = Amplitude::radical(0, 8).scaled_by_integer(2);
    EXPECT_EQ(a, Amplitude::radical(0, 2));
    EXPECT_EQ(Amplitude::radical(0, 9).scaled_by_integer(3), Amplitude(0));
    EXPECT_THROW(Amplitude(0).scaled_by_integer(0), std::invalid_argument);
}

TEST(amplitude, value_matches_polar_form) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> phase(0, 7);
    std::uniform_int_distribution<int> base(2, 30);
    std::uniform_int_distribution<int> exp(-3, 3);
    for (int trial = 0; trial < 200; trial++) {
        int r = phase(rng);
        int b = base(rng);
        int e = exp(rng);
        Amplitude a = Amplitude::radical(r, static_cast<std::uint64_t>(b), e);
        std::complex<double> expected = std::polar(std::pow(b, -0.5 * e), 2 * M_PI * r / 8);
        EXPECT_NEAR(std::abs(a.value(8) - expected), 0, 1e-12);
        EXPECT_NEAR(static_cast<double>(a.squared_magnitude()), std::pow(b, -e), 1e-12 * std::pow(b, -e));
    }
}

TEST(amplitude, promotion_preserves_value) {
    Amplitude a = Amplitude::radical(3, 5);
    Amplitude p = a.promoted(8, 24);
    EXPECT_EQ(p.phase_index(), 9);
    EXPECT_NEAR(std::abs(a.value(8) - p.value(24)), 0, 1e-12);
    EXPECT_THROW(a.promoted(8, 12), std::invalid_argument);
}

TEST(amplitude, rotated_wraps) {
    EXPECT_EQ(Amplitude(6).rotated(4, 8).phase_index(), 2);
    EXPECT_EQ(Amplitude(1).rotated(-3, 8).phase_index(), 6);
}

TEST(amplitude, rational_str) {
    EXPECT_EQ(rational_str(Rational(1, 9)), "1/9");
    EXPECT_EQ(rational_str(Rational(3)), "3");
    EXPECT_EQ(rational_str(Rational(0)), "0");
}
