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

#ifndef QFRACTAL_TESTS_TEST_UTIL_H
#define QFRACTAL_TESTS_TEST_UTIL_H

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qfractal/sparse_state.h"

namespace qfractal::fixtures {

/// State from literal kets, e.g. ket_state(2, {{"0101", 0}, {"1010", 4}}, 2)
/// for (1/sqrt2)(|0101> - |1010>). All terms share the magnitude 1/sqrt(base).
inline SparseState ket_state(Digit local_dim, const std::vector<std::pair<std::string, int>> &terms, std::uint64_t base) {
    SparseState s(local_dim, terms.at(0).first.size());
    for (const auto &[digits, phase] : terms) {
        s.insert(BasisIndex::from_string(digits), base == 1 ? Amplitude(phase) : Amplitude::radical(phase, base));
    }
    return s;
}

/// (1/sqrt2)(|0101> - |1010>).
inline SparseState gem_plus_level2() {
    return ket_state(2, {{"0101", 0}, {"1010", 4}}, 2);
}

/// (1/sqrt2)(|1001> - |0110>).
inline SparseState gem_minus_level2() {
    return ket_state(2, {{"1001", 0}, {"0110", 4}}, 2);
}

/// (1/2)(|0000> + |0011> + |1100> - |1111>).
inline SparseState paired_cluster_form() {
    return ket_state(2, {{"0000", 0}, {"0011", 0}, {"1100", 0}, {"1111", 4}}, 4);
}

/// The nine-term two-scale Cantor state, every amplitude 1/3.
inline SparseState cantor_scale2() {
    std::vector<std::pair<std::string, int>> terms;
    for (const char *k : {"0000", "0011", "0022", "0100", "0111", "0122", "0200", "0211", "0222"}) {
        terms.emplace_back(k, 0);
    }
    return ket_state(3, terms, 9);
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("qfractal_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace qfractal::fixtures

#endif
