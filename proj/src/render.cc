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

#include "qfractal/render.h"

#include <cstdio>
#include <sstream>

#include "qfractal/constructors.h"
#include "qfractal/errors.h"

namespace qfractal {

namespace {

BigInt base_value(const BasisIndex &x, Digit base) {
    BigInt v = 0;
    for (Digit d : x.digits) {
        v = v * base + d;
    }
    return v;
}

BigInt full_extent(const SparseState &state) {
    return boost::multiprecision::pow(BigInt(state.local_dim()), static_cast<unsigned>(state.num_qudits()));
}

void check_guard(const SparseState &state) {
    if (state.size() > MAX_SUPPORT_ENTRIES) {
        throw GuardExceeded("render: support exceeds 10^6 entries");
    }
}

// Values v of the supported strings, ascending (map order is lexicographic on
// equal-length digit strings, which is numeric order).
std::vector<BigInt> support_values(const SparseState &state) {
    std::vector<BigInt> out;
    out.reserve(state.size());
    for (const auto &[x, amp] : state.entries()) {
        out.push_back(base_value(x, state.local_dim()));
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::vector<SupportInterval> support_intervals(const SparseState &state) {
    check_guard(state);
    BigInt den = full_extent(state);
    std::vector<SupportInterval> out;
    for (const auto &v : support_values(state)) {
        out.push_back({Rational(v, den), Rational(v + 1, den)});
    }
    return out;
}

std::vector<SupportInterval> merged_support_intervals(const SparseState &state) {
    std::vector<SupportInterval> out;
    for (auto &iv : support_intervals(state)) {
        if (!out.empty() && out.back().hi == iv.lo) {
            out.back().hi = iv.hi;
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

std::string render_ascii(const std::vector<SparseState> &rows, size_t width) {
    if (width == 0) {
        throw std::invalid_argument("render width must be positive");
    }
    std::ostringstream ss;
    for (const auto &state : rows) {
        check_guard(state);
        BigInt den = full_extent(state);
        std::string line(width, '.');
        BigInt w(width);
        for (const auto &v : support_values(state)) {
            // Cells i with i*den < (v+1)*w and v*w < (i+1)*den.
            BigInt first = (v * w) / den;
            BigInt last = ((v + 1) * w - 1) / den;
            for (BigInt i = first; i <= last && i < w; i++) {
                line[static_cast<size_t>(i)] = '#';
            }
        }
        ss << line << '\n';
    }
    return ss.str();
}

std::string render_svg(const std::vector<SparseState> &rows) {
    constexpr double kWidth = 810;
    constexpr double kRow = 20;
    constexpr double kGap = 10;
    double height = kGap + static_cast<double>(rows.size()) * (kRow + kGap);
    std::ostringstream ss;
    ss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth + 2 * kGap)
       << "\" height=\"" << fmt(height) << "\">\n";
    for (size_t r = 0; r < rows.size(); r++) {
        double y = kGap + static_cast<double>(r) * (kRow + kGap);
        ss << "  <g id=\"row" << r << "\">\n";
        ss << "    <rect x=\"" << fmt(kGap) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(kWidth) << "\" height=\""
           << fmt(kRow) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        for (const auto &iv : merged_support_intervals(rows[r])) {
            double lo = static_cast<double>(iv.lo);
            double hi = static_cast<double>(iv.hi);
            ss << "    <rect x=\"" << fmt(kGap + lo * kWidth) << "\" y=\"" << fmt(y) << "\" width=\""
               << fmt((hi - lo) * kWidth) << "\" height=\"" << fmt(kRow) << "\" fill=\"#000000\"/>\n";
        }
        ss << "  </g>\n";
    }
    ss << "</svg>\n";
    return ss.str();
}

}  // namespace qfractal
