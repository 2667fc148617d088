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

#include "qfractal/state_file.h"

#include <gtest/gtest.h>

#include "qfractal/codes.h"
#include "qfractal/constructors.h"
#include "qfractal/errors.h"
#include "test_util.h"

using namespace qfractal;
using qfractal::fixtures::ket_state;

namespace {

std::string header(int n, int q, const std::string &extra = "") {
    return "qfs/1\nlocal_dim " + std::to_string(n) + "\nnum_qudits " + std::to_string(q) + "\nphase_order 8\n" + extra;
}

std::vector<SparseState> constructor_outputs() {
    std::vector<SparseState> out;
    for (int n = 0; n <= 3; n++) {
        out.push_back(build_cantor(n));
        out.push_back(build_bitflip_state(n, 1));
    }
    for (int c = 2; c <= 3; c++) {
        for (int s = 1; s <= 3; s++) {
            out.push_back(build_representative(c, s, 2, 3));
        }
    }
    for (const auto &g : build_gem_levels(4)) {
        out.push_back(g.plus);
        out.push_back(g.minus);
    }
    for (size_t n = 1; n <= 6; n++) {
        out.push_back(build_cluster(n));
    }
    out.push_back(encode(build_bell_pair(Sign::Plus), CodeSpec{CodeKind::BellPair, 2}));
    return out;
}

}  // namespace

TEST(serialize_state, scale_one_cantor) {
    SparseState s = ket_state(3, {{"00", 0}, {"01", 0}, {"02", 0}}, 3);
    EXPECT_EQ(serialize_state(s), header(3, 2, "entries 3\n00 0 3:1\n01 0 3:1\n02 0 3:1\n"));
}

TEST(serialize_state, unit_ket) {
    EXPECT_EQ(
        serialize_state(SparseState::basis(2, BasisIndex::from_string("1"))), header(2, 1, "entries 1\n1 0 1\n"));
}

TEST(serialize_state, gem_level_two) {
    EXPECT_EQ(serialize_state(fixtures::gem_plus_level2()), header(2, 4, "entries 2\n0101 0 2:1\n1010 4 2:1\n"));
}

TEST(serialize_state, provenance_line) {
    std::string text = serialize_state(build_cantor(2));
    EXPECT_NE(text.find("\nprovenance family=cantor c=2 s=3 n=2\n"), std::string::npos) << text;
    SparseState back = parse_state(text);
    EXPECT_EQ(back.provenance(), build_cantor(2).provenance());
}

TEST(serialize_state, wide_digits) {
    SparseState s(12, 2);
    s.insert(BasisIndex({0, 11}), Amplitude::radical(0, 2));
    s.insert(BasisIndex({10, 3}), Amplitude::radical(2, 2));
    std::string text = serialize_state(s);
    EXPECT_EQ(text, "qfs/1\nlocal_dim 12\nnum_qudits 2\nphase_order 8\nentries 2\n0,11 0 2:1\n10,3 2 2:1\n");
    EXPECT_EQ(parse_state(text), s);

    SparseState single(12, 1);
    single.insert(BasisIndex({11}), Amplitude(0));
    EXPECT_EQ(parse_state(serialize_state(single)), single);
}

TEST(parse_state, rejects_malformed) {
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n03 0 3:1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 2\n01 0 2:1\n00 0 2:1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 2\n01 0 2:1\n01 0 2:1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n01 0\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n0 0 1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n01 8 1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n01 0 3\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 2\n01 0 1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n01 0 1\n02 0 1\n")), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "entries 1\n0,1 0 1\n")), ParseError);
    EXPECT_THROW(parse_state("qfs/2\nlocal_dim 2\nnum_qudits 1\nphase_order 8\nentries 0\n"), ParseError);
    EXPECT_THROW(parse_state("qfs/1\nnum_qudits 1\nlocal_dim 2\nphase_order 8\nentries 0\n"), ParseError);
    EXPECT_THROW(parse_state(header(3, 2, "provenance c=2\nentries 0\n")), ParseError);
}

TEST(parse_state, examples_parse_back) {
    EXPECT_EQ(parse_state(header(3, 2, "entries 3\n00 0 3:1\n01 0 3:1\n02 0 3:1\n")), build_cantor(1));
    EXPECT_EQ(parse_state(header(2, 4, "entries 2\n0101 0 2:1\n1010 4 2:1\n")), fixtures::gem_plus_level2());
}

TEST(state_file, byte_identical_round_trip) {
    for (const auto &s : constructor_outputs()) {
        std::string text = serialize_state(s);
        SparseState back = parse_state(text);
        EXPECT_EQ(back, s);
        EXPECT_EQ(back.provenance(), s.provenance());
        EXPECT_EQ(serialize_state(back), text);
        EXPECT_EQ(serialize_state(s), text);
    }
}

TEST(state_file, disk_round_trip) {
    auto dir = fixtures::scratch_dir("state_file");
    auto path = dir / "cantor.qfs";
    write_state_file(path, build_cantor(3));
    EXPECT_EQ(read_state_file(path), build_cantor(3));
    EXPECT_EQ(read_text_file(path), serialize_state(build_cantor(3)));
    int leftovers = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        leftovers += entry.path() != path;
    }
    EXPECT_EQ(leftovers, 0);
    EXPECT_THROW(read_state_file(dir / "missing.qfs"), std::runtime_error);
}
