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

#include "qfractal/rule_file.h"

#include <gtest/gtest.h>

#include "qfractal/analysis.h"
#include "qfractal/errors.h"
#include "qfractal/state_file.h"
#include "test_util.h"

using namespace qfractal;

TEST(parse_rule, hand_written_cantor) {
    std::string text =
        "qfs-rule/1\n"
        "# two-slot Cantor step\n"
        "c 2\n"
        "s 3\n"
        "scale 1\n"
        "slot 1 0 predecessor\n"
        "slot 1 1 predecessor\n"
        "slot 1 2 predecessor\n"
        "slot 2 0 basis:00\n"
        "slot 2 1 basis:11\n"
        "slot 2 2 basis:22  # trailing comment\n"
        "coef 0,0 0\n"
        "coef 1,1 0\n"
        "coef 2,2 0\n";
    ScaleRule rule = parse_rule(text);
    EXPECT_EQ(rule, cantor_rule(1));
    EXPECT_EQ(apply_scale_rule(build_cantor(1), rule), build_cantor(2));
}

TEST(parse_rule, rejects_malformed) {
    EXPECT_THROW(parse_rule(""), ParseError);
    EXPECT_THROW(parse_rule("qfs-rule/2\nc 2\ns 1\n"), ParseError);
    EXPECT_THROW(parse_rule("qfs-rule/1\nc 2\n"), ParseError);
    EXPECT_THROW(parse_rule("qfs-rule/1\nc 2\ns 1\nslot 1 0 predecessor\nslot 2 0 basis:0\nwidget 3\ncoef 0,0 0\n"), ParseError);
    EXPECT_THROW(parse_rule("qfs-rule/1\nc 2\ns 1\nslot 3 0 predecessor\ncoef 0,0 0\n"), ParseError);
    EXPECT_THROW(
        parse_rule("qfs-rule/1\nc 2\ns 1\nslot 1 0 predecessor\nslot 1 0 predecessor\nslot 2 0 basis:0\ncoef 0,0 0\n"),
        ParseError);
    // Coefficient count must equal s.
    EXPECT_THROW(parse_rule("qfs-rule/1\nc 2\ns 2\nslot 1 0 predecessor\nslot 2 0 basis:0\ncoef 0,0 0\n"), ParseError);
    EXPECT_THROW(parse_rule("qfs-rule/1\nc 2\ns 1\nslot 1 0 predecessor\nslot 2 0 nothing\ncoef 0,0 0\n"), ParseError);
}

TEST(serialize_rule, round_trips_generated_rules) {
    std::vector<ScaleRule> rules{cantor_rule(0), cantor_rule(2), bitflip_rule(1, 1)};
    for (int c = 2; c <= 3; c++) {
        for (int s = 1; s <= 3; s++) {
            rules.push_back(representative_rule(c, s, 1));
        }
    }
    for (const auto &rule : rules) {
        std::string text = serialize_rule(rule);
        ScaleRule back = parse_rule(text);
        EXPECT_EQ(back, rule) << text;
        EXPECT_EQ(serialize_rule(back), text);
    }
}

TEST(serialize_rule, wide_basis_digits) {
    ScaleRule rule;
    rule.params = {2, 1, 0};
    rule.slot_tables = {{{0, SlotVector::predecessor()}}, {{0, SlotVector::basis(BasisIndex({11}))}}};
    rule.coefficients = {{{0, 0}, 0}};
    EXPECT_EQ(parse_rule(serialize_rule(rule)), rule);
}

TEST(rule_file, named_partner_written_alongside) {
    auto dir = fixtures::scratch_dir("rule_file");
    SparseState partner = build_bell_pair(Sign::Plus);
    ScaleRule rule = gem_rule(partner, Sign::Plus);
    write_rule_file(dir / "gem.rule", rule);
    ScaleRule back = read_rule_file(dir / "gem.rule");
    EXPECT_EQ(back, rule);
    StepReport r = verify_scale_step(build_bell_pair(Sign::Minus), fixtures::gem_plus_level2(), back);
    EXPECT_TRUE(r.valid) << r.str();
    EXPECT_EQ(r.extracted_s, 2);
}

TEST(rule_file, missing_named_file) {
    auto dir = fixtures::scratch_dir("rule_file_missing");
    write_text_file_atomic(
        dir / "x.rule", "qfs-rule/1\nc 2\ns 1\nslot 1 0 predecessor\nslot 2 0 file:absent.qfs\ncoef 0,0 0\n");
    EXPECT_THROW(read_rule_file(dir / "x.rule"), std::runtime_error);
}
