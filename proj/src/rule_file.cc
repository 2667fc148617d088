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

#include <map>
#include <set>
#include <sstream>

#include "qfractal/errors.h"
#include "qfractal/state_file.h"

namespace qfractal {

namespace {

constexpr std::string_view RULE_TAG = "qfs-rule/1";

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<int> parse_tuple(std::string_view text) {
    std::vector<int> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        out.push_back(parse_int(
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), "coefficient index"));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

}  // namespace

ScaleRule parse_rule(std::string_view text, const std::filesystem::path &base_dir) {
    ScaleRule rule;
    std::optional<int> c;
    std::optional<int> s;
    bool saw_tag = false;
    struct PendingSlot {
        int slot;
        int index;
        SlotVector vec;
    };
    std::vector<PendingSlot> slots;
    std::map<std::string, std::shared_ptr<const SparseState>> loaded;

    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        line_no++;
        auto f = split_fields(strip_comment(raw));
        if (f.empty()) {
            continue;
        }
        std::string where = "rule line " + std::to_string(line_no) + ": ";
        if (!saw_tag) {
            if (f.size() != 1 || f[0] != RULE_TAG) {
                throw ParseError(where + "expected '" + std::string(RULE_TAG) + "'");
            }
            saw_tag = true;
            continue;
        }
        std::string_view key = f[0];
        if ((key == "c" || key == "s" || key == "scale" || key == "phase_order") && f.size() != 2) {
            throw ParseError(where + std::string(key) + " takes one value");
        }
        if (key == "c") {
            c = parse_int(f[1], "c");
        } else if (key == "s") {
            s = parse_int(f[1], "s");
        } else if (key == "scale") {
            rule.params.n = parse_int(f[1], "scale");
        } else if (key == "phase_order") {
            rule.phase_order = parse_int(f[1], "phase_order");
        } else if (key == "slot") {
            if (f.size() != 4) {
                throw ParseError(where + "slot needs: slot <j> <index> <vector>");
            }
            int slot = parse_int(f[1], "slot number");
            int index = parse_int(f[2], "slot index");
            std::string_view spec = f[3];
            SlotVector vec;
            if (spec == "predecessor") {
                vec = SlotVector::predecessor();
            } else if (spec.starts_with("basis:")) {
                vec = SlotVector::basis(parse_digits(spec.substr(6)));
            } else if (spec.starts_with("file:")) {
                std::string name(spec.substr(5));
                auto it = loaded.find(name);
                if (it == loaded.end()) {
                    auto st = std::make_shared<const SparseState>(read_state_file(base_dir / name));
                    it = loaded.emplace(name, st).first;
                }
                vec = SlotVector{SlotVector::Named{name, it->second}};
            } else {
                throw ParseError(where + "slot vector must be predecessor, basis:<digits> or file:<path>");
            }
            slots.push_back({slot, index, std::move(vec)});
        } else if (key == "coef") {
            if (f.size() != 3) {
                throw ParseError(where + "coef needs: coef <i1,...,ic> <phase_index>");
            }
            rule.coefficients.push_back({parse_tuple(f[1]), parse_int(f[2], "phase index")});
        } else {
            throw ParseError(where + "unknown directive '" + std::string(key) + "'");
        }
    }
    if (!saw_tag) {
        throw ParseError("empty rule file");
    }
    if (!c || !s) {
        throw ParseError("rule file must declare c and s");
    }
    rule.params.c = *c;
    rule.params.s = *s;
    if (*c < 2 || *c > 64) {
        throw ParseError("rule c out of range");
    }
    rule.slot_tables.resize(static_cast<size_t>(*c));
    for (auto &p : slots) {
        if (p.slot < 1 || p.slot > *c) {
            throw ParseError("slot number " + std::to_string(p.slot) + " outside 1..c");
        }
        if (!rule.slot_tables[p.slot - 1].emplace(p.index, std::move(p.vec)).second) {
            throw ParseError("slot " + std::to_string(p.slot) + " index " + std::to_string(p.index) + " defined twice");
        }
    }
    try {
        rule.validate_shape();
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("invalid rule: ") + e.what());
    }
    return rule;
}

ScaleRule read_rule_file(const std::filesystem::path &path) {
    try {
        return parse_rule(read_text_file(path), path.parent_path().empty() ? "." : path.parent_path());
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string serialize_rule(const ScaleRule &rule) {
    std::ostringstream ss;
    ss << RULE_TAG << '\n';
    ss << "c " << rule.params.c << '\n';
    ss << "s " << rule.params.s << '\n';
    ss << "scale " << rule.params.n << '\n';
    ss << "phase_order " << rule.phase_order << '\n';
    for (size_t j = 0; j < rule.slot_tables.size(); j++) {
        for (const auto &[index, vec] : rule.slot_tables[j]) {
            ss << "slot " << (j + 1) << ' ' << index << ' ';
            if (std::holds_alternative<SlotVector::Predecessor>(vec.value)) {
                ss << "predecessor";
            } else if (const auto *b = std::get_if<SlotVector::Basis>(&vec.value)) {
                // Plain digits are ambiguous past 9, so those use commas.
                Digit max_digit = 0;
                for (Digit d : b->digits.digits) {
                    max_digit = std::max(max_digit, d);
                }
                ss << "basis:" << b->digits.str(max_digit >= 10 ? 11 : 10);
                if (max_digit >= 10 && b->digits.size() == 1) {
                    ss << ',';
                }
            } else {
                ss << "file:" << std::get<SlotVector::Named>(vec.value).name;
            }
            ss << '\n';
        }
    }
    for (const auto &rec : rule.coefficients) {
        ss << "coef ";
        for (size_t k = 0; k < rec.indices.size(); k++) {
            ss << (k ? "," : "") << rec.indices[k];
        }
        ss << ' ' << rec.phase_index << '\n';
    }
    return ss.str();
}

void write_rule_file(const std::filesystem::path &path, const ScaleRule &rule) {
    std::filesystem::path dir = path.parent_path();
    std::set<std::string> written;
    for (const auto &table : rule.slot_tables) {
        for (const auto &[index, vec] : table) {
            if (const auto *named = std::get_if<SlotVector::Named>(&vec.value)) {
                if (written.insert(named->name).second) {
                    write_state_file(dir / named->name, *named->state);
                }
            }
        }
    }
    write_text_file_atomic(path, serialize_rule(rule));
}

}  // namespace qfractal
