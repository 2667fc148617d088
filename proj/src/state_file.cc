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

#include <charconv>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "qfractal/errors.h"

namespace qfractal {

namespace {

constexpr std::string_view FORMAT_TAG = "qfs/1";

std::string provenance_line(const Provenance &p) {
    std::string out = "provenance family=" + p.family;
    if (p.c) {
        out += " c=" + std::to_string(*p.c);
    }
    if (p.s) {
        out += " s=" + std::to_string(*p.s);
    }
    if (p.n) {
        out += " n=" + std::to_string(*p.n);
    }
    return out;
}

Provenance parse_provenance(const std::vector<std::string_view> &fields) {
    Provenance p;
    bool have_family = false;
    for (size_t k = 1; k < fields.size(); k++) {
        auto eq = fields[k].find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("provenance field without '=': " + std::string(fields[k]));
        }
        std::string_view key = fields[k].substr(0, eq);
        std::string_view val = fields[k].substr(eq + 1);
        if (key == "family") {
            p.family = std::string(val);
            have_family = true;
        } else if (key == "c") {
            p.c = parse_int(val, "provenance c");
        } else if (key == "s") {
            p.s = parse_int(val, "provenance s");
        } else if (key == "n") {
            p.n = parse_int(val, "provenance n");
        } else {
            throw ParseError("unknown provenance key '" + std::string(key) + "'");
        }
    }
    if (!have_family) {
        throw ParseError("provenance line lacks family=");
    }
    return p;
}

Amplitude parse_amplitude(std::string_view phase_text, std::string_view mag_text, int phase_order) {
    int phase = parse_int(phase_text, "phase index");
    if (phase < 0 || phase >= phase_order) {
        throw ParseError("phase index " + std::to_string(phase) + " outside [0, phase_order)");
    }
    if (mag_text == "1") {
        return Amplitude(phase);
    }
    std::vector<Amplitude::Factor> factors;
    std::uint64_t last_base = 0;
    size_t start = 0;
    while (start <= mag_text.size()) {
        size_t comma = mag_text.find(',', start);
        std::string_view item = mag_text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("magnitude factor must be base:exponent, got '" + std::string(item) + "'");
        }
        int base = parse_int(item.substr(0, colon), "magnitude base");
        int exp = parse_int(item.substr(colon + 1), "magnitude exponent");
        if (base < 2 || exp == 0) {
            throw ParseError("magnitude factors need base >= 2 and a nonzero exponent");
        }
        if (static_cast<std::uint64_t>(base) <= last_base) {
            throw ParseError("magnitude bases must be strictly increasing");
        }
        last_base = static_cast<std::uint64_t>(base);
        factors.emplace_back(static_cast<std::uint64_t>(base), exp);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return Amplitude::from_factors(phase, factors);
}

}  // namespace

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

int parse_int(std::string_view text, std::string_view what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return v;
}

BasisIndex parse_digits(std::string_view text, bool wide) {
    BasisIndex x;
    if (wide || text.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (true) {
            size_t comma = text.find(',', start);
            std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (item.empty() && comma == std::string_view::npos && start > 0) {
                break;  // trailing comma marks a single wide digit
            }
            int d = parse_int(item, "digit");
            if (d < 0) {
                throw ParseError("negative digit");
            }
            x.digits.push_back(static_cast<Digit>(d));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return x;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw ParseError("bad digit string '" + std::string(text) + "'");
        }
        x.digits.push_back(static_cast<Digit>(ch - '0'));
    }
    return x;
}

std::string serialize_state(const SparseState &state) {
    std::ostringstream ss;
    ss << FORMAT_TAG << '\n';
    ss << "local_dim " << state.local_dim() << '\n';
    ss << "num_qudits " << state.num_qudits() << '\n';
    ss << "phase_order " << state.phase_order() << '\n';
    if (state.provenance()) {
        ss << provenance_line(*state.provenance()) << '\n';
    }
    ss << "entries " << state.size() << '\n';
    for (const auto &[x, amp] : state.entries()) {
        ss << x.str(state.local_dim()) << ' ' << amp.str() << '\n';
    }
    return ss.str();
}

SparseState parse_state(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    size_t line_no = 0;
    auto next_fields = [&](std::string_view expect_key, size_t expect_count) {
        if (line_no >= lines.size()) {
            throw ParseError("unexpected end of state file; expected '" + std::string(expect_key) + "'");
        }
        auto f = split_fields(lines[line_no]);
        if (f.size() != expect_count || f[0] != expect_key) {
            throw ParseError("line " + std::to_string(line_no + 1) + ": expected '" + std::string(expect_key) + "'");
        }
        line_no++;
        return f;
    };

    next_fields(FORMAT_TAG, 1);
    int local_dim = parse_int(next_fields("local_dim", 2)[1], "local_dim");
    int num_qudits = parse_int(next_fields("num_qudits", 2)[1], "num_qudits");
    int phase_order = parse_int(next_fields("phase_order", 2)[1], "phase_order");
    if (local_dim < 2 || num_qudits < 0 || phase_order <= 0 || phase_order % 2 != 0) {
        throw ParseError("invalid state header values");
    }
    std::optional<Provenance> provenance;
    if (line_no < lines.size()) {
        auto f = split_fields(lines[line_no]);
        if (!f.empty() && f[0] == "provenance") {
            provenance = parse_provenance(f);
            line_no++;
        }
    }
    int count = parse_int(next_fields("entries", 2)[1], "entries");

    SparseState state(static_cast<Digit>(local_dim), static_cast<size_t>(num_qudits), phase_order);
    std::optional<BasisIndex> last;
    for (int k = 0; k < count; k++) {
        if (line_no >= lines.size()) {
            throw ParseError("state file has fewer records than declared");
        }
        auto f = split_fields(lines[line_no]);
        std::string where = "line " + std::to_string(line_no + 1) + ": ";
        if (f.size() != 3) {
            throw ParseError(where + "record must have 3 fields");
        }
        BasisIndex x = parse_digits(f[0], local_dim > 10);
        if (local_dim <= 10 && f[0].find(',') != std::string_view::npos) {
            throw ParseError(where + "digits must be concatenated when local_dim <= 10");
        }
        if (x.size() != static_cast<size_t>(num_qudits)) {
            throw ParseError(where + "record has wrong number of digits");
        }
        for (Digit d : x.digits) {
            if (d >= static_cast<Digit>(local_dim)) {
                throw ParseError(where + "digit " + std::to_string(d) + " >= local_dim");
            }
        }
        if (last) {
            if (x == *last) {
                throw ParseError(where + "duplicate basis index");
            }
            if (x < *last) {
                throw ParseError(where + "records are not sorted");
            }
        }
        try {
            state.insert(x, parse_amplitude(f[1], f[2], phase_order));
        } catch (const std::invalid_argument &e) {
            throw ParseError(where + e.what());
        }
        last = x;
        line_no++;
    }
    for (; line_no < lines.size(); line_no++) {
        if (!split_fields(lines[line_no]).empty()) {
            throw ParseError("line " + std::to_string(line_no + 1) + ": trailing content after records");
        }
    }
    state.set_provenance(provenance);
    return state;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SparseState read_state_file(const std::filesystem::path &path) {
    try {
        return parse_state(read_text_file(path));
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_text_file_atomic(const std::filesystem::path &path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << contents;
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_state_file(const std::filesystem::path &path, const SparseState &state) {
    write_text_file_atomic(path, serialize_state(state));
}

}  // namespace qfractal
