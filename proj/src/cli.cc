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

#include "qfractal/cli.h"

#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "qfractal/analysis.h"
#include "qfractal/codes.h"
#include "qfractal/constructors.h"
#include "qfractal/errors.h"
#include "qfractal/render.h"
#include "qfractal/rule_file.h"
#include "qfractal/state_file.h"

namespace qfractal {

namespace {

struct Options {
    std::string family;
    int c = 2;
    int s = 1;
    int n = 0;
    std::string sign = "+";
    int logical = 0;
    int qubits = 4;
    int local_dim = 0;
    std::string out_path;

    std::string prev_path;
    std::string next_path;
    std::string rule_path;
    std::string state_path;
    std::vector<size_t> cuts;
    std::vector<std::string> state_paths;

    std::string code_action;
    std::string code_spec;
    std::vector<size_t> errors;

    std::string a_path;
    std::string b_path;
    std::string svg_path;
    bool ascii = false;
    size_t width = 81;
};

Sign parse_sign(const std::string &text) {
    if (text == "+" || text == "plus") {
        return Sign::Plus;
    }
    if (text == "-" || text == "minus") {
        return Sign::Minus;
    }
    throw ParseError("--sign must be + or -");
}

std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::string provenance_str(const std::optional<Provenance> &p) {
    if (!p) {
        return "-";
    }
    std::string out = "family=" + p->family;
    if (p->c) {
        out += " c=" + std::to_string(*p->c);
    }
    if (p->s) {
        out += " s=" + std::to_string(*p->s);
    }
    if (p->n) {
        out += " n=" + std::to_string(*p->n);
    }
    return out;
}

SparseState generate(const Options &o) {
    const std::string &f = o.family;
    if (f == "representative") {
        Digit dim = static_cast<Digit>(o.local_dim > 0 ? o.local_dim : std::max(2, o.s));
        return build_representative(o.c, o.s, o.n, dim);
    }
    if (f == "cantor") {
        return build_cantor(o.n);
    }
    if (f == "bellgem") {
        if (o.n < 0) {
            throw std::invalid_argument("--n must be non-negative");
        }
        GemPair pair = build_gem_sequence(o.n + 1);
        return parse_sign(o.sign) == Sign::Plus ? pair.plus : pair.minus;
    }
    if (f == "bitflip") {
        return build_bitflip_state(o.n, static_cast<Digit>(o.logical));
    }
    if (f == "cluster") {
        if (o.qubits < 1) {
            throw GuardExceeded("build_cluster: qubit count must be in [1, 14]");
        }
        return build_cluster(static_cast<size_t>(o.qubits));
    }
    throw ParseError("unknown family '" + f + "'");
}

ScaleRule make_rule(const Options &o) {
    const std::string &f = o.family;
    if (f == "representative") {
        return representative_rule(o.c, o.s, o.n);
    }
    if (f == "cantor") {
        return cantor_rule(o.n);
    }
    if (f == "bitflip") {
        return bitflip_rule(o.n, static_cast<Digit>(o.logical));
    }
    if (f == "bellgem") {
        // Step from the level-(n+1) minus gem, with the level-(n+1) plus gem as partner.
        GemPair pair = build_gem_sequence(o.n + 1);
        ScaleRule rule = gem_rule(pair.plus, parse_sign(o.sign));
        std::string partner_name = std::filesystem::path(o.out_path).filename().string() + ".partner.qfs";
        for (auto &table : rule.slot_tables) {
            for (auto &[index, vec] : table) {
                if (auto *named = std::get_if<SlotVector::Named>(&vec.value)) {
                    named->name = partner_name;
                }
            }
        }
        return rule;
    }
    throw ParseError("unknown rule family '" + f + "'");
}

int run_analyze(const Options &o, std::ostream &out) {
    SparseState st = read_state_file(o.state_path);
    out << "provenance: " << provenance_str(st.provenance()) << '\n';
    out << "local_dim: " << st.local_dim() << '\n';
    out << "num_qudits: " << st.num_qudits() << '\n';
    out << "norm_squared: " << rational_str(norm_squared(st)) << '\n';
    out << "support: " << st.size() << '\n';
    auto p = uniform_probability(st);
    out << "uniform_probability: " << (p ? rational_str(*p) : std::string("-")) << '\n';
    for (const auto &[cut, rank] : product_cut_report(st, o.cuts)) {
        out << "schmidt_rank[" << cut << "]: " << rank << '\n';
    }
    return EXIT_OK;
}

int run_code(const Options &o, std::ostream &out) {
    CodeSpec spec = CodeSpec::parse(o.code_spec);
    SparseState st = read_state_file(o.state_path);
    auto emit = [&](const SparseState &result) {
        if (!o.out_path.empty()) {
            write_state_file(o.out_path, result);
        } else {
            out << serialize_state(result);
        }
    };
    if (o.code_action == "encode") {
        emit(encode(st, spec));
        return EXIT_OK;
    }
    if (o.code_action == "inject") {
        emit(inject_errors(st, o.errors));
        return EXIT_OK;
    }
    if (o.code_action == "decode") {
        DecodeReport report = decode_majority(st, spec);
        out << "corrections:";
        for (const auto &c : report.corrections) {
            out << " L" << c.level << ":B" << c.block;
        }
        out << "\nsuccess: " << (report.success ? "yes" : "no") << '\n';
        if (!o.out_path.empty()) {
            write_state_file(o.out_path, report.decoded);
        }
        return report.success ? EXIT_OK : EXIT_NEGATIVE;
    }
    if (o.code_action == "roundtrip") {
        bool ok = roundtrip_check(st, spec, o.errors);
        out << "roundtrip: " << (ok ? "true" : "false") << '\n';
        return ok ? EXIT_OK : EXIT_NEGATIVE;
    }
    throw ParseError("code action must be encode, inject, decode or roundtrip");
}

int dispatch(CLI::App &app, const Options &o, std::ostream &out) {
    if (app.got_subcommand("gen")) {
        write_state_file(o.out_path, generate(o));
        return EXIT_OK;
    }
    if (app.got_subcommand("rule")) {
        write_rule_file(o.out_path, make_rule(o));
        return EXIT_OK;
    }
    if (app.got_subcommand("dim")) {
        out << fixed12(fractal_dimension(o.c, o.s)) << '\n';
        return EXIT_OK;
    }
    if (app.got_subcommand("verify-step")) {
        StepReport report = verify_scale_step(
            read_state_file(o.prev_path), read_state_file(o.next_path), read_rule_file(o.rule_path));
        out << report.str();
        return report.valid ? EXIT_OK : EXIT_NEGATIVE;
    }
    if (app.got_subcommand("rule-probs")) {
        auto probs = rule_basis_probabilities(
            read_state_file(o.state_path), read_rule_file(o.rule_path), read_state_file(o.prev_path));
        out << "rule_basis_probabilities:";
        for (const auto &p : probs) {
            out << ' ' << rational_str(p);
        }
        out << '\n';
        return EXIT_OK;
    }
    if (app.got_subcommand("analyze")) {
        return run_analyze(o, out);
    }
    if (app.got_subcommand("scaling")) {
        std::vector<SparseState> seq;
        for (const auto &p : o.state_paths) {
            seq.push_back(read_state_file(p));
        }
        out << probability_scaling_ratio(seq).str();
        return EXIT_OK;
    }
    if (app.got_subcommand("code")) {
        return run_code(o, out);
    }
    if (app.got_subcommand("lucheck")) {
        auto match = lu_equivalent_by_local_clifford(read_state_file(o.a_path), read_state_file(o.b_path));
        if (!match) {
            out << "not equivalent under local Cliffords\n";
            return EXIT_NEGATIVE;
        }
        out << "equivalent:";
        for (const auto &w : match->words) {
            out << ' ' << w;
        }
        out << "\nfidelity: " << fixed12(match->fidelity) << '\n';
        return EXIT_OK;
    }
    if (app.got_subcommand("viz")) {
        std::vector<SparseState> rows;
        for (const auto &p : o.state_paths) {
            rows.push_back(read_state_file(p));
        }
        if (o.ascii) {
            out << render_ascii(rows, o.width);
        } else {
            write_text_file_atomic(o.svg_path, render_svg(rows));
        }
        return EXIT_OK;
    }
    throw ParseError("no subcommand given");
}

}  // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Construct and analyze quantum fractal states", "qfractal"};
    app.require_subcommand(1);

    auto *gen = app.add_subcommand("gen", "Generate a state family and write it to a state file");
    gen->add_option("--family", o.family, "representative|cantor|bellgem|bitflip|cluster")->required();
    gen->add_option("--c", o.c, "Subsystems per scale change (representative)");
    gen->add_option("--s", o.s, "Probability scaling factor (representative)");
    gen->add_option("--n", o.n, "Scale index");
    gen->add_option("--sign", o.sign, "+ or - (bellgem)");
    gen->add_option("--logical", o.logical, "Logical bit 0 or 1 (bitflip)");
    gen->add_option("--qubits", o.qubits, "Qubit count (cluster)");
    gen->add_option("--local-dim", o.local_dim, "Local dimension (representative; default max(2, s))");
    gen->add_option("-o,--out", o.out_path, "Output state file")->required();

    auto *rule = app.add_subcommand("rule", "Write the rule taking scale n to n+1 for a family");
    rule->add_option("--family", o.family, "representative|cantor|bitflip|bellgem")->required();
    rule->add_option("--c", o.c);
    rule->add_option("--s", o.s);
    rule->add_option("--n", o.n, "Scale index of the predecessor");
    rule->add_option("--sign", o.sign);
    rule->add_option("--logical", o.logical);
    rule->add_option("-o,--out", o.out_path, "Output rule file")->required();

    auto *dim = app.add_subcommand("dim", "Print the fractal dimension for (c, s)");
    dim->add_option("--c", o.c)->required();
    dim->add_option("--s", o.s)->required();

    auto *verify = app.add_subcommand("verify-step", "Verify one scale step against a rule");
    verify->add_option("--prev", o.prev_path)->required();
    verify->add_option("--next", o.next_path)->required();
    verify->add_option("--rule", o.rule_path)->required();

    auto *probs = app.add_subcommand("rule-probs", "Rule-basis probabilities of a state");
    probs->add_option("--state", o.state_path)->required();
    probs->add_option("--rule", o.rule_path)->required();
    probs->add_option("--prev", o.prev_path)->required();

    auto *analyze = app.add_subcommand("analyze", "Print norm, support and Schmidt ranks of a state");
    analyze->add_option("--state", o.state_path)->required();
    analyze->add_option("--cut", o.cuts, "Prefix cut (repeatable)");

    auto *scaling = app.add_subcommand("scaling", "Outcome-probability scaling across a sequence");
    scaling->add_option("--states", o.state_paths)->required();

    auto *code = app.add_subcommand("code", "Concatenated code operations");
    code->add_option("action", o.code_action, "encode|inject|decode|roundtrip")->required();
    code->add_option("--spec", o.code_spec, "bitflip:LEVELS or bellpair:LEVELS")->required();
    code->add_option("--state", o.state_path)->required();
    code->add_option("--errors", o.errors, "Comma separated flip positions")->delimiter(',');
    code->add_option("-o,--out", o.out_path);

    auto *lu = app.add_subcommand("lucheck", "Search for a local Clifford map from a to b");
    lu->add_option("--a", o.a_path)->required();
    lu->add_option("--b", o.b_path)->required();

    auto *viz = app.add_subcommand("viz", "Render support intervals");
    viz->add_option("--state", o.state_paths, "State file (repeatable; one row each)")->required();
    auto *svg = viz->add_option("--svg", o.svg_path, "Write SVG to this path");
    auto *ascii = viz->add_flag("--ascii", o.ascii, "Print ASCII bars");
    viz->add_option("--width", o.width, "ASCII width");
    svg->excludes(ascii);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (app.got_subcommand("viz") && !o.ascii && o.svg_path.empty()) {
            throw CLI::ValidationError("viz needs --svg OUT or --ascii");
        }
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return EXIT_USAGE;
    }

    try {
        return dispatch(app, o, out);
    } catch (const GuardExceeded &e) {
        err << "error: " << e.what() << '\n';
        return EXIT_GUARD;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    }
}

}  // namespace qfractal
