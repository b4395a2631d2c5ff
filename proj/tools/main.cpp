// ------------------------------------------------------------------------
// ectk — command-line front end for the election-control toolkit.
//
// Subcommands: decide, fset, compare, classify-all, verify, search,
// export-corpus.  Exit codes: 0 = yes/pass, 1 = no/fail/exhausted,
// 2 = usage error, 3 = I/O or parse error.
// ------------------------------------------------------------------------

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ectk/control.hpp"
#include "ectk/corpus.hpp"
#include "ectk/elections.hpp"
#include "ectk/relations.hpp"
#include "ectk/search.hpp"
#include "ectk/verify.hpp"

using namespace ectk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rule parse_rule(const std::string& s) {
    if (auto r = rule_from_string(s)) return *r;
    throw UsageError("unknown voting system '" + s + "'");
}

ControlType parse_type(const std::string& s) {
    if (auto t = control_type_from_string(s)) return *t;
    throw UsageError("unknown control type '" + s + "'");
}

WitnessRecord load_record(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

ReducedInstance load_instance(Rule rule, const std::string& path) {
    const WitnessRecord rec = load_record(path);
    if (rec.rule != rule)
        throw UsageError(path + " is a " + std::string(to_string(rec.rule)) +
                         " election, not " + to_string(rule));
    return rec.to_reduced();
}

std::string set_text(const Election& e, CandMask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < e.universe_size(); ++i) {
        if (!((m >> i) & 1u)) continue;
        if (!first) out += ", ";
        out += e.names[i];
        first = false;
    }
    return out + "}";
}

// the chosen structure behind a yes, labeled per action
std::string witness_text(const ControlType& t, const ReducedInstance& r,
                         const std::vector<int>& w) {
    std::string label, body;
    const bool by_name = t.action == Action::AddCand || t.action == Action::UnlimitedAddCand ||
                         t.action == Action::DeleteCand ||
                         t.action == Action::PartitionCand ||
                         t.action == Action::RunoffPartitionCand;
    switch (t.action) {
        case Action::AddCand:
        case Action::UnlimitedAddCand: label = "add-candidates:"; break;
        case Action::DeleteCand: label = "delete-candidates:"; break;
        case Action::DeleteVoter: label = "delete-votes:"; break;
        case Action::AddVoter: label = "add-votes:"; break;
        case Action::PartitionVoter: label = "first-group-votes:"; break;
        case Action::PartitionCand:
        case Action::RunoffPartitionCand: label = "first-group-candidates:"; break;
    }
    for (int i : w)
        body += " " + (by_name ? r.election.names[i] : "#" + std::to_string(i));
    if (body.empty()) body = " (none)";
    return label + body;
}

std::vector<CorpusEntry> corpus_from_dir(Rule rule, const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path sub = fs::path(dir) / to_string(rule);
    if (!fs::is_directory(sub)) throw IoError("no directory " + sub.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(sub))
        if (entry.path().extension() == ".election") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const fs::path& f : files) {
        const WitnessRecord rec = load_record(f.string());
        if (rec.rule != rule)
            throw IoError(f.string() + " is not a " + std::string(to_string(rule)) +
                          " election");
        out.push_back({f.stem().string(), rec.to_reduced()});
    }
    if (out.empty()) throw IoError("no .election files under " + sub.string());
    return out;
}

int focus_index(const ReducedInstance& r, const std::string& name) {
    const int i = r.election.index_of(name);
    if (i < 0 || !((r.registered() >> i) & 1u))
        throw UsageError("'" + name + "' is not a registered candidate");
    return i;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact decision procedures and pairwise analysis for the 44 standard\n"
                 "types of electoral control under plurality, veto, and approval voting.\n"
                 "Exit codes: 0 yes/pass, 1 no/fail, 2 usage error, 3 I/O error."};
    app.require_subcommand(1);

    std::string system, type_str, type_a, type_b, input, focus, corpus_dir, out_path;
    std::string suite, direction = "both";
    std::uint64_t seed = 1, trials = 1000, max_trials = 100000;
    SearchRanges ranges;

    auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("--system", system, "plurality, veto, or approval")->required();
    };

    CLI::App* decide_cmd =
        app.add_subcommand("decide", "decide one control instance for one focus candidate");
    add_system(decide_cmd);
    decide_cmd->add_option("--type", type_str, "control type, e.g. DC-RPC-TE-NUW")->required();
    decide_cmd->add_option("--input", input, "election file")->required();
    decide_cmd->add_option("--focus", focus, "focus candidate name")->required();

    CLI::App* fset_cmd =
        app.add_subcommand("fset", "all focus candidates the controller can succeed for");
    add_system(fset_cmd);
    fset_cmd->add_option("--type", type_str, "control type")->required();
    fset_cmd->add_option("--input", input, "election file")->required();

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "focus-set differences of two types on one instance");
    add_system(compare_cmd);
    compare_cmd->add_option("--type-a", type_a, "first control type")->required();
    compare_cmd->add_option("--type-b", type_b, "second control type")->required();
    compare_cmd->add_option("--input", input, "election file")->required();

    CLI::App* classify_cmd = app.add_subcommand(
        "classify-all", "classify every compatible type pair against a corpus");
    add_system(classify_cmd);
    classify_cmd->add_option("--corpus", corpus_dir,
                             "corpus directory (default: the built-in library)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run one verification suite");
    add_system(verify_cmd);
    verify_cmd
        ->add_option("--suite", suite, "collapses, containments, immunity, alpha, or corpus")
        ->required();
    verify_cmd->add_option("--trials", trials, "random instances per claim");
    verify_cmd->add_option("--seed", seed, "master seed");

    CLI::App* search_cmd =
        app.add_subcommand("search", "look for a random instance separating two types");
    add_system(search_cmd);
    search_cmd->add_option("--type-a", type_a, "first control type")->required();
    search_cmd->add_option("--type-b", type_b, "second control type")->required();
    search_cmd->add_option("--direction", direction, "a-b, b-a, or both (default both)");
    search_cmd->add_option("--seed", seed, "master seed");
    search_cmd->add_option("--max-trials", max_trials, "trial budget");
    search_cmd->add_option("--out", out_path, "write the witness election here");
    search_cmd->add_option("--min-candidates", ranges.min_candidates);
    search_cmd->add_option("--max-candidates", ranges.max_candidates);
    search_cmd->add_option("--min-votes", ranges.min_votes);
    search_cmd->add_option("--max-votes", ranges.max_votes);
    search_cmd->add_option("--max-spoiler-candidates", ranges.max_spoiler_candidates);
    search_cmd->add_option("--max-spoiler-votes", ranges.max_spoiler_votes);
    search_cmd->add_option("--max-limit", ranges.max_limit);

    CLI::App* export_cmd =
        app.add_subcommand("export-corpus", "write the built-in library as election files");
    export_cmd->add_option("--out", out_path, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (decide_cmd->parsed()) {
        const Rule rule = parse_rule(system);
        const ControlType type = parse_type(type_str);
        const ReducedInstance inst = load_instance(rule, input);
        if (compat_class(type) != inst.cls)
            throw UsageError("instance shape does not fit " + to_string(type));
        const DecideResult res = decide(rule, type, inflate(inst, focus_index(inst, focus)));
        std::cout << (res.success ? "yes" : "no") << "\n";
        if (res.success) std::cout << witness_text(type, inst, *res.witness) << "\n";
        return res.success ? 0 : 1;
    }

    if (fset_cmd->parsed()) {
        const Rule rule = parse_rule(system);
        const ControlType type = parse_type(type_str);
        const ReducedInstance inst = load_instance(rule, input);
        if (compat_class(type) != inst.cls)
            throw UsageError("instance shape does not fit " + to_string(type));
        std::cout << set_text(inst.election, focus_set(rule, type, inst)) << "\n";
        return 0;
    }

    if (compare_cmd->parsed()) {
        const Rule rule = parse_rule(system);
        const ControlType a = parse_type(type_a), b = parse_type(type_b);
        if (compat_class(a) != compat_class(b))
            throw UsageError(to_string(a) + " and " + to_string(b) + " are incompatible");
        const ReducedInstance inst = load_instance(rule, input);
        if (compat_class(a) != inst.cls)
            throw UsageError("instance shape does not fit the pair");
        const auto [ab, ba] = compare_on_instance(rule, a, b, inst);
        std::cout << "a-minus-b: " << set_text(inst.election, ab) << "\n"
                  << "b-minus-a: " << set_text(inst.election, ba) << "\n";
        return 0;
    }

    if (classify_cmd->parsed()) {
        const Rule rule = parse_rule(system);
        const std::vector<CorpusEntry> corpus =
            corpus_dir.empty() ? corpus_for(rule) : corpus_from_dir(rule, corpus_dir);
        std::cout << render_report(rule, classify_all(rule, corpus), corpus);
        return 0;
    }

    if (verify_cmd->parsed()) {
        const Rule rule = parse_rule(system);
        SuiteResult res;
        if (suite == "collapses")
            res = verify_collapses(rule, trials, seed);
        else if (suite == "containments")
            res = verify_containments(rule, trials, seed);
        else if (suite == "immunity")
            res = verify_immunity(rule, trials, seed);
        else if (suite == "alpha")
            res = verify_alpha(rule, trials, seed);
        else if (suite == "corpus")
            res = verify_corpus(rule);
        else
            throw UsageError("unknown suite '" + suite + "'");
        for (const SuiteLine& line : res.lines)
            std::cout << (line.pass ? "ok   " : "FAIL ") << line.text << "\n";
        return res.pass() ? 0 : 1;
    }

    if (search_cmd->parsed()) {
        const Rule rule = parse_rule(system);
        SearchTarget target;
        target.rule = rule;
        target.a = parse_type(type_a);
        target.b = parse_type(type_b);
        if (compat_class(target.a) != compat_class(target.b))
            throw UsageError(to_string(target.a) + " and " + to_string(target.b) +
                             " are incompatible");
        if (direction == "a-b")
            target.direction = Direction::LeftMinusRight;
        else if (direction == "b-a")
            target.direction = Direction::RightMinusLeft;
        else if (direction == "both")
            target.direction = Direction::BothOnOneInstance;
        else
            throw UsageError("unknown direction '" + direction + "'");
        try {
            ranges.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }

        const SearchOutcome out = find_witness(target, seed, max_trials, ranges);
        if (!out.found) {
            const std::uint64_t last = out.trials_run == 0 ? 0 : out.trials_run - 1;
            std::cout << "trial=" << last << " seed=" << trial_seed(seed, last)
                      << " result=no\n"
                      << "exhausted\n";
            return 1;
        }
        std::cout << "trial=" << out.hit_trial << " seed=" << out.hit_seed
                  << " result=found\n";
        const std::string text = serialize_instance(record_from_reduced(rule, *out.instance));
        std::cout << text;
        if (!out_path.empty()) {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw IoError("cannot write " + out_path);
            file << text;
        }
        return 0;
    }

    if (export_cmd->parsed()) {
        std::cout << export_corpus(out_path) << " files written\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
