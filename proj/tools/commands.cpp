#include "commands.hpp"
#include "output.hpp"

#include <prefasp/errors.hpp>
#include <prefasp/grounder.hpp>
#include <prefasp/meta.hpp>
#include <prefasp/parser.hpp>
#include <prefasp/random.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace prefasp::cli {

namespace {

namespace fs = std::filesystem;

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read " + path);
    }
    ss << in.rdbuf();
    return ss.str();
}

SolveOptions solve_options(const RunConfig& cfg) {
    SolveOptions opts;
    if (cfg.timeout > 0) {
        opts.deadline = deadline_after(cfg.timeout);
    }
    return opts;
}

Document header(const RunConfig& cfg) {
    Document doc;
    doc["command"] = cfg.command;
    if (!cfg.semantics.empty()) {
        doc["semantics"] = cfg.semantics;
    }
    doc["input"] = cfg.input;
    return doc;
}

Semantics native_semantics(const std::string& name) {
    if (name == "b") {
        return Semantics::B;
    }
    if (name == "w") {
        return Semantics::W;
    }
    if (name == "d") {
        return Semantics::D;
    }
    throw InvalidInput("unknown semantics '" + name + "' (expected b, w or d)");
}

Document preferred_flags(const PrioritizedProgram& p, const Interpretation& A) {
    Document f;
    f["b"] = is_b_preferred(p, A);
    f["w"] = is_w_preferred(p, A);
    f["d"] = is_d_preferred(p, A);
    return f;
}

Document stages(const std::vector<Interpretation>& s) {
    Document out = Document::array();
    for (const auto& I : s) {
        out.push_back(literals(I));
    }
    return out;
}

Outcome cmd_solve(const RunConfig& cfg) {
    auto    parsed = parse_program(read_input(cfg.input));
    Program p      = parsed.program;
    Outcome o{header(cfg)};
    o.doc["program"] = to_string(p, true);
    auto& sets       = o.doc["answer_sets"] = Document::array();
    if (p.weak_constraints().empty()) {
        for (const auto& A : answer_sets(p, solve_options(cfg))) {
            sets.push_back({{"literals", literals(A)}});
        }
    }
    else {
        auto opt = optimal_answer_sets(p, solve_options(cfg));
        for (const auto& a : opt) {
            Document levels;
            for (const auto& [l, w] : a.value.level_weights) {
                levels[std::to_string(l)] = w;
            }
            sets.push_back({{"literals", literals(a.set)}, {"objective", {{"H", a.value.H}, {"levels", levels}}}});
        }
        if (!opt.empty()) {
            o.doc["optimum"] = opt.front().value.H;
        }
    }
    o.doc["diagnostics"] = Document::array();
    if (sets.empty()) {
        o.doc["diagnostics"].push_back("no answer set");
    }
    return o;
}

Outcome cmd_preferred(const RunConfig& cfg) {
    auto    p    = parse_prioritized(read_input(cfg.input));
    auto    sem  = native_semantics(cfg.semantics);
    auto    opts = solve_options(cfg);
    Outcome o{header(cfg)};
    o.doc["program"] = to_string(p);
    auto& sets       = o.doc["answer_sets"] = Document::array();
    for (const auto& A : preferred_answer_sets(p, sem, opts)) {
        sets.push_back({{"literals", literals(A)}, {"preferred", preferred_flags(p, A)}});
    }
    if (cfg.explain) {
        auto& ex = o.doc["explain"] = Document::array();
        for (const auto& A : answer_sets(p.program(), opts)) {
            Document e;
            e["literals"] = literals(A);
            if (sem == Semantics::B) {
                auto r        = full_order(p, A);
                e["accepted"] = r.accepted;
                e["rounds"]   = Document::array();
                for (const auto& round : r.rounds) {
                    e["rounds"].push_back(rule_ids(round));
                }
                e["s_after"] = stages(r.s_after);
                Document labels = Document::object();
                for (const auto& [id, l] : r.labels) {
                    labels[id.str()] = std::string(to_string(l));
                }
                e["labels"]  = labels;
                e["witness"] = r.witness ? rule_ids(r.witness->sequence()) : Document();
            }
            else {
                auto t        = sem == Semantics::W ? cw_value(p, A) : cd_value(p, A);
                e["accepted"] = t.value == A;
                e["stages"]   = stages(t.stages);
                e["consistent"] = t.consistent;
                e["value"]    = literals(t.value);
                if (sem == Semantics::D) {
                    auto& ds = e["derivations"] = Document::array();
                    for (const auto& st : t.derivations) {
                        Document step = Document::array();
                        for (const auto& [l, r] : st) {
                            step.push_back({l.str(), r.str()});
                        }
                        ds.push_back(step);
                    }
                }
            }
            ex.push_back(e);
        }
    }
    o.doc["diagnostics"] = Document::array();
    if (sets.empty()) {
        o.doc["diagnostics"].push_back("no preferred answer set");
    }
    return o;
}

Outcome cmd_weak(const RunConfig& cfg) {
    auto    p = parse_prioritized(read_input(cfg.input));
    Outcome o{header(cfg)};
    o.doc["program"] = to_string(p);
    auto  res        = weakly_preferred(p, cfg.limit_rules, solve_options(cfg));
    auto& sets       = o.doc["answer_sets"] = Document::array();
    for (const auto& r : res) {
        auto     from = r.from_order.sequence();
        auto     to   = r.to_order.sequence();
        std::map<RuleId, std::size_t> pos;
        for (std::size_t i = 0; i != to.size(); ++i) {
            pos[to[i]] = i;
        }
        // Pairs ordered one way by <1 and the other way by <2.
        Document swapped = Document::array();
        for (std::size_t i = 0; i != from.size(); ++i) {
            for (std::size_t j = i + 1; j != from.size(); ++j) {
                if (pos.at(from[j]) < pos.at(from[i])) {
                    swapped.push_back({from[i].str(), from[j].str()});
                }
            }
        }
        sets.push_back({{"literals", literals(r.set)},
                        {"pvd", r.value},
                        {"witness", {{"from", rule_ids(from)}, {"to", rule_ids(to)}, {"swapped", swapped}}}});
    }
    if (!res.empty()) {
        o.doc["pvd"] = res.front().value;
    }
    o.doc["diagnostics"] = Document::array();
    if (sets.empty()) {
        o.doc["diagnostics"].push_back("no answer set");
    }
    return o;
}

Outcome cmd_emit_facts(const RunConfig& cfg) {
    auto    p = parse_prioritized(read_input(cfg.input));
    Outcome o{header(cfg)};
    o.doc["text"]        = to_string(emit_facts(p));
    o.doc["diagnostics"] = Document::array();
    return o;
}

MetaOptions meta_options(const RunConfig& cfg) {
    MetaOptions opts;
    opts.drop_redundant_constraint = cfg.drop_redundant;
    opts.solve                     = solve_options(cfg);
    for (const auto& spec : cfg.assets) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("--asset expects NAME=PATH, got '" + spec + "'");
        }
        auto name = spec.substr(0, eq);
        (void)asset_text(name);
        opts.asset_override[name] = read_input(spec.substr(eq + 1));
    }
    return opts;
}

Outcome cmd_meta(const RunConfig& cfg) {
    auto sem = parse_semantics(cfg.semantics);
    if (!sem) {
        throw InvalidInput("unknown semantics '" + cfg.semantics + "' (expected plain, b, bgraph, w, d or weak)");
    }
    auto p    = parse_prioritized(read_input(cfg.input));
    auto opts = meta_options(cfg);
    opts.keep_raw = cfg.raw;
    auto    r = meta_solve(p, *sem, opts);
    Outcome o{header(cfg)};
    o.doc["program"] = to_string(p);
    auto& sets       = o.doc["answer_sets"] = Document::array();
    for (const auto& A : r.sets) {
        sets.push_back({{"literals", literals(A)}});
    }
    o.doc["raw_count"] = r.raw_count;
    if (r.optimum) {
        o.doc["optimum"] = *r.optimum;
    }
    if (cfg.raw) {
        o.doc["raw"] = stages(r.raw);
    }
    o.doc["grounding"] = {{"ground_rules", r.grounding.ground_rules},
                          {"dropped_by_builtin", r.grounding.dropped_by_builtin},
                          {"duplicates_removed", r.grounding.duplicates_removed}};
    o.doc["diagnostics"] = Document::array();
    if (sets.empty()) {
        o.doc["diagnostics"].push_back("no answer set");
    }
    return o;
}

Outcome cmd_validate(const RunConfig& cfg) {
    std::vector<std::pair<std::string, PrioritizedProgram>> programs;
    Document                                                diagnostics = Document::array();
    if (cfg.random) {
        Rng rng(cfg.seed);
        for (std::size_t i = 0; i != *cfg.random; ++i) {
            programs.emplace_back("random-" + std::to_string(cfg.seed) + "-" + std::to_string(i + 1),
                                  random_prioritized(rng));
        }
    }
    else if (cfg.input != "-" && fs::is_directory(cfg.input)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(cfg.input)) {
            if (e.is_regular_file() && e.path().extension() == ".lp") {
                files.push_back(e.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            try {
                programs.emplace_back(f.stem().string(), parse_prioritized(read_input(f.string())));
            }
            catch (const ParseError& e) {
                diagnostics.push_back("skipped " + f.filename().string() + ": " + e.message());
            }
        }
    }
    else {
        programs.emplace_back(cfg.input, parse_prioritized(read_input(cfg.input)));
    }

    auto    opts = meta_options(cfg);
    Outcome o{header(cfg)};
    if (cfg.random) {
        o.doc["seed"]  = cfg.seed;
        o.doc["count"] = *cfg.random;
    }
    auto&       reports       = o.doc["reports"] = Document::array();
    std::size_t disagreements = 0;
    for (const auto& [id, p] : programs) {
        for (auto s : all_semantics()) {
            auto rep = cross_validate(p, s, opts, id, cfg.limit_rules);
            disagreements += rep.agree ? 0 : 1;
            reports.push_back({{"program", id},
                               {"semantics", std::string(to_string(s))},
                               {"agree", rep.agree},
                               {"native", stages(rep.native)},
                               {"meta", stages(rep.meta)},
                               {"only_native", stages(rep.only_native)},
                               {"only_meta", stages(rep.only_meta)},
                               {"non_answer_sets", stages(rep.non_answer_sets)}});
        }
    }
    o.doc["summary"] = {{"programs", programs.size()},
                        {"checks", reports.size()},
                        {"disagreements", disagreements}};
    o.doc["diagnostics"] = diagnostics;
    o.exit_code          = disagreements == 0 ? kOk : kDisagreement;
    return o;
}

Outcome cmd_ground(const RunConfig& cfg) {
    auto    g = ground_with_stats(parse_meta(read_input(cfg.input)));
    Outcome o{header(cfg)};
    o.doc["text"]      = to_string(g.program);
    o.doc["grounding"] = {{"ground_rules", g.stats.ground_rules},
                          {"dropped_by_builtin", g.stats.dropped_by_builtin},
                          {"duplicates_removed", g.stats.duplicates_removed}};
    o.doc["diagnostics"] = Document::array();
    return o;
}

} // namespace

Outcome run(const RunConfig& cfg) {
    if (cfg.command == "solve") {
        return cmd_solve(cfg);
    }
    if (cfg.command == "preferred") {
        return cmd_preferred(cfg);
    }
    if (cfg.command == "weak") {
        return cmd_weak(cfg);
    }
    if (cfg.command == "emit-facts") {
        return cmd_emit_facts(cfg);
    }
    if (cfg.command == "meta") {
        return cmd_meta(cfg);
    }
    if (cfg.command == "validate") {
        return cmd_validate(cfg);
    }
    if (cfg.command == "ground") {
        return cmd_ground(cfg);
    }
    throw InvalidInput("unknown command '" + cfg.command + "'");
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string where = cfg.input == "-" ? "<stdin>" : cfg.input;
    try {
        auto o = run(cfg);
        out << (cfg.format == "json" ? render_json(o.doc) : render_text(o.doc));
        out.flush();
        return o.exit_code;
    }
    catch (const ParseError& e) {
        err << where << ":" << e.span().line << ":" << e.span().column << ": error: " << e.message() << "\n";
        return kInputError;
    }
    catch (const LimitExceeded& e) {
        err << "prefasp: limit exceeded: " << e.what() << "\n";
        return kLimitError;
    }
    catch (const InvalidInput& e) {
        err << "prefasp: invalid input: " << e.what() << "\n";
        return kInputError;
    }
    catch (const PreconditionError& e) {
        err << "prefasp: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace prefasp::cli
