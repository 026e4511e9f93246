#include <prefasp/meta.hpp>

#include <prefasp/order.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iterator>
#include <set>
#include <utility>

namespace prefasp {

namespace detail {
// Generated from assets/meta/*.lp at configure time.
std::string_view embedded_asset(std::string_view name) noexcept;
} // namespace detail

namespace {

constexpr std::array<std::pair<MetaSemantics, std::string_view>, 6> kNames{{
    {MetaSemantics::Plain, "plain"},
    {MetaSemantics::B, "b"},
    {MetaSemantics::Bgraph, "bgraph"},
    {MetaSemantics::W, "w"},
    {MetaSemantics::D, "d"},
    {MetaSemantics::Weak, "weak"},
}};

constexpr std::string_view kRedundant = ":- in_AS(X), not in_CP(X).";

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

Term constant(std::string name) { return Term{Term::Kind::Constant, std::move(name)}; }

MetaRule fact(std::string id, std::string predicate, std::vector<std::string> args) {
    MetaRule r;
    r.id = std::move(id);
    MetaAtom a;
    a.predicate = std::move(predicate);
    for (auto& c : args) {
        a.args.push_back(constant(std::move(c)));
    }
    r.head.push_back(std::move(a));
    return r;
}

std::string literal_constant(const ClassicalLiteral& l) {
    if (!l.atom.propositional()) {
        throw InvalidInput("meta encoding needs propositional literals, got " + l.str());
    }
    return mangle(l);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

} // namespace

std::string_view to_string(MetaSemantics s) noexcept {
    for (const auto& [k, name] : kNames) {
        if (k == s) {
            return name;
        }
    }
    return "?";
}

std::optional<MetaSemantics> parse_semantics(std::string_view name) noexcept {
    for (const auto& [k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

const std::vector<MetaSemantics>& all_semantics() noexcept {
    static const std::vector<MetaSemantics> all{MetaSemantics::Plain, MetaSemantics::B, MetaSemantics::Bgraph,
                                                MetaSemantics::W,     MetaSemantics::D, MetaSemantics::Weak};
    return all;
}

std::string_view projection_predicate(MetaSemantics s) noexcept {
    return s == MetaSemantics::W || s == MetaSemantics::D ? "in_PAS" : "in_AS";
}

std::string mangle(const ClassicalLiteral& l) {
    const std::string& a = l.atom.str();
    if (!l.positive) {
        return "neg__" + a;
    }
    if (starts_with(a, "neg_") || starts_with(a, "pos__")) {
        return "pos__" + a;
    }
    return a;
}

ClassicalLiteral demangle(std::string_view c) {
    std::string_view rest = c;
    bool             pos  = true;
    if (starts_with(c, "neg__")) {
        rest = c.substr(5);
        pos  = false;
    }
    else if (starts_with(c, "pos__")) {
        rest = c.substr(5);
    }
    if (!is_identifier(rest)) {
        throw InvalidInput("not a mangled literal: " + std::string(c));
    }
    ClassicalLiteral l(Atom(std::string(rest)), pos);
    if (mangle(l) != c) {
        throw InvalidInput("not a mangled literal: " + std::string(c));
    }
    return l;
}

NonGroundProgram emit_facts(const PrioritizedProgram& p) {
    NonGroundProgram out;
    auto             add = [&](std::string pred, std::vector<std::string> args) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "f%03zu", out.rules.size() + 1);
        out.rules.push_back(fact(buf, std::move(pred), std::move(args)));
    };
    std::set<ClassicalLiteral> seen;
    for (const auto& r : p.rules()) {
        const std::string& id = r.id().str();
        add("rule", {id});
        for (const auto& h : r.head()) {
            add("head", {literal_constant(h), id});
            seen.insert(h);
        }
        for (const auto& b : r.pos_body()) {
            add("pbl", {literal_constant(b), id});
            seen.insert(b);
        }
        for (const auto& b : r.neg_body()) {
            add("nbl", {literal_constant(b), id});
            seen.insert(b);
        }
    }
    for (const auto& l : seen) {
        if (l.positive && seen.count(complement(l))) {
            add("compl", {mangle(l), mangle(complement(l))});
        }
    }
    const RuleOrder reduced = transitive_reduction(p.prefers());
    for (const auto& [a, b] : reduced.pairs()) {
        add("pr", {a.str(), b.str()});
    }
    return out;
}

const std::vector<std::string>& asset_names() {
    static const std::vector<std::string> names{"pia", "pib", "pig", "piw", "pid", "piweak"};
    return names;
}

std::string_view asset_text(std::string_view name) {
    if (std::find(asset_names().begin(), asset_names().end(), name) == asset_names().end()) {
        throw InvalidInput("unknown meta-program asset: " + std::string(name));
    }
    return detail::embedded_asset(name);
}

std::vector<std::string> assets_of(MetaSemantics s) {
    switch (s) {
    case MetaSemantics::Plain: return {"pia"};
    case MetaSemantics::B: return {"pia", "pib"};
    case MetaSemantics::Bgraph: return {"pia", "pig"};
    case MetaSemantics::W: return {"piw"};
    case MetaSemantics::D: return {"pid"};
    case MetaSemantics::Weak: return {"pia", "piweak"};
    }
    return {};
}

NonGroundProgram meta_program(MetaSemantics s, const MetaOptions& opts) {
    NonGroundProgram out;
    for (const auto& name : assets_of(s)) {
        auto             it   = opts.asset_override.find(name);
        std::string_view text = it != opts.asset_override.end() ? std::string_view(it->second) : asset_text(name);
        for (auto& r : parse_meta(text).rules) {
            if (opts.drop_redundant_constraint && name == "pib" && to_string(r) == kRedundant) {
                continue;
            }
            r.id = name + "_" + r.id;
            out.rules.push_back(std::move(r));
        }
    }
    return out;
}

MetaResult meta_solve(const PrioritizedProgram& p, MetaSemantics s, const MetaOptions& opts) {
    NonGroundProgram prog = meta_program(s, opts);
    for (auto& f : emit_facts(p).rules) {
        f.id = "fact_" + f.id.substr(1);
        prog.rules.push_back(std::move(f));
    }
    GroundResult g = ground_with_stats(prog, opts.ground);

    MetaResult       out;
    out.grounding          = g.stats;
    const auto       proj  = projection_predicate(s);
    auto             project = [&](const Interpretation& I) {
        Interpretation r;
        for (const auto& l : I) {
            if (l.positive && l.atom.predicate() == proj && l.atom.args().size() == 1) {
                r.insert(demangle(l.atom.args()[0]));
            }
        }
        return r;
    };

    std::set<Interpretation> sets;
    Solver                   solver(g.program);
    if (s == MetaSemantics::Weak) {
        std::vector<std::pair<Interpretation, std::int64_t>> seen;
        out.optimum = solver.enumerate_optimal(
            [&](const Interpretation& I, std::int64_t c) {
                seen.emplace_back(I, c);
            },
            opts.solve);
        for (auto& [I, c] : seen) {
            if (c != *out.optimum) {
                continue;
            }
            ++out.raw_count;
            sets.insert(project(I));
            if (opts.keep_raw) {
                out.raw.push_back(std::move(I));
            }
        }
    }
    else {
        solver.enumerate(
            [&](const Interpretation& I) {
                ++out.raw_count;
                sets.insert(project(I));
                if (opts.keep_raw) {
                    out.raw.push_back(I);
                }
                return true;
            },
            opts.solve);
    }
    out.solver = solver.stats();
    out.sets.assign(sets.begin(), sets.end());
    std::sort(out.raw.begin(), out.raw.end());
    return out;
}

std::vector<Interpretation> native_solve(const PrioritizedProgram& p, MetaSemantics s, const SolveOptions& opts,
                                         std::size_t pvd_limit) {
    switch (s) {
    case MetaSemantics::Plain: return answer_sets(p.program(), opts);
    case MetaSemantics::B:
    case MetaSemantics::Bgraph: return preferred_answer_sets(p, Semantics::B, opts);
    case MetaSemantics::W: return preferred_answer_sets(p, Semantics::W, opts);
    case MetaSemantics::D: return preferred_answer_sets(p, Semantics::D, opts);
    case MetaSemantics::Weak: {
        std::vector<Interpretation> out;
        for (auto& r : weakly_preferred(p, pvd_limit, opts)) {
            out.push_back(std::move(r.set));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    }
    return {};
}

CrossValidationReport cross_validate(const PrioritizedProgram& p, MetaSemantics s, const MetaOptions& opts,
                                     std::string program_id, std::size_t pvd_limit) {
    CrossValidationReport rep;
    rep.program_id = std::move(program_id);
    rep.semantics  = s;

    auto t0       = std::chrono::steady_clock::now();
    rep.native    = native_solve(p, s, opts.solve, pvd_limit);
    rep.native_ms = elapsed_ms(t0);

    MetaOptions mo = opts;
    mo.keep_raw    = false;
    t0             = std::chrono::steady_clock::now();
    rep.meta       = meta_solve(p, s, mo).sets;
    rep.meta_ms    = elapsed_ms(t0);

    std::set_difference(rep.native.begin(), rep.native.end(), rep.meta.begin(), rep.meta.end(),
                        std::back_inserter(rep.only_native));
    std::set_difference(rep.meta.begin(), rep.meta.end(), rep.native.begin(), rep.native.end(),
                        std::back_inserter(rep.only_meta));
    rep.agree = rep.native == rep.meta;
    if (s == MetaSemantics::W || s == MetaSemantics::D) {
        for (const auto& I : rep.meta) {
            if (!is_answer_set(p.program(), I)) {
                rep.non_answer_sets.push_back(I);
            }
        }
    }
    return rep;
}

} // namespace prefasp
