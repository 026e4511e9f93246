#include "support.hpp"

#include <prefasp/grounder.hpp>
#include <prefasp/meta.hpp>
#include <prefasp/random.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace prefasp;
using namespace prefasp::test;

namespace {

PrioritizedProgram corpus(const std::string& name) { return parse_prioritized(read_file(corpus_path(name + ".lp"))); }

std::set<std::string> lines(const NonGroundProgram& p) {
    std::set<std::string> out;
    for (const auto& r : p.rules) {
        out.insert(to_string(r));
    }
    return out;
}

bool has_atom(const Interpretation& I, const std::string& text) {
    return std::any_of(I.begin(), I.end(), [&](const ClassicalLiteral& l) { return l.str() == text; });
}

} // namespace

TEST_CASE("mangling", "[meta]") {
    CHECK(mangle(lit("-flies")) == "neg__flies");
    CHECK(mangle(lit("p")) == "p");
    CHECK(mangle(lit("neg_x")) == "pos__neg_x");
    CHECK(mangle(lit("pos__y")) == "pos__pos__y");
    CHECK(mangle(lit("-neg_x")) == "neg__neg_x");
    for (const char* l : {"-flies", "p", "neg_x", "-neg_x", "pos__y", "-pos__y", "neg__z", "posx", "n"}) {
        CHECK(demangle(mangle(lit(l))) == lit(l));
    }
    CHECK_THROWS_AS(demangle("neg_x"), InvalidInput);
    CHECK_THROWS_AS(demangle("pos__abc"), InvalidInput);
    CHECK_THROWS_AS(demangle("neg__"), InvalidInput);
}

TEST_CASE("facts of bird and penguin", "[meta]") {
    auto f = lines(emit_facts(corpus("bird_penguin")));
    std::set<std::string> want{
        "rule(r1).", "head(peng,r1).", "rule(r2).", "head(bird,r2).",
        "rule(r3).", "head(neg__flies,r3).", "pbl(peng,r3).", "nbl(flies,r3).",
        "rule(r4).", "head(flies,r4).", "pbl(bird,r4).", "nbl(neg__flies,r4).",
        "compl(flies,neg__flies).", "pr(r1,r2).", "pr(r2,r3).", "pr(r3,r4).",
    };
    CHECK(f == want);
    CHECK(emit_facts(PrioritizedProgram()).rules.empty());
    // Facts are valid meta-language text.
    CHECK(parse_meta(to_string(emit_facts(corpus("bird_penguin")))).rules.size() == 16);
}

TEST_CASE("pr facts come from the transitive reduction", "[meta]") {
    auto p = parse_prioritized("r1: a. r2: b. r3: c. r1 < r2. r2 < r3. r1 < r3.");
    std::set<std::string> pr;
    for (const auto& l : lines(emit_facts(p))) {
        if (l.rfind("pr(", 0) == 0) {
            pr.insert(l);
        }
    }
    CHECK(pr == std::set<std::string>{"pr(r1,r2).", "pr(r2,r3)."});
}

TEST_CASE("meta programs are composed from the assets", "[meta]") {
    CHECK(meta_program(MetaSemantics::Plain).rules.size() == 11);
    CHECK(meta_program(MetaSemantics::B).rules.size() == 21);
    CHECK(meta_program(MetaSemantics::Bgraph).rules.size() == 11 + 11);
    CHECK(meta_program(MetaSemantics::Weak).rules.size() == 11 + 13);
    MetaOptions drop;
    drop.drop_redundant_constraint = true;
    CHECK(meta_program(MetaSemantics::B, drop).rules.size() == 20);

    auto weak = lines(meta_program(MetaSemantics::Weak));
    CHECK(weak.count(":~ rule(X), rule(Y), pr(X,Y), pr1(Y,X). [1:1]") == 1);
    auto w = meta_program(MetaSemantics::W);
    CHECK(w.rules.front().id == "piw_r001");
    for (const auto& r : meta_program(MetaSemantics::D).rules) {
        for (const auto& a : r.pos_body) {
            CHECK(a.predicate != "bpl");
        }
    }
    auto g = lines(meta_program(MetaSemantics::Bgraph));
    for (const auto& l : g) {
        CHECK(l.find("time(") == std::string::npos);
    }
}

TEST_CASE("meta solving the worked examples", "[meta]") {
    auto bp = corpus("bird_penguin");
    CHECK(meta_solve(bp, MetaSemantics::B).sets == std::vector<Interpretation>{interp({"peng", "bird", "-flies"})});
    CHECK(meta_solve(bp, MetaSemantics::Plain).sets.size() == 2);

    MetaOptions raw;
    raw.keep_raw = true;
    auto ex7     = meta_solve(corpus("no_preferred"), MetaSemantics::Weak, raw);
    CHECK(ex7.sets == std::vector<Interpretation>{interp({"b"})});
    REQUIRE(ex7.optimum);
    CHECK(*ex7.optimum == 1);
    REQUIRE(ex7.raw.size() == 1);
    CHECK(has_atom(ex7.raw[0], "pr(r1,r2)"));
    CHECK(has_atom(ex7.raw[0], "pr1(r2,r1)"));

    auto ex9 = meta_solve(corpus("zombies"), MetaSemantics::Weak, raw);
    CHECK(ex9.sets == std::vector<Interpretation>{interp({"c", "-d"})});
    CHECK(*ex9.optimum == 1);
    for (const auto& M : ex9.raw) {
        // (r1,r2) is the only pair on which pr and pr1 differ.
        CHECK(has_atom(M, "pr(r1,r2)"));
        CHECK(has_atom(M, "pr1(r2,r1)"));
    }
}

TEST_CASE("meta and native agree on the corpus", "[meta][corpus]") {
    for (const auto& name : corpus_programs()) {
        auto exp = expected(name);
        if (exp["kind"] != "prioritized") {
            continue;
        }
        auto p = corpus(name);
        for (auto s : all_semantics()) {
            INFO(name << " " << to_string(s));
            auto rep = cross_validate(p, s, {}, name);
            CHECK(rep.agree);
            CHECK(rep.only_meta.empty());
            CHECK(rep.only_native.empty());
            CHECK(rep.non_answer_sets.empty());
        }
    }
}

TEST_CASE("one meta answer set per answer set", "[meta]") {
    for (const auto& name : corpus_programs()) {
        if (expected(name)["kind"] != "prioritized") {
            continue;
        }
        auto p = corpus(name);
        auto r = meta_solve(p, MetaSemantics::Plain);
        CHECK(r.raw_count == answer_sets(p.program()).size());
        CHECK(r.sets.size() == r.raw_count);
    }
}

TEST_CASE("stratified programs need no search at the meta level", "[meta]") {
    auto p = corpus("stratified");
    REQUIRE(is_stratified(p.program()));
    auto r = meta_solve(p, MetaSemantics::Plain);
    CHECK(r.sets.size() == 1);
    CHECK(r.solver.decisions == 0);
}

TEST_CASE("dropping the redundant constraint changes nothing", "[meta][property]") {
    MetaOptions drop;
    drop.drop_redundant_constraint = true;
    Rng rng(55);
    for (int round = 0; round != 60; ++round) {
        auto p = random_prioritized(rng);
        CHECK(meta_solve(p, MetaSemantics::B).sets == meta_solve(p, MetaSemantics::B, drop).sets);
    }
}

TEST_CASE("B and Bgraph agree", "[meta][property]") {
    Rng rng(56);
    for (int round = 0; round != 60; ++round) {
        auto p = random_prioritized(rng);
        CHECK(meta_solve(p, MetaSemantics::B).sets == meta_solve(p, MetaSemantics::Bgraph).sets);
    }
}

TEST_CASE("a corrupted asset is detected", "[meta]") {
    // Without the fixpoint constraints every answer set passes as B-preferred.
    MetaOptions broken;
    std::string text(asset_text("pib"));
    for (const std::string c : {":- in_CP(X), not in_AS(X).", ":- in_AS(X), not in_CP(X)."}) {
        auto pos = text.find(c);
        REQUIRE(pos != std::string::npos);
        text.erase(pos, c.size());
    }
    broken.asset_override["pib"] = text;
    auto rep = cross_validate(corpus("bird_penguin"), MetaSemantics::B, broken);
    CHECK_FALSE(rep.agree);
    CHECK(rep.only_meta == std::vector<Interpretation>{interp({"peng", "bird", "flies"})});
}

TEST_CASE("semantics names", "[meta]") {
    for (auto s : all_semantics()) {
        CHECK(parse_semantics(to_string(s)) == s);
    }
    CHECK_FALSE(parse_semantics("x"));
    CHECK(projection_predicate(MetaSemantics::W) == "in_PAS");
    CHECK(projection_predicate(MetaSemantics::Weak) == "in_AS");
    CHECK_THROWS_AS(asset_text("nope"), InvalidInput);
}
