#include "support.hpp"

#include <prefasp/order.hpp>
#include <prefasp/preferences.hpp>
#include <prefasp/random.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace prefasp;
using namespace prefasp::test;

namespace {

PrioritizedProgram corpus(const std::string& name) { return parse_prioritized(read_file(corpus_path(name + ".lp"))); }

std::vector<RuleId> ids(std::initializer_list<const char*> names) {
    std::vector<RuleId> out;
    for (auto n : names) {
        out.emplace_back(n);
    }
    return out;
}

bool subset_of(const std::vector<Interpretation>& a, const std::vector<Interpretation>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("dual reduct of bird and penguin", "[preferences]") {
    auto p  = corpus("bird_penguin");
    auto A1 = interp({"peng", "bird", "-flies"});
    auto dr = dual_reduct(p, A1);
    REQUIRE(dr.rules.size() == 4);
    CHECK(to_string(dr.rules[2]) == "-flies :- not flies.");
    CHECK(dr.origins == ids({"r1", "r2", "r3", "r4"}));

    // S_0..S_4 for A1: {}, {peng}, {peng, bird}, {peng, bird, -flies}, unchanged.
    auto trace = cb_value(dr, A1, p.program().literal_base());
    REQUIRE(trace.stages.size() == 5);
    CHECK(trace.stages[1] == interp({"peng"}));
    CHECK(trace.stages[3] == A1);
    CHECK(trace.value == A1);

    auto A2 = interp({"peng", "bird", "flies"});
    CHECK(cb_value(dual_reduct(p, A2), A2, p.program().literal_base()).value == A1);
    CHECK(is_b_preferred(p, A1));
    CHECK_FALSE(is_b_preferred(p, A2));
    CHECK_THROWS_AS(is_b_preferred(p, interp({"peng"})), PreconditionError);
}

TEST_CASE("dual reduct keeps the first of duplicate rules", "[preferences]") {
    auto p  = corpus("duplicate_reduct");
    auto dr = dual_reduct(p.program(), ids({"r3", "r5", "r1", "r2", "r4"}), interp({"a", "b", "c"}));
    REQUIRE(dr.rules.size() == 4);
    CHECK(dr.origins == ids({"r3", "r5", "r2", "r4"}));
    CHECK_THROWS_AS(dual_reduct(p, interp({"a"})), PreconditionError);
}

TEST_CASE("a program without B-preferred answer set", "[preferences]") {
    auto p = corpus("no_preferred");
    auto A = interp({"b"});
    CHECK(cb_value(dual_reduct(p, A), A, p.program().literal_base()).value == interp({"b", "c"}));
    CHECK(preferred_answer_sets(p, Semantics::B).empty());
}

TEST_CASE("FULL-ORDER trace", "[preferences]") {
    auto p   = corpus("full_order_trace");
    auto res = full_order(p, interp({"c", "-d"}));
    CHECK(res.accepted);
    CHECK(res.labels.at(RuleId("r1")) == RuleLabel::Zombie);
    CHECK(res.labels.at(RuleId("r2")) == RuleLabel::Generating);
    CHECK(res.labels.at(RuleId("r3")) == RuleLabel::Generating);
    CHECK(res.labels.at(RuleId("r4")) == RuleLabel::Irrelevant);
    REQUIRE(res.rounds.size() == 3);
    CHECK(res.rounds[0] == ids({"r2"}));
    CHECK(res.rounds[1] == ids({"r1", "r4"}));
    CHECK(res.rounds[2] == ids({"r3"}));
    CHECK(res.s_after[0] == interp({"c"}));
    CHECK(res.s_after[2] == interp({"c", "-d"}));
    REQUIRE(res.witness);
    CHECK(res.witness->sequence() == ids({"r2", "r1", "r4", "r3"}));
    CHECK(is_b_preferred_total(p.program(), res.witness->sequence(), interp({"c", "-d"})));

    auto rej = full_order(p, interp({"a", "b"}));
    CHECK_FALSE(rej.accepted);
    CHECK_FALSE(rej.witness);
}

TEST_CASE("FULL-ORDER agrees with enumeration of full prioritizations", "[preferences][oracle]") {
    Rng                      rng(404);
    RandomPrioritizedOptions opts;
    opts.max_rules = 6;
    opts.max_atoms = 4;
    for (int round = 0; round != 300; ++round) {
        auto p = random_prioritized(rng, opts);
        INFO(to_string(p));
        for (const auto& A : answer_sets(p.program())) {
            auto res = full_order(p, A);
            CHECK(res.accepted == brute_b_preferred(p, A));
            if (res.witness) {
                CHECK(brute_cb(p.program(), res.witness->sequence(), A) == A);
            }
        }
    }
}

TEST_CASE("C_B(A) subset of A means C_B(A) = A", "[preferences][property]") {
    Rng                      rng(9);
    RandomPrioritizedOptions opts;
    opts.prereq_free   = true;
    opts.fully_ordered = true;
    for (int round = 0; round != 200; ++round) {
        auto p = random_prioritized(rng, opts);
        for (const auto& A : answer_sets(p.program())) {
            auto v = cb_value(dual_reduct(p, A), A, p.program().literal_base()).value;
            CHECK(std::includes(A.begin(), A.end(), v.begin(), v.end()) == (v == A));
        }
    }
}

TEST_CASE("W and D stages", "[preferences]") {
    auto p  = corpus("w_not_d");
    auto A  = interp({"-a", "b"});
    auto tw = cw_value(p, A);
    auto td = cd_value(p, A);
    CHECK(tw.value == A);
    CHECK(td.value != A);
    CHECK(is_w_preferred(p, A));
    CHECK_FALSE(is_d_preferred(p, A));
    // r001 is never applied, so under D it keeps blocking r002.
    for (const auto& st : td.derivations) {
        for (const auto& [l, r] : st) {
            CHECK(r != RuleId("r002"));
        }
    }
    auto bp = corpus("bird_penguin");
    CHECK(is_w_preferred(bp, interp({"peng", "bird", "-flies"})));
    CHECK(is_d_preferred(bp, interp({"peng", "bird", "-flies"})));
    CHECK_FALSE(is_w_preferred(bp, interp({"peng", "bird", "flies"})));
}

TEST_CASE("pvd of the worked examples", "[preferences]") {
    auto p1 = corpus("no_preferred");
    auto r1 = pvd(p1, interp({"b"}));
    CHECK(r1.value == 1);
    CHECK(r1.from_order.sequence() == ids({"r1", "r2"}));
    CHECK(r1.to_order.sequence() == ids({"r2", "r1"}));

    auto p2 = corpus("zombies");
    CHECK(pvd(p2, interp({"a", "b"})).value == 2);
    CHECK(pvd(p2, interp({"c", "-d"})).value == 1);
    auto weak = weakly_preferred(p2);
    REQUIRE(weak.size() == 1);
    CHECK(weak[0].set == interp({"c", "-d"}));
    CHECK(order_distance(weak[0].from_order, weak[0].to_order) == 1);

    auto p3 = corpus("bird_penguin");
    CHECK(pvd(p3, interp({"peng", "bird", "-flies"})).value == 0);
}

TEST_CASE("distance to the nearest linear extension", "[preferences][oracle]") {
    Rng rng(17);
    for (int round = 0; round != 200; ++round) {
        std::size_t n      = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        auto        target = random_total_order(rng, n).sequence();
        auto        hidden = random_total_order(rng, n).sequence();
        std::set<RuleOrder::Pair> pairs;
        for (std::size_t i = 0; i != n; ++i) {
            for (std::size_t j = i + 1; j != n; ++j) {
                if (std::bernoulli_distribution(0.3)(rng)) {
                    pairs.emplace(hidden[i], hidden[j]);
                }
            }
        }
        RuleOrder    o(std::set<RuleId>(hidden.begin(), hidden.end()), pairs);
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (const auto& e : brute_extensions(o)) {
            best = std::min(best, bubble_sort_swaps(e, target));
        }
        auto [d, ext] = distance_to_extensions(o, target);
        CHECK(d == best);
        CHECK(bubble_sort_swaps(ext, target) == d);
    }
}

TEST_CASE("pvd limit", "[preferences]") {
    std::string text;
    for (int i = 1; i <= 9; ++i) {
        text += "r" + std::to_string(i) + ": a" + std::to_string(i) + ".\n";
    }
    auto p = parse_prioritized(text);
    auto A = answer_sets(p.program()).at(0);
    CHECK_THROWS_AS(pvd(p, A), LimitExceeded);
    CHECK(pvd(p, A, 9).value == 0);
}

TEST_CASE("corpus preferred answer sets", "[preferences][corpus]") {
    for (const auto& name : corpus_programs()) {
        auto exp = expected(name);
        if (exp["kind"] != "prioritized") {
            continue;
        }
        INFO(name);
        auto p = corpus(name);
        CHECK(preferred_answer_sets(p, Semantics::B) == interps(exp["b"]));
        CHECK(preferred_answer_sets(p, Semantics::W) == interps(exp["w"]));
        CHECK(preferred_answer_sets(p, Semantics::D) == interps(exp["d"]));
        std::vector<Interpretation> weak;
        for (const auto& r : weakly_preferred(p)) {
            weak.push_back(r.set);
        }
        CHECK(weak == interps(exp["weak"]));
        for (const auto& entry : exp["pvd"]) {
            CHECK(pvd(p, interp(entry[0])).value == entry[1].get<std::int64_t>());
        }
    }
}

TEST_CASE("hierarchy D within W within B within AS", "[preferences][property]") {
    Rng                      rng(123);
    RandomPrioritizedOptions opts;
    opts.max_rules = 6;
    opts.max_atoms = 5;
    for (int round = 0; round != 200; ++round) {
        auto p  = random_prioritized(rng, opts);
        auto as = answer_sets(p.program());
        auto b  = preferred_answer_sets(p, Semantics::B);
        auto w  = preferred_answer_sets(p, Semantics::W);
        auto d  = preferred_answer_sets(p, Semantics::D);
        INFO(to_string(p));
        CHECK(subset_of(d, w));
        CHECK(subset_of(w, b));
        CHECK(subset_of(b, as));
        // Preferred answer sets violate no preference.
        for (const auto& r : weakly_preferred(p)) {
            CHECK((r.value == 0) == !b.empty());
        }
    }
}
