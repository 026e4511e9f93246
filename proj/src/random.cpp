#include <prefasp/random.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace prefasp {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ClassicalLiteral random_literal(Rng& rng, const std::vector<std::string>& atoms, double strong_neg) {
    const auto& a = atoms[pick(rng, 0, atoms.size() - 1)];
    return ClassicalLiteral(Atom(a), !chance(rng, strong_neg));
}

LiteralVec random_literals(Rng& rng, const std::vector<std::string>& atoms, std::size_t max, double strong_neg) {
    LiteralVec out;
    for (std::size_t i = pick(rng, 0, max); i > 0; --i) {
        out.push_back(random_literal(rng, atoms, strong_neg));
    }
    return out;
}

std::vector<RuleId> shuffled_ids(Rng& rng, std::size_t n) {
    std::vector<RuleId> ids;
    for (std::size_t i = 0; i != n; ++i) {
        ids.push_back(generated_id(i));
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    return ids;
}

} // namespace

RuleId generated_id(std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "r%03zu", index + 1);
    return RuleId(buf);
}

PrioritizedProgram random_prioritized(Rng& rng, const RandomPrioritizedOptions& opts) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0, n = pick(rng, 1, opts.max_atoms); i != n; ++i) {
        atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    const std::size_t n = pick(rng, 1, opts.max_rules);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i != n; ++i) {
        LiteralVec head{random_literal(rng, atoms, opts.strong_neg)};
        LiteralVec pos = opts.prereq_free ? LiteralVec{} : random_literals(rng, atoms, opts.max_pos, opts.strong_neg);
        LiteralVec neg = random_literals(rng, atoms, opts.max_neg, opts.strong_neg);
        rules.emplace_back(generated_id(i), std::move(head), std::move(pos), std::move(neg));
    }
    // Preferences follow a hidden random sequence, so they are always acyclic.
    auto                         seq = shuffled_ids(rng, n);
    std::vector<RuleOrder::Pair> prefers;
    for (std::size_t i = 0; i != n; ++i) {
        for (std::size_t j = i + 1; j != n; ++j) {
            if (opts.fully_ordered ? j == i + 1 : chance(rng, opts.pref_density)) {
                prefers.emplace_back(seq[i], seq[j]);
            }
        }
    }
    return PrioritizedProgram(Program(std::move(rules)), prefers);
}

Program random_ground(Rng& rng, const RandomGroundOptions& opts) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0, n = pick(rng, 1, opts.max_atoms); i != n; ++i) {
        atoms.push_back("p" + std::to_string(i));
    }
    std::vector<Rule> rules;
    for (std::size_t i = 0, n = pick(rng, 1, opts.max_rules); i != n; ++i) {
        LiteralVec head;
        if (!chance(rng, opts.constraint)) {
            for (std::size_t k = pick(rng, 1, opts.max_head); k > 0; --k) {
                head.push_back(random_literal(rng, atoms, opts.strong_neg));
            }
        }
        LiteralVec pos = random_literals(rng, atoms, opts.max_pos, opts.strong_neg);
        LiteralVec neg = random_literals(rng, atoms, opts.max_neg, opts.strong_neg);
        if (head.empty() && pos.empty() && neg.empty()) {
            neg.push_back(random_literal(rng, atoms, opts.strong_neg));
        }
        rules.emplace_back(generated_id(i), std::move(head), std::move(pos), std::move(neg));
    }
    return Program(std::move(rules));
}

RuleOrder random_total_order(Rng& rng, std::size_t n) { return RuleOrder::from_sequence(shuffled_ids(rng, n)); }

} // namespace prefasp
