#include <prefasp/preferences.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace prefasp {
namespace {

bool subset_of(const LiteralVec& v, const Interpretation& I) {
    return std::all_of(v.begin(), v.end(), [&](const ClassicalLiteral& l) { return I.count(l) != 0; });
}

bool meets(const LiteralVec& v, const Interpretation& I) {
    return std::any_of(v.begin(), v.end(), [&](const ClassicalLiteral& l) { return I.count(l) != 0; });
}

void require_answer_set(const PrioritizedProgram& p, const Interpretation& A) {
    if (!is_answer_set(p.program(), A)) {
        throw PreconditionError(to_string(A) + " is not an answer set of the program");
    }
}

// Rules of p that have a higher priority than some rule, indexed by the lower rule.
std::map<RuleId, std::vector<const Rule*>> preferred_over(const PrioritizedProgram& p) {
    std::map<RuleId, std::vector<const Rule*>> out;
    for (const auto& [hi, lo] : p.order().pairs()) {
        out[lo].push_back(p.program().find(hi));
    }
    return out;
}

// Shared stage construction of C_W and C_D. With `track_rules`, condition (b) asks whether the
// preferred rule was used in an earlier stage instead of whether its head is present.
FixpointTrace staged_value(const PrioritizedProgram& p, const Interpretation& S, bool track_rules) {
    const auto&   rules = p.rules();
    const auto    above = preferred_over(p);
    FixpointTrace t;
    t.stages.emplace_back();
    t.derivations.emplace_back();
    std::set<RuleId> used;
    for (std::size_t i = 1; i <= rules.size(); ++i) {
        const Interpretation& prev = t.stages.back();
        Interpretation        next = prev;
        std::set<Derivation>  der  = t.derivations.back();
        std::set<RuleId>      fired;
        for (const auto& r : rules) {
            if (!subset_of(r.pos_body(), prev) || meets(r.neg_body(), S)) {
                continue;
            }
            bool blocked = false;
            auto it      = above.find(r.id());
            if (it != above.end()) {
                for (const Rule* q : it->second) {
                    if (!subset_of(q->pos_body(), S) || meets(q->neg_body(), prev)) {
                        continue;
                    }
                    bool pending = track_rules ? used.count(q->id()) == 0 : !subset_of(q->head(), prev);
                    if (pending) {
                        blocked = true;
                        break;
                    }
                }
            }
            if (blocked) {
                continue;
            }
            fired.insert(r.id());
            for (const auto& h : r.head()) {
                next.insert(h);
                der.emplace(h, r.id());
            }
        }
        used.insert(fired.begin(), fired.end());
        t.stages.push_back(std::move(next));
        t.derivations.push_back(std::move(der));
    }
    t.consistent = is_consistent(t.stages.back());
    t.value      = t.consistent ? t.stages.back() : p.program().literal_base();
    if (!track_rules) {
        t.derivations.clear();
    }
    return t;
}

} // namespace

DualReduct dual_reduct(const Program& p, const std::vector<RuleId>& sequence, const Interpretation& X) {
    if (sequence.size() != p.rules().size()) {
        throw InvalidInput("order does not cover the rules of the program");
    }
    DualReduct out;
    for (const auto& id : sequence) {
        const Rule* r = p.find(id);
        if (!r) {
            throw InvalidInput("unknown rule '" + id.str() + "' in order");
        }
        if (!subset_of(r->pos_body(), X)) {
            continue;
        }
        Rule reduced(r->id(), r->head(), {}, r->neg_body());
        bool duplicate = std::any_of(out.rules.begin(), out.rules.end(),
                                     [&](const Rule& q) { return q.same_content(reduced); });
        if (duplicate) {
            continue;
        }
        out.rules.push_back(std::move(reduced));
        out.origins.push_back(id);
    }
    return out;
}

DualReduct dual_reduct(const PrioritizedProgram& p, const Interpretation& X) {
    if (!p.fully_prioritized()) {
        throw PreconditionError("dual reduct requires a fully prioritized program");
    }
    return dual_reduct(p.program(), p.order().sequence(), X);
}

FixpointTrace cb_value(const std::vector<Rule>& ordered, const Interpretation& S, const Interpretation& base) {
    FixpointTrace t;
    t.stages.emplace_back();
    for (const auto& r : ordered) {
        if (!r.pos_body().empty()) {
            throw PreconditionError("C_B requires prerequisite-free rules; rule '" + r.id().str() + "' has a positive body");
        }
        const Interpretation& prev  = t.stages.back();
        bool                  alpha = meets(r.neg_body(), prev);
        bool                  beta  = subset_of(r.head(), S) && meets(r.neg_body(), S);
        Interpretation        next  = prev;
        if (!alpha && !beta) {
            next.insert(r.head().begin(), r.head().end());
        }
        t.stages.push_back(std::move(next));
    }
    t.consistent = is_consistent(t.stages.back());
    t.value      = t.consistent ? t.stages.back() : base;
    return t;
}

FixpointTrace cb_value(const DualReduct& reduct, const Interpretation& S, const Interpretation& base) {
    return cb_value(reduct.rules, S, base);
}

std::map<RuleId, RuleLabel> rule_labels(const Program& p, const Interpretation& A) {
    std::map<RuleId, RuleLabel> out;
    for (const auto& r : p.rules()) {
        RuleLabel l = RuleLabel::Irrelevant;
        if (subset_of(r.pos_body(), A)) {
            if (!meets(r.neg_body(), A)) {
                l = RuleLabel::Generating;
            }
            else if (!subset_of(r.head(), A)) {
                l = RuleLabel::Zombie;
            }
        }
        out.emplace(r.id(), l);
    }
    return out;
}

FullOrderResult full_order(const PrioritizedProgram& p, const Interpretation& A) {
    require_answer_set(p, A);
    FullOrderResult res;
    res.labels = rule_labels(p.program(), A);
    std::set<RuleId>    remaining = p.rule_ids();
    Interpretation      S;
    std::vector<RuleId> witness;

    auto is_source = [&](const RuleId& r) {
        return std::none_of(remaining.begin(), remaining.end(), [&](const RuleId& q) { return p.order().contains(q, r); });
    };
    auto removable = [&](const RuleId& r, const Interpretation& s) {
        return res.labels.at(r) != RuleLabel::Zombie || meets(p.program().find(r)->neg_body(), s);
    };

    while (!remaining.empty()) {
        std::vector<RuleId> round;
        for (const auto& r : remaining) {
            if (is_source(r) && removable(r, S)) {
                round.push_back(r);
            }
        }
        if (round.empty()) {
            return res;
        }
        // Removing the round one rule at a time must keep every later pick removable.
        Interpretation s_seq = S;
        for (const auto& r : round) {
            if (!is_source(r) || !removable(r, s_seq)) {
                throw std::logic_error("FULL-ORDER: removability is not monotone");
            }
            if (res.labels.at(r) == RuleLabel::Generating) {
                const auto& h = p.program().find(r)->head();
                s_seq.insert(h.begin(), h.end());
            }
        }
        for (const auto& r : round) {
            remaining.erase(r);
            witness.push_back(r);
        }
        S = std::move(s_seq);
        res.rounds.push_back(std::move(round));
        res.s_after.push_back(S);
    }
    res.accepted = true;
    res.witness  = RuleOrder::from_sequence(witness);
    return res;
}

FixpointTrace cw_value(const PrioritizedProgram& p, const Interpretation& S) { return staged_value(p, S, false); }
FixpointTrace cd_value(const PrioritizedProgram& p, const Interpretation& S) { return staged_value(p, S, true); }

bool is_b_preferred(const PrioritizedProgram& p, const Interpretation& A) { return full_order(p, A).accepted; }

bool is_w_preferred(const PrioritizedProgram& p, const Interpretation& A) {
    require_answer_set(p, A);
    FixpointTrace t = cw_value(p, A);
    return t.consistent && t.value == A;
}

bool is_d_preferred(const PrioritizedProgram& p, const Interpretation& A) {
    require_answer_set(p, A);
    FixpointTrace t = cd_value(p, A);
    return t.consistent && t.value == A;
}

bool is_b_preferred_total(const Program& p, const std::vector<RuleId>& sequence, const Interpretation& A) {
    DualReduct    dr = dual_reduct(p, sequence, A);
    FixpointTrace t  = cb_value(dr, A, p.literal_base());
    return t.consistent && t.value == A;
}

std::pair<std::int64_t, std::vector<RuleId>> distance_to_extensions(const RuleOrder&           order,
                                                                   const std::vector<RuleId>& target) {
    const std::vector<RuleId> ids(order.domain().begin(), order.domain().end());
    const std::size_t         n = ids.size();
    if (n > 24) {
        throw LimitExceeded("too many rules for the distance search");
    }
    if (target.size() != n || std::set<RuleId>(target.begin(), target.end()) != order.domain()) {
        throw InvalidInput("orders have different domains");
    }
    std::map<RuleId, std::size_t> idx;
    for (std::size_t i = 0; i != n; ++i) {
        idx[ids[i]] = i;
    }
    std::vector<std::size_t> pos2(n);
    for (std::size_t i = 0; i != n; ++i) {
        pos2[idx[target[i]]] = i;
    }
    std::vector<std::uint32_t> preds(n, 0);
    const RuleOrder closure = transitive_closure(order);
    for (const auto& [a, b] : closure.pairs()) {
        preds[idx[b]] |= 1u << idx[a];
    }
    const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
    // Placing x after the elements of `mask` disagrees with the target on every unplaced y
    // that the target puts before x.
    auto cost = [&](std::uint32_t mask, std::size_t x) {
        std::int64_t c = 0;
        for (std::size_t y = 0; y != n; ++y) {
            c += y != x && !(mask >> y & 1u) && pos2[y] < pos2[x];
        }
        return c;
    };
    constexpr std::int64_t    kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> best(static_cast<std::size_t>(full) + 1, kInf);
    best[full] = 0;
    for (std::int64_t m = static_cast<std::int64_t>(full) - 1; m >= 0; --m) {
        auto mask = static_cast<std::uint32_t>(m);
        for (std::size_t x = 0; x != n; ++x) {
            if ((mask >> x & 1u) || (preds[x] & ~mask) != 0) {
                continue;
            }
            std::int64_t rest = best[mask | (1u << x)];
            if (rest < kInf) {
                best[mask] = std::min(best[mask], cost(mask, x) + rest);
            }
        }
    }
    std::vector<RuleId> seq;
    for (std::uint32_t mask = 0; mask != full;) {
        for (std::size_t x = 0; x != n; ++x) {
            if ((mask >> x & 1u) || (preds[x] & ~mask) != 0) {
                continue;
            }
            if (cost(mask, x) + best[mask | (1u << x)] == best[mask]) {
                seq.push_back(ids[x]);
                mask |= 1u << x;
                break;
            }
        }
    }
    return {best[0], seq};
}

PvdResult pvd(const PrioritizedProgram& p, const Interpretation& A, std::size_t limit) {
    const std::size_t n = p.rules().size();
    if (n > limit) {
        throw LimitExceeded("pvd of a program with " + std::to_string(n) + " rules exceeds the limit of " +
                            std::to_string(limit));
    }
    require_answer_set(p, A);
    std::vector<RuleId> perm(p.order().domain().begin(), p.order().domain().end());
    std::optional<PvdResult> best;
    do {
        if (!is_b_preferred_total(p.program(), perm, A)) {
            continue;
        }
        auto [d, seq] = distance_to_extensions(p.order(), perm);
        if (!best || d < best->value) {
            best = PvdResult{A, d, RuleOrder::from_sequence(seq), RuleOrder::from_sequence(perm)};
            if (d == 0) {
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!best) {
        // Cannot happen for answer sets: generating rules first always works.
        throw std::logic_error("no total order makes " + to_string(A) + " B-preferred");
    }
    return *best;
}

std::vector<PvdResult> weakly_preferred(const PrioritizedProgram& p, std::size_t limit, const SolveOptions& opts) {
    if (p.rules().size() > limit) {
        throw LimitExceeded("pvd of a program with " + std::to_string(p.rules().size()) +
                            " rules exceeds the limit of " + std::to_string(limit));
    }
    std::vector<PvdResult> all;
    for (const auto& A : answer_sets(p.program(), opts)) {
        all.push_back(pvd(p, A, limit));
    }
    if (all.empty()) {
        return all;
    }
    std::int64_t m = std::min_element(all.begin(), all.end(), [](const PvdResult& a, const PvdResult& b) {
                         return a.value < b.value;
                     })->value;
    std::vector<PvdResult> out;
    for (auto& r : all) {
        if (r.value == m) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Interpretation> preferred_answer_sets(const PrioritizedProgram& p, Semantics s, const SolveOptions& opts) {
    std::vector<Interpretation> out;
    for (const auto& A : answer_sets(p.program(), opts)) {
        bool keep = s == Semantics::B ? is_b_preferred(p, A) : s == Semantics::W ? is_w_preferred(p, A) : is_d_preferred(p, A);
        if (keep) {
            out.push_back(A);
        }
    }
    return out;
}

} // namespace prefasp
