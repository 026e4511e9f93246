#include <prefasp/grounder.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace prefasp {
namespace {

// Term after interning: constant id, or variable slot.
struct CTerm {
    bool is_var = false;
    int  value  = 0;
};

struct CAtom {
    int                pred = 0;
    std::vector<CTerm> args;
};

struct CBuiltin {
    CompareOp op;
    CTerm     lhs, rhs;
};

struct CRule {
    const MetaRule*          src = nullptr;
    std::vector<CAtom>       head, pos, neg;
    std::vector<CBuiltin>    builtins;
    std::vector<std::string> slot_names; // empty name for anonymous slots
    bool                     ground = false;
};

struct PredInfo {
    std::string name;
    bool        positive = true;
    std::size_t arity    = 0;
};

using Tuple = std::vector<int>;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
        std::size_t h = t.size();
        for (int v : t) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct Relation {
    std::vector<Tuple>                        tuples;
    std::unordered_set<Tuple, TupleHash>      index;

    bool add(Tuple t) {
        if (!index.insert(t).second) {
            return false;
        }
        tuples.push_back(std::move(t));
        return true;
    }
};

class Grounder {
public:
    Grounder(const NonGroundProgram& p, const GroundOptions& opts) : src_(p), opts_(opts) {
        for (const auto& r : p.rules) {
            check_safety(r);
        }
        consts_ = herbrand_universe(p);
        for (std::size_t i = 0; i != consts_.size(); ++i) {
            const_ids_[consts_[i]] = static_cast<int>(i);
        }
        for (const auto& r : p.rules) {
            rules_.push_back(compile(r));
        }
    }

    GroundResult run() {
        if (opts_.relevance) {
            compute_domain();
        }
        GroundResult                res;
        std::vector<Rule>           rules;
        std::vector<WeakConstraint> weak;
        std::set<std::string>       seen;
        for (const auto& cr : rules_) {
            if (cr.ground) {
                emit(cr, {}, rules, weak, seen, res.stats);
                continue;
            }
            std::vector<int> binding(cr.slot_names.size(), -1);
            auto             visit = [&](const std::vector<int>& b) { emit(cr, b, rules, weak, seen, res.stats); };
            if (opts_.relevance) {
                join(cr, binding, visit, res.stats);
            }
            else {
                enumerate_all(cr, binding, 0, visit, res.stats);
            }
        }
        res.stats.ground_rules = rules.size() + weak.size();
        res.program            = Program(std::move(rules), std::move(weak));
        return res;
    }

private:
    int pred_id(const MetaAtom& a) {
        std::string key = (a.positive ? "" : "-") + a.predicate + "/" + std::to_string(a.args.size());
        auto        it  = pred_ids_.find(key);
        if (it != pred_ids_.end()) {
            return it->second;
        }
        int id = static_cast<int>(preds_.size());
        preds_.push_back({a.predicate, a.positive, a.args.size()});
        domain_.emplace_back();
        pred_ids_.emplace(std::move(key), id);
        return id;
    }

    CTerm term(const Term& t, std::map<std::string, int>& slots, std::vector<std::string>& names) {
        switch (t.kind) {
            case Term::Kind::Constant: return {false, const_ids_.at(t.name)};
            case Term::Kind::Anonymous:
                names.emplace_back();
                return {true, static_cast<int>(names.size() - 1)};
            default: {
                auto [it, fresh] = slots.emplace(t.name, static_cast<int>(names.size()));
                if (fresh) {
                    names.push_back(t.name);
                }
                return {true, it->second};
            }
        }
    }

    CRule compile(const MetaRule& r) {
        CRule                      cr;
        std::map<std::string, int> slots;
        cr.src = &r;
        auto atom = [&](const MetaAtom& a) {
            CAtom ca;
            ca.pred = pred_id(a);
            for (const auto& t : a.args) {
                ca.args.push_back(term(t, slots, cr.slot_names));
            }
            return ca;
        };
        // Positive body first so every named variable gets its slot from a binding position.
        for (const auto& a : r.pos_body) {
            cr.pos.push_back(atom(a));
        }
        for (const auto& a : r.head) {
            cr.head.push_back(atom(a));
        }
        for (const auto& a : r.neg_body) {
            cr.neg.push_back(atom(a));
        }
        for (const auto& b : r.builtins) {
            cr.builtins.push_back({b.op, term(b.lhs, slots, cr.slot_names), term(b.rhs, slots, cr.slot_names)});
        }
        cr.ground = cr.slot_names.empty();
        return cr;
    }

    static int value(const CTerm& t, const std::vector<int>& b) { return t.is_var ? b[t.value] : t.value; }

    static bool compare(CompareOp op, int l, int r) {
        switch (op) {
            case CompareOp::Less   : return l < r;
            case CompareOp::Greater: return l > r;
            default                : return l != r;
        }
    }

    // Builtins whose operands are all bound must hold.
    static bool builtins_ok(const CRule& cr, const std::vector<int>& b, GroundingStats& stats) {
        for (const auto& bi : cr.builtins) {
            int l = value(bi.lhs, b), r = value(bi.rhs, b);
            if (l < 0 || r < 0) {
                continue;
            }
            if (!compare(bi.op, l, r)) {
                ++stats.dropped_by_builtin;
                return false;
            }
        }
        return true;
    }

    void join(const CRule& cr, std::vector<int>& b, const std::function<void(const std::vector<int>&)>& out,
              GroundingStats& stats) {
        std::vector<char> done(cr.pos.size(), 0);
        join_rec(cr, b, done, cr.pos.size(), out, stats);
    }

    void join_rec(const CRule& cr, std::vector<int>& b, std::vector<char>& done, std::size_t left,
                  const std::function<void(const std::vector<int>&)>& out, GroundingStats& stats) {
        if (!builtins_ok(cr, b, stats)) {
            return;
        }
        if (left == 0) {
            out(b);
            return;
        }
        // Next atom: the one with most bound arguments, ties by smaller relation.
        std::size_t best       = cr.pos.size();
        long        best_score = std::numeric_limits<long>::min();
        for (std::size_t i = 0; i != cr.pos.size(); ++i) {
            if (done[i]) {
                continue;
            }
            long bound = 0;
            for (const auto& t : cr.pos[i].args) {
                bound += !t.is_var || b[t.value] >= 0;
            }
            long score = bound * 1000000L - static_cast<long>(std::min<std::size_t>(domain_[cr.pos[i].pred].tuples.size(), 999999));
            if (score > best_score) {
                best_score = score;
                best       = i;
            }
        }
        const CAtom& a = cr.pos[best];
        done[best]     = 1;
        // Iterate by index: the relation may grow while the fixpoint runs.
        for (std::size_t k = 0, n = domain_[a.pred].tuples.size(); k != n; ++k) {
            const Tuple      t = domain_[a.pred].tuples[k];
            std::vector<int> set_slots;
            bool             ok = true;
            for (std::size_t j = 0; j != a.args.size() && ok; ++j) {
                const CTerm& at = a.args[j];
                if (!at.is_var) {
                    ok = at.value == t[j];
                }
                else if (b[at.value] < 0) {
                    b[at.value] = t[j];
                    set_slots.push_back(at.value);
                }
                else {
                    ok = b[at.value] == t[j];
                }
            }
            if (ok) {
                join_rec(cr, b, done, left - 1, out, stats);
            }
            for (int s : set_slots) {
                b[s] = -1;
            }
        }
        done[best] = 0;
    }

    void enumerate_all(const CRule& cr, std::vector<int>& b, std::size_t slot,
                       const std::function<void(const std::vector<int>&)>& out, GroundingStats& stats) {
        if (!builtins_ok(cr, b, stats)) {
            return;
        }
        if (slot == b.size()) {
            out(b);
            return;
        }
        for (int c = 0; c != static_cast<int>(consts_.size()); ++c) {
            b[slot] = c;
            enumerate_all(cr, b, slot + 1, out, stats);
        }
        b[slot] = -1;
    }

    Tuple instantiate(const CAtom& a, const std::vector<int>& b) const {
        Tuple t;
        t.reserve(a.args.size());
        for (const auto& x : a.args) {
            t.push_back(value(x, b));
        }
        return t;
    }

    void compute_domain() {
        for (bool changed = true; changed;) {
            changed = false;
            GroundingStats scratch;
            for (const auto& cr : rules_) {
                if (cr.src->weak || cr.head.empty()) {
                    continue;
                }
                std::vector<int> b(cr.slot_names.size(), -1);
                auto             add = [&](const std::vector<int>& bind) {
                    for (const auto& h : cr.head) {
                        changed |= domain_[h.pred].add(instantiate(h, bind));
                    }
                };
                if (cr.ground) {
                    bool ok = std::all_of(cr.pos.begin(), cr.pos.end(), [&](const CAtom& a) {
                        return domain_[a.pred].index.count(instantiate(a, b)) != 0;
                    });
                    if (ok && builtins_ok(cr, b, scratch)) {
                        add(b);
                    }
                    continue;
                }
                join(cr, b, add, scratch);
            }
        }
    }

    ClassicalLiteral literal(const CAtom& a, const std::vector<int>& b) const {
        const PredInfo&          pi = preds_[a.pred];
        std::vector<std::string> args;
        args.reserve(a.args.size());
        for (const auto& t : a.args) {
            args.push_back(consts_[value(t, b)]);
        }
        return {Atom(pi.name, std::move(args)), pi.positive};
    }

    void emit(const CRule& cr, const std::vector<int>& b, std::vector<Rule>& rules, std::vector<WeakConstraint>& weak,
              std::set<std::string>& seen, GroundingStats& stats) const {
        if (cr.ground) {
            GroundingStats scratch;
            if (!builtins_ok(cr, b, scratch)) {
                ++stats.dropped_by_builtin;
                return;
            }
        }
        auto lits = [&](const std::vector<CAtom>& v) {
            LiteralVec out;
            out.reserve(v.size());
            for (const auto& a : v) {
                out.push_back(literal(a, b));
            }
            return out;
        };
        const MetaRule& src = *cr.src;
        if (src.weak) {
            WeakConstraint w(lits(cr.pos), lits(cr.neg), src.weak->weight, src.weak->level);
            if (!seen.insert(":~" + to_string(w)).second) {
                ++stats.duplicates_removed;
                return;
            }
            weak.push_back(std::move(w));
            return;
        }
        std::string id = src.id;
        if (!cr.ground) {
            // Anonymous slots are numbered _1, _2, ... in order of occurrence.
            std::vector<std::pair<std::string, int>> named;
            for (std::size_t i = 0, anon = 0; i != cr.slot_names.size(); ++i) {
                named.emplace_back(cr.slot_names[i].empty() ? "_" + std::to_string(++anon) : cr.slot_names[i], b[i]);
            }
            std::sort(named.begin(), named.end());
            if (!named.empty()) {
                id += '[';
                const char* sep = "";
                for (const auto& [name, c] : named) {
                    id += std::exchange(sep, ",");
                    id += name + "=" + consts_[c];
                }
                id += ']';
            }
        }
        Rule r(RuleId(std::move(id)), lits(cr.head), lits(cr.pos), lits(cr.neg));
        if (!seen.insert(to_string(r, false)).second) {
            ++stats.duplicates_removed;
            return;
        }
        rules.push_back(std::move(r));
    }

    const NonGroundProgram&              src_;
    GroundOptions                        opts_;
    std::vector<std::string>             consts_;
    std::unordered_map<std::string, int> const_ids_;
    std::unordered_map<std::string, int> pred_ids_;
    std::vector<PredInfo>                preds_;
    std::vector<Relation>                domain_;
    std::vector<CRule>                   rules_;
};

} // namespace

std::vector<std::string> herbrand_universe(const NonGroundProgram& p) {
    std::set<std::string> out;
    auto                  add = [&](const Term& t) {
        if (t.kind == Term::Kind::Constant) {
            out.insert(t.name);
        }
    };
    for (const auto& r : p.rules) {
        for (const auto* v : {&r.head, &r.pos_body, &r.neg_body}) {
            for (const auto& a : *v) {
                std::for_each(a.args.begin(), a.args.end(), add);
            }
        }
        for (const auto& b : r.builtins) {
            add(b.lhs);
            add(b.rhs);
        }
    }
    if (out.empty()) {
        return {"u0"};
    }
    return {out.begin(), out.end()};
}

GroundResult ground_with_stats(const NonGroundProgram& p, const GroundOptions& opts) {
    return Grounder(p, opts).run();
}

Program ground(const NonGroundProgram& p, const GroundOptions& opts) { return ground_with_stats(p, opts).program; }

NonGroundProgram to_meta(const Program& p) {
    auto atoms = [](const LiteralVec& v) {
        std::vector<MetaAtom> out;
        for (const auto& l : v) {
            MetaAtom a;
            a.predicate = l.atom.predicate();
            a.positive  = l.positive;
            for (const auto& c : l.atom.args()) {
                a.args.push_back({Term::Kind::Constant, c});
            }
            out.push_back(std::move(a));
        }
        return out;
    };
    NonGroundProgram out;
    for (const auto& r : p.rules()) {
        MetaRule m;
        m.id       = r.id().str();
        m.head     = atoms(r.head());
        m.pos_body = atoms(r.pos_body());
        m.neg_body = atoms(r.neg_body());
        out.rules.push_back(std::move(m));
    }
    std::size_t k = 0;
    for (const auto& w : p.weak_constraints()) {
        MetaRule m;
        m.id       = "wc" + std::to_string(++k);
        m.pos_body = atoms(w.pos_body());
        m.neg_body = atoms(w.neg_body());
        m.weak     = WeakSpec{w.weight(), w.level()};
        out.rules.push_back(std::move(m));
    }
    return out;
}

bool is_stratified(const Program& p) {
    // Edges head -> body literal; negative edges must not lie on a cycle. Computed via SCCs.
    std::map<ClassicalLiteral, int> ids;
    auto id = [&](const ClassicalLiteral& l) { return ids.emplace(l, static_cast<int>(ids.size())).first->second; };
    struct Edge {
        int  from, to;
        bool negative;
    };
    std::vector<Edge> edges;
    for (const auto& r : p.rules()) {
        for (const auto& h : r.head()) {
            for (const auto& b : r.pos_body()) {
                edges.push_back({id(h), id(b), false});
            }
            for (const auto& b : r.neg_body()) {
                edges.push_back({id(h), id(b), true});
            }
            for (const auto& h2 : r.head()) {
                if (!(h2 == h)) {
                    edges.push_back({id(h), id(h2), true});
                }
            }
        }
    }
    const int                     n = static_cast<int>(ids.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.from].push_back(e.to);
    }
    // Tarjan, iterative.
    std::vector<int>  index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int               counter = 0, comps = 0;
    for (int s = 0; s != n; ++s) {
        if (index[s] >= 0) {
            continue;
        }
        std::vector<std::pair<int, std::size_t>> call{{s, 0}};
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                }
                else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                for (int w = -1; w != v;) {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w]     = comps;
                }
                ++comps;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
        }
    }
    return std::none_of(edges.begin(), edges.end(),
                        [&](const Edge& e) { return e.negative && comp[e.from] == comp[e.to]; });
}

} // namespace prefasp
