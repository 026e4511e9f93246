#include <prefasp/solver.hpp>

#include <prefasp/grounder.hpp>

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace prefasp {
namespace {

constexpr signed char kTrue  = 1;
constexpr signed char kFalse = -1;
constexpr signed char kFree  = 0;

// Rule of a reduct restricted to a candidate model M, over local indices 0..|M|-1.
struct LocalRule {
    std::vector<int> pos;
    std::vector<int> heads; // H(r) ∩ M
};

// Small DPLL over clauses "pos -> some head"; looks for a model that drops at least one atom.
class SubsetSearch {
public:
    SubsetSearch(const std::vector<LocalRule>& rules, int m) : rules_(rules), val_(m, kFree) {}

    bool run() { return search(); }

private:
    // Returns false on conflict.
    bool propagate(std::vector<int>& trail) {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : rules_) {
                int  free_lit = -1, frees = 0;
                bool sat      = false;
                for (int p : r.pos) {
                    if (val_[p] == kFalse) {
                        sat = true;
                        break;
                    }
                    if (val_[p] == kFree) {
                        ++frees;
                        free_lit = ~p;
                    }
                }
                for (std::size_t i = 0; !sat && i != r.heads.size(); ++i) {
                    int h = r.heads[i];
                    if (val_[h] == kTrue) {
                        sat = true;
                    }
                    else if (val_[h] == kFree) {
                        ++frees;
                        free_lit = h;
                    }
                }
                if (sat) {
                    continue;
                }
                if (frees == 0) {
                    return false;
                }
                if (frees == 1) {
                    int a   = free_lit >= 0 ? free_lit : ~free_lit;
                    val_[a] = free_lit >= 0 ? kTrue : kFalse;
                    trail.push_back(a);
                    changed = true;
                }
            }
            // At least one atom of M must be dropped.
            int frees = 0, last = -1;
            bool sat = false;
            for (int a = 0; a != static_cast<int>(val_.size()); ++a) {
                if (val_[a] == kFalse) {
                    sat = true;
                    break;
                }
                if (val_[a] == kFree) {
                    ++frees;
                    last = a;
                }
            }
            if (!sat) {
                if (frees == 0) {
                    return false;
                }
                if (frees == 1) {
                    val_[last] = kFalse;
                    trail.push_back(last);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            undo(trail);
            return false;
        }
        auto it = std::find(val_.begin(), val_.end(), kFree);
        if (it == val_.end()) {
            undo(trail);
            return true;
        }
        int a = static_cast<int>(it - val_.begin());
        for (signed char v : {kFalse, kTrue}) {
            val_[a] = v;
            if (search()) {
                val_[a] = kFree;
                undo(trail);
                return true;
            }
            val_[a] = kFree;
        }
        undo(trail);
        return false;
    }

    void undo(std::vector<int>& trail) {
        for (int a : trail) {
            val_[a] = kFree;
        }
        trail.clear();
    }

    const std::vector<LocalRule>& rules_;
    std::vector<signed char>      val_;
};

// True iff no proper subset of M (atoms 0..m-1) is closed under the given rules.
bool minimal(const std::vector<LocalRule>& rules, int m) {
    bool single = std::all_of(rules.begin(), rules.end(), [](const LocalRule& r) { return r.heads.size() == 1; });
    if (single) {
        // Least model of the definite program obtained by keeping the one true head.
        std::vector<int>              missing(rules.size());
        std::vector<std::vector<int>> watch(m);
        std::vector<char>             in(m, 0);
        std::vector<int>              queue;
        for (std::size_t i = 0; i != rules.size(); ++i) {
            missing[i] = static_cast<int>(rules[i].pos.size());
            for (int p : rules[i].pos) {
                watch[p].push_back(static_cast<int>(i));
            }
            if (missing[i] == 0 && !in[rules[i].heads[0]]) {
                in[rules[i].heads[0]] = 1;
                queue.push_back(rules[i].heads[0]);
            }
        }
        for (std::size_t q = 0; q != queue.size(); ++q) {
            for (int r : watch[queue[q]]) {
                if (--missing[r] == 0 && !in[rules[r].heads[0]]) {
                    in[rules[r].heads[0]] = 1;
                    queue.push_back(rules[r].heads[0]);
                }
            }
        }
        return static_cast<int>(queue.size()) == m;
    }
    return !SubsetSearch(rules, m).run();
}

} // namespace

struct Solver::Impl {
    struct GRule {
        std::vector<int> head, pos, neg;
    };
    struct GWeak {
        std::vector<int> pos, neg;
        std::int64_t     cost = 0;
        int              size = 0;
    };
    struct Decision {
        int         atom;
        std::size_t trail_pos;
        bool        flipped;
    };

    std::vector<ClassicalLiteral>        lits;
    std::unordered_map<std::string, int> ids;
    std::vector<GRule>                   rules;
    std::vector<GWeak>                   weak;
    std::vector<std::vector<int>>        occ_head, occ_pos, occ_neg, occ_wpos, occ_wneg;
    std::vector<int>                     comp;

    std::vector<signed char> val;
    std::vector<int>         trail;
    std::vector<Decision>    decisions;
    std::vector<int>         queue;
    std::size_t              qhead = 0;
    std::vector<int>         wsat;
    std::int64_t             cost      = 0;
    std::int64_t             base_cost = 0;
    std::vector<unsigned>    stamp;
    unsigned                 epoch = 0;
    SolverStats              stats;
    bool                     stratified = false;

    explicit Impl(const Program& p) : stratified(p.is_normal() && is_stratified(p)) {
        for (const auto& r : p.rules()) {
            rules.push_back({index(r.head()), index(r.pos_body()), index(r.neg_body())});
        }
        for (const auto& w : p.weak_constraints()) {
            GWeak g{index(w.pos_body()), index(w.neg_body()), w.weight() * level_factor(p, w.level()), 0};
            g.size = static_cast<int>(g.pos.size() + g.neg.size());
            weak.push_back(std::move(g));
        }
        const std::size_t n = lits.size();
        occ_head.resize(n);
        occ_pos.resize(n);
        occ_neg.resize(n);
        occ_wpos.resize(n);
        occ_wneg.resize(n);
        comp.assign(n, -1);
        for (std::size_t i = 0; i != rules.size(); ++i) {
            for (int a : rules[i].head) {
                occ_head[a].push_back(static_cast<int>(i));
            }
            for (int a : rules[i].pos) {
                occ_pos[a].push_back(static_cast<int>(i));
            }
            for (int a : rules[i].neg) {
                occ_neg[a].push_back(static_cast<int>(i));
            }
        }
        for (std::size_t i = 0; i != weak.size(); ++i) {
            for (int a : weak[i].pos) {
                occ_wpos[a].push_back(static_cast<int>(i));
            }
            for (int a : weak[i].neg) {
                occ_wneg[a].push_back(static_cast<int>(i));
            }
            if (weak[i].size == 0) {
                base_cost += weak[i].cost;
            }
        }
        for (std::size_t i = 0; i != n; ++i) {
            auto it = ids.find(complement(lits[i]).str());
            if (it != ids.end()) {
                comp[i] = it->second;
            }
        }
        stamp.assign(n, 0);
    }

    int id(const ClassicalLiteral& l) {
        auto [it, fresh] = ids.emplace(l.str(), static_cast<int>(lits.size()));
        if (fresh) {
            lits.push_back(l);
        }
        return it->second;
    }

    std::vector<int> index(const LiteralVec& v) {
        std::vector<int> out;
        out.reserve(v.size());
        for (const auto& l : v) {
            out.push_back(id(l));
        }
        return out;
    }

    void reset() {
        val.assign(lits.size(), kFree);
        trail.clear();
        decisions.clear();
        queue.clear();
        qhead = 0;
        wsat.assign(weak.size(), 0);
        cost = base_cost;
    }

    void weak_inc(int a, signed char v) {
        for (int w : (v == kTrue ? occ_wpos[a] : occ_wneg[a])) {
            if (++wsat[w] == weak[w].size) {
                cost += weak[w].cost;
            }
        }
    }

    void weak_dec(int a, signed char v) {
        for (int w : (v == kTrue ? occ_wpos[a] : occ_wneg[a])) {
            if (wsat[w]-- == weak[w].size) {
                cost -= weak[w].cost;
            }
        }
    }

    bool assign(int a, signed char v) {
        if (val[a] == v) {
            return true;
        }
        if (val[a] != kFree) {
            return false;
        }
        val[a] = v;
        trail.push_back(a);
        queue.push_back(a);
        weak_inc(a, v);
        return true;
    }

    void undo_to(std::size_t pos) {
        while (trail.size() > pos) {
            int a = trail.back();
            trail.pop_back();
            weak_dec(a, val[a]);
            val[a] = kFree;
        }
        queue.clear();
        qhead = 0;
    }

    bool body_false(const GRule& r) const {
        for (int p : r.pos) {
            if (val[p] == kFalse) {
                return true;
            }
        }
        for (int n : r.neg) {
            if (val[n] == kTrue) {
                return true;
            }
        }
        return false;
    }

    bool check_rule(const GRule& r) {
        int  body_free = 0, free_body_lit = 0;
        bool free_is_pos = true;
        for (int p : r.pos) {
            if (val[p] == kFalse) {
                return true;
            }
            if (val[p] == kFree) {
                ++body_free;
                free_body_lit = p;
                free_is_pos   = true;
            }
        }
        for (int n : r.neg) {
            if (val[n] == kTrue) {
                return true;
            }
            if (val[n] == kFree) {
                ++body_free;
                free_body_lit = n;
                free_is_pos   = false;
            }
        }
        int head_free = 0, free_head = -1;
        for (int h : r.head) {
            if (val[h] == kTrue) {
                return true;
            }
            if (val[h] == kFree) {
                ++head_free;
                free_head = h;
            }
        }
        if (body_free == 0) {
            if (head_free == 0) {
                return false;
            }
            if (head_free == 1) {
                return assign(free_head, kTrue);
            }
            return true;
        }
        if (head_free == 0 && body_free == 1) {
            return assign(free_body_lit, free_is_pos ? kFalse : kTrue);
        }
        return true;
    }

    bool check_support(int a) {
        if (val[a] == kFalse) {
            return true;
        }
        int candidates = 0, last = -1;
        for (int ri : occ_head[a]) {
            const GRule& r = rules[ri];
            if (body_false(r)) {
                continue;
            }
            bool other_true = false;
            for (int h : r.head) {
                if (h != a && val[h] == kTrue) {
                    other_true = true;
                    break;
                }
            }
            if (other_true) {
                continue;
            }
            last = ri;
            if (++candidates > 1) {
                return true;
            }
        }
        if (candidates == 0) {
            return assign(a, kFalse);
        }
        if (val[a] != kTrue) {
            return true;
        }
        const GRule& r = rules[last];
        for (int p : r.pos) {
            if (!assign(p, kTrue)) {
                return false;
            }
        }
        for (int n : r.neg) {
            if (!assign(n, kFalse)) {
                return false;
            }
        }
        for (int h : r.head) {
            if (h != a && !assign(h, kFalse)) {
                return false;
            }
        }
        return true;
    }

    bool touch_rule(int ri) {
        const GRule& r = rules[ri];
        if (!check_rule(r)) {
            return false;
        }
        for (int h : r.head) {
            if (stamp[h] != epoch) {
                stamp[h] = epoch;
                if (!check_support(h)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool propagate() {
        while (qhead < queue.size()) {
            int a = queue[qhead++];
            if (++epoch == 0) {
                std::fill(stamp.begin(), stamp.end(), 0);
                epoch = 1;
            }
            if (val[a] == kTrue && comp[a] >= 0 && !assign(comp[a], kFalse)) {
                return false;
            }
            if (val[a] == kTrue) {
                stamp[a] = epoch;
                if (!check_support(a)) {
                    return false;
                }
            }
            for (const auto* occ : {&occ_head[a], &occ_pos[a], &occ_neg[a]}) {
                for (int ri : *occ) {
                    if (!touch_rule(ri)) {
                        return false;
                    }
                }
            }
        }
        queue.clear();
        qhead = 0;
        return true;
    }

    bool initial() {
        reset();
        for (const auto& r : rules) {
            if (!check_rule(r)) {
                return false;
            }
        }
        for (int a = 0; a != static_cast<int>(lits.size()); ++a) {
            if (!check_support(a)) {
                return false;
            }
        }
        return propagate();
    }

    bool backtrack() {
        while (!decisions.empty()) {
            Decision& d = decisions.back();
            undo_to(d.trail_pos);
            if (!d.flipped) {
                d.flipped = true;
                assign(d.atom, kTrue);
                return true;
            }
            decisions.pop_back();
        }
        return false;
    }

    int pick() const {
        auto it = std::find(val.begin(), val.end(), kFree);
        return it == val.end() ? -1 : static_cast<int>(it - val.begin());
    }

    bool stable() {
        std::vector<int> local(lits.size(), -1);
        int              m = 0;
        for (int a = 0; a != static_cast<int>(lits.size()); ++a) {
            if (val[a] == kTrue) {
                local[a] = m++;
            }
        }
        std::vector<LocalRule> reduct;
        for (const auto& r : rules) {
            if (r.head.empty() || body_false(r)) {
                continue;
            }
            LocalRule lr;
            for (int p : r.pos) {
                lr.pos.push_back(local[p]);
            }
            for (int h : r.head) {
                if (val[h] == kTrue) {
                    lr.heads.push_back(local[h]);
                }
            }
            reduct.push_back(std::move(lr));
        }
        return minimal(reduct, m);
    }

    Interpretation current() const {
        Interpretation out;
        for (std::size_t a = 0; a != lits.size(); ++a) {
            if (val[a] == kTrue) {
                out.insert(lits[a]);
            }
        }
        return out;
    }

    // Least model of the rules whose negative body is disjoint from `assumed`.
    std::vector<char> gamma(const std::vector<char>& assumed) const {
        std::vector<char> in(lits.size(), 0);
        std::vector<int>  missing(rules.size(), 0), agenda;
        for (std::size_t i = 0; i != rules.size(); ++i) {
            const auto& r = rules[i];
            bool blocked  = r.head.empty();
            for (int b : r.neg) {
                blocked = blocked || assumed[b];
            }
            missing[i] = blocked ? -1 : static_cast<int>(r.pos.size());
            if (missing[i] == 0 && !in[r.head[0]]) {
                in[r.head[0]] = 1;
                agenda.push_back(r.head[0]);
            }
        }
        while (!agenda.empty()) {
            int a = agenda.back();
            agenda.pop_back();
            for (int ri : occ_pos[a]) {
                if (missing[ri] > 0 && --missing[ri] == 0 && !in[rules[ri].head[0]]) {
                    in[rules[ri].head[0]] = 1;
                    agenda.push_back(rules[ri].head[0]);
                }
            }
        }
        return in;
    }

    // Stratified normal programs: the alternating fixpoint is total and yields the only
    // candidate, so no search is needed.
    // Returns false if the fixpoint is not total (then a normal search is needed).
    template <class Visit>
    bool evaluate_stratified(Visit&& visit) {
        std::vector<char> lower(lits.size(), 0), upper;
        for (;;) {
            upper                  = gamma(lower);
            std::vector<char> next = gamma(upper);
            if (next == lower) {
                break;
            }
            lower = std::move(next);
        }
        if (upper != lower) {
            return false;
        }
        reset();
        for (int a = 0; a != static_cast<int>(lits.size()); ++a) {
            assign(a, lower[a] ? kTrue : kFalse);
            if (lower[a] && comp[a] >= 0 && lower[comp[a]]) {
                return true;
            }
        }
        queue.clear();
        for (const auto& r : rules) {
            if (r.head.empty() && !body_false(r)) {
                return true;
            }
        }
        ++stats.models;
        visit();
        return true;
    }

    // Visits total stable assignments; `bound` (if set) prunes partial assignments whose cost
    // exceeds *bound. The visitor returns false to stop.
    template <class Visit>
    void search(const SolveOptions& opts, const std::int64_t* bound, Visit&& visit) {
        if (stratified && evaluate_stratified(visit)) {
            return;
        }
        if (!initial()) {
            return;
        }
        std::uint64_t ticks = 0;
        for (;;) {
            if (opts.deadline && (++ticks & 255) == 0 && std::chrono::steady_clock::now() > *opts.deadline) {
                throw Timeout("solver deadline exceeded");
            }
            bool conflict = bound && cost > *bound;
            if (!conflict) {
                int a = pick();
                if (a >= 0) {
                    ++stats.decisions;
                    decisions.push_back({a, trail.size(), false});
                    assign(a, kFalse);
                    if (propagate()) {
                        continue;
                    }
                    conflict = true;
                }
                else if (stable()) {
                    ++stats.models;
                    if (!visit()) {
                        return;
                    }
                }
                else {
                    ++stats.minimality_fails;
                }
            }
            if (conflict) {
                ++stats.conflicts;
            }
            for (;;) {
                if (!backtrack()) {
                    return;
                }
                if (propagate()) {
                    break;
                }
                ++stats.conflicts;
            }
        }
    }
};

Solver::Solver(const Program& p) : impl_(std::make_unique<Impl>(p)) {}
Solver::~Solver() = default;

const SolverStats& Solver::stats() const noexcept { return impl_->stats; }

void Solver::enumerate(const Visitor& visit, const SolveOptions& opts) {
    impl_->search(opts, nullptr, [&] { return visit(impl_->current()); });
}

std::optional<std::int64_t> Solver::enumerate_optimal(
    const std::function<void(const Interpretation&, std::int64_t)>& visit, const SolveOptions& opts) {
    std::int64_t                best = std::numeric_limits<std::int64_t>::max();
    std::optional<std::int64_t> found;
    impl_->search(opts, opts.branch_and_bound ? &best : nullptr, [&] {
        std::int64_t c = impl_->cost;
        if (c <= best) {
            best  = c;
            found = c;
            visit(impl_->current(), c);
        }
        return true;
    });
    return found;
}

GroundReduct gl_reduct(const Program& p, const Interpretation& I) {
    std::vector<Rule> out;
    for (const auto& r : p.rules()) {
        bool defeated = std::any_of(r.neg_body().begin(), r.neg_body().end(),
                                    [&](const ClassicalLiteral& l) { return I.count(l) != 0; });
        if (!defeated) {
            out.emplace_back(r.id(), r.head(), r.pos_body());
        }
    }
    return Program(std::move(out));
}

bool is_closed(const Interpretation& I, const GroundReduct& p) {
    for (const auto& r : p.rules()) {
        bool body = std::all_of(r.pos_body().begin(), r.pos_body().end(),
                                [&](const ClassicalLiteral& l) { return I.count(l) != 0; });
        if (!body) {
            continue;
        }
        if (std::none_of(r.head().begin(), r.head().end(), [&](const ClassicalLiteral& l) { return I.count(l) != 0; })) {
            return false;
        }
    }
    return true;
}

bool is_answer_set(const Program& p, const Interpretation& I) {
    if (!is_consistent(I)) {
        return false;
    }
    GroundReduct reduct = gl_reduct(p.without_weak_constraints(), I);
    if (!is_closed(I, reduct)) {
        return false;
    }
    std::map<ClassicalLiteral, int> local;
    for (const auto& l : I) {
        local.emplace(l, static_cast<int>(local.size()));
    }
    std::vector<LocalRule> rules;
    for (const auto& r : reduct.rules()) {
        if (r.head().empty()) {
            continue;
        }
        LocalRule lr;
        bool      applicable = true;
        for (const auto& l : r.pos_body()) {
            auto it = local.find(l);
            if (it == local.end()) {
                applicable = false;
                break;
            }
            lr.pos.push_back(it->second);
        }
        if (!applicable) {
            continue;
        }
        for (const auto& l : r.head()) {
            auto it = local.find(l);
            if (it != local.end()) {
                lr.heads.push_back(it->second);
            }
        }
        rules.push_back(std::move(lr));
    }
    return minimal(rules, static_cast<int>(local.size()));
}

std::int64_t level_factor(const Program& p, std::int64_t level) {
    const auto&  wc   = p.weak_constraints();
    std::int64_t wmax = 0;
    for (const auto& w : wc) {
        wmax = std::max(wmax, w.weight());
    }
    std::int64_t f = 1;
    for (std::int64_t i = 2; i <= level; ++i) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(f, static_cast<std::int64_t>(wc.size()), &t) || __builtin_mul_overflow(t, wmax, &t) ||
            __builtin_add_overflow(t, 1, &f)) {
            throw LimitExceeded("weak constraint objective overflows 64-bit integers");
        }
    }
    return f;
}

ObjectiveValue objective(const Program& p, const Interpretation& A) {
    ObjectiveValue v;
    for (const auto& w : p.weak_constraints()) {
        if (!w.violated_by(A)) {
            continue;
        }
        v.level_weights[w.level()] += w.weight();
    }
    for (const auto& [level, sum] : v.level_weights) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(level_factor(p, level), sum, &t) || __builtin_add_overflow(v.H, t, &v.H)) {
            throw LimitExceeded("weak constraint objective overflows 64-bit integers");
        }
    }
    return v;
}

std::vector<Interpretation> answer_sets(const Program& p, const SolveOptions& opts) {
    std::vector<Interpretation> out;
    Solver                      s(p.without_weak_constraints());
    s.enumerate(
        [&](const Interpretation& I) {
            out.push_back(I);
            return true;
        },
        opts);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OptimalAnswerSet> optimal_answer_sets(const Program& p, const SolveOptions& opts) {
    std::vector<std::pair<Interpretation, std::int64_t>> seen;
    Solver                                               s(p);
    auto best = s.enumerate_optimal([&](const Interpretation& I, std::int64_t c) { seen.emplace_back(I, c); }, opts);
    std::vector<OptimalAnswerSet> out;
    if (!best) {
        return out;
    }
    for (auto& [I, c] : seen) {
        if (c == *best) {
            ObjectiveValue v = objective(p, I);
            out.push_back({std::move(I), std::move(v)});
        }
    }
    std::sort(out.begin(), out.end(), [](const OptimalAnswerSet& a, const OptimalAnswerSet& b) { return a.set < b.set; });
    return out;
}

std::optional<std::chrono::steady_clock::time_point> deadline_after(double seconds) {
    if (seconds <= 0) {
        return std::nullopt;
    }
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

} // namespace prefasp
