#pragma once
// Test helpers and brute-force oracles. The oracles deliberately avoid the library's own
// algorithms: they only use the model types.

#include <prefasp/model.hpp>
#include <prefasp/parser.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace prefasp::test {

inline std::string corpus_path(const std::string& name) { return std::string(PREFASP_CORPUS_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> corpus_programs() {
    std::vector<std::string> out;
    for (const char* n : {"b_not_w", "bird_penguin", "constraint", "disjunctive_abc", "disjunctive_loop",
                          "disjunctive_weak", "duplicate_reduct", "empty", "full_order_trace", "neg_prefixed",
                          "no_preferred", "odd_loop", "stratified", "w_not_d", "weak_levels", "zombies"}) {
        out.emplace_back(n);
    }
    return out;
}

inline nlohmann::json expected(const std::string& name) {
    return nlohmann::json::parse(read_file(corpus_path(name + ".expected.json")));
}

inline Interpretation interp(std::initializer_list<const char*> lits) {
    Interpretation out;
    for (const char* l : lits) {
        out.insert(lit(l));
    }
    return out;
}

inline Interpretation interp(const nlohmann::json& j) {
    Interpretation out;
    for (const auto& l : j) {
        out.insert(lit(l.get<std::string>()));
    }
    return out;
}

inline std::vector<Interpretation> interps(const nlohmann::json& j) {
    std::vector<Interpretation> out;
    for (const auto& s : j) {
        out.push_back(interp(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string show(const std::vector<Interpretation>& v) {
    std::string out = "[";
    for (const auto& I : v) {
        out += " " + to_string(I);
    }
    return out + " ]";
}

// ---- answer sets -------------------------------------------------------------------------

namespace detail {

inline bool subset(const LiteralVec& v, const Interpretation& I) {
    return std::all_of(v.begin(), v.end(), [&](const ClassicalLiteral& l) { return I.count(l) != 0; });
}

inline bool meets(const LiteralVec& v, const Interpretation& I) {
    return std::any_of(v.begin(), v.end(), [&](const ClassicalLiteral& l) { return I.count(l) != 0; });
}

// Closed under the rules not defeated by `guess`, ignoring negative bodies.
inline bool closed_under_reduct(const Program& p, const Interpretation& guess, const Interpretation& X) {
    for (const auto& r : p.rules()) {
        if (meets(r.neg_body(), guess) || !subset(r.pos_body(), X)) {
            continue;
        }
        if (!meets(r.head(), X)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Every consistent literal set over the atoms of p, checked for being a minimal closed set
/// of its reduct by trying all proper subsets.
inline std::vector<Interpretation> brute_force_answer_sets(const Program& p) {
    const auto        atom_set = p.atoms();
    std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    const std::size_t n = atoms.size();
    std::uint64_t     total = 1;
    for (std::size_t i = 0; i != n; ++i) {
        total *= 3;
    }
    std::vector<Interpretation> out;
    for (std::uint64_t code = 0; code != total; ++code) {
        Interpretation I;
        std::uint64_t  c = code;
        for (std::size_t i = 0; i != n; ++i, c /= 3) {
            if (c % 3 == 1) {
                I.insert(ClassicalLiteral(atoms[i], true));
            }
            else if (c % 3 == 2) {
                I.insert(ClassicalLiteral(atoms[i], false));
            }
        }
        if (!detail::closed_under_reduct(p, I, I)) {
            continue;
        }
        std::vector<ClassicalLiteral> items(I.begin(), I.end());
        bool                          minimal = true;
        for (std::uint64_t mask = 0; minimal && mask + 1 < (std::uint64_t{1} << items.size()); ++mask) {
            Interpretation sub;
            for (std::size_t i = 0; i != items.size(); ++i) {
                if (mask >> i & 1) {
                    sub.insert(items[i]);
                }
            }
            minimal = !detail::closed_under_reduct(p, I, sub);
        }
        if (minimal) {
            out.push_back(std::move(I));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- orders ------------------------------------------------------------------------------

/// Floyd-Warshall style closure over a boolean matrix.
inline std::set<RuleOrder::Pair> brute_closure(const RuleOrder& o) {
    std::vector<RuleId>       ids(o.domain().begin(), o.domain().end());
    const std::size_t         n = ids.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    auto                      idx = [&](const RuleId& r) {
        return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), r) - ids.begin());
    };
    for (const auto& [a, b] : o.pairs()) {
        m[idx(a)][idx(b)] = 1;
    }
    for (std::size_t k = 0; k != n; ++k) {
        for (std::size_t i = 0; i != n; ++i) {
            for (std::size_t j = 0; j != n; ++j) {
                m[i][j] = m[i][j] || (m[i][k] && m[k][j]);
            }
        }
    }
    std::set<RuleOrder::Pair> out;
    for (std::size_t i = 0; i != n; ++i) {
        for (std::size_t j = 0; j != n; ++j) {
            if (m[i][j]) {
                out.emplace(ids[i], ids[j]);
            }
        }
    }
    return out;
}

/// Smallest subset of the closure with the same closure, by trying subsets in increasing size.
inline std::set<RuleOrder::Pair> brute_reduction(const RuleOrder& o) {
    auto                          cl = brute_closure(o);
    std::vector<RuleOrder::Pair> pairs(cl.begin(), cl.end());
    for (std::size_t k = 0; k <= pairs.size(); ++k) {
        std::vector<char> pick(pairs.size(), 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
        do {
            std::set<RuleOrder::Pair> sub;
            for (std::size_t i = 0; i != pairs.size(); ++i) {
                if (pick[i]) {
                    sub.insert(pairs[i]);
                }
            }
            if (brute_closure(RuleOrder(o.domain(), sub)) == cl) {
                return sub;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return cl;
}

/// Number of adjacent swaps bubble sort performs to turn `from` into `to`.
inline std::int64_t bubble_sort_swaps(const std::vector<RuleId>& from, const std::vector<RuleId>& to) {
    std::map<RuleId, std::size_t> rank;
    for (std::size_t i = 0; i != to.size(); ++i) {
        rank[to[i]] = i;
    }
    std::vector<std::size_t> v;
    for (const auto& r : from) {
        v.push_back(rank.at(r));
    }
    std::int64_t swaps = 0;
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                ++swaps;
                again = true;
            }
        }
    }
    return swaps;
}

/// All permutations of the domain that respect every pair of `o` (after closure).
inline std::vector<std::vector<RuleId>> brute_extensions(const RuleOrder& o) {
    std::vector<RuleId>              seq(o.domain().begin(), o.domain().end());
    auto                             cl = brute_closure(o);
    std::vector<std::vector<RuleId>> out;
    do {
        std::map<RuleId, std::size_t> pos;
        for (std::size_t i = 0; i != seq.size(); ++i) {
            pos[seq[i]] = i;
        }
        if (std::all_of(cl.begin(), cl.end(), [&](const RuleOrder::Pair& p) { return pos[p.first] < pos[p.second]; })) {
            out.push_back(seq);
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

// ---- B-preferredness ---------------------------------------------------------------------

/// C_B of the dual reduct of (p, seq) under A, straight from the definitions. Returns nullopt
/// for the inconsistent case.
inline std::optional<Interpretation> brute_cb(const Program& p, const std::vector<RuleId>& seq,
                                              const Interpretation& A) {
    std::vector<const Rule*> reduct;
    for (const auto& id : seq) {
        const Rule* r = p.find(id);
        if (!detail::subset(r->pos_body(), A)) {
            continue;
        }
        bool dup = std::any_of(reduct.begin(), reduct.end(), [&](const Rule* q) {
            return q->head() == r->head() && q->neg_body() == r->neg_body();
        });
        if (!dup) {
            reduct.push_back(r);
        }
    }
    Interpretation S;
    for (const Rule* r : reduct) {
        bool alpha = detail::meets(r->neg_body(), S);
        bool beta  = detail::subset(r->head(), A) && detail::meets(r->neg_body(), A);
        if (!alpha && !beta) {
            S.insert(r->head().begin(), r->head().end());
        }
    }
    if (!is_consistent(S)) {
        return std::nullopt;
    }
    return S;
}

inline bool brute_b_preferred(const PrioritizedProgram& p, const Interpretation& A) {
    for (const auto& seq : brute_extensions(p.order())) {
        if (brute_cb(p.program(), seq, A) == A) {
            return true;
        }
    }
    return false;
}

} // namespace prefasp::test
