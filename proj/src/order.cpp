#include <prefasp/order.hpp>

#include <map>

namespace prefasp {
namespace {

// Dense boolean relation over the (sorted) domain of an order.
struct Matrix {
    std::vector<RuleId>             ids;
    std::map<RuleId, std::size_t>   index;
    std::vector<std::vector<char>>  rel;

    explicit Matrix(const RuleOrder& o)
        : ids(o.domain().begin(), o.domain().end())
        , rel(ids.size(), std::vector<char>(ids.size(), 0)) {
        for (std::size_t i = 0; i != ids.size(); ++i) {
            index[ids[i]] = i;
        }
        for (const auto& [a, b] : o.pairs()) {
            rel[index[a]][index[b]] = 1;
        }
    }
    void close() {
        const std::size_t n = ids.size();
        for (std::size_t k = 0; k != n; ++k) {
            for (std::size_t i = 0; i != n; ++i) {
                if (!rel[i][k]) {
                    continue;
                }
                for (std::size_t j = 0; j != n; ++j) {
                    rel[i][j] |= rel[k][j];
                }
            }
        }
    }
    [[nodiscard]] bool irreflexive() const {
        for (std::size_t i = 0; i != ids.size(); ++i) {
            if (rel[i][i]) {
                return false;
            }
        }
        return true;
    }
    [[nodiscard]] RuleOrder to_order() const {
        std::set<RuleOrder::Pair> pairs;
        for (std::size_t i = 0; i != ids.size(); ++i) {
            for (std::size_t j = 0; j != ids.size(); ++j) {
                if (rel[i][j]) {
                    pairs.emplace(ids[i], ids[j]);
                }
            }
        }
        return RuleOrder(std::set<RuleId>(ids.begin(), ids.end()), std::move(pairs));
    }
};

void extend(const Matrix& m, std::vector<char>& placed, std::vector<RuleId>& seq, std::vector<RuleOrder>& out) {
    const std::size_t n = m.ids.size();
    if (seq.size() == n) {
        out.push_back(RuleOrder::from_sequence(seq));
        return;
    }
    for (std::size_t x = 0; x != n; ++x) {
        if (placed[x]) {
            continue;
        }
        bool ready = true;
        for (std::size_t y = 0; y != n && ready; ++y) {
            ready = placed[y] || !m.rel[y][x];
        }
        if (!ready) {
            continue;
        }
        placed[x] = 1;
        seq.push_back(m.ids[x]);
        extend(m, placed, seq, out);
        seq.pop_back();
        placed[x] = 0;
    }
}

} // namespace

RuleOrder transitive_closure(const RuleOrder& o) {
    Matrix m(o);
    m.close();
    return m.to_order();
}

bool is_strict_partial_order(const RuleOrder& o) {
    Matrix m(o);
    m.close();
    return m.irreflexive();
}

RuleOrder transitive_reduction(const RuleOrder& o) {
    Matrix m(o);
    m.close();
    if (!m.irreflexive()) {
        throw InvalidInput("transitive reduction of a cyclic relation");
    }
    const std::size_t n = m.ids.size();
    Matrix            red = m;
    for (std::size_t i = 0; i != n; ++i) {
        for (std::size_t j = 0; j != n; ++j) {
            if (!m.rel[i][j]) {
                continue;
            }
            for (std::size_t k = 0; k != n; ++k) {
                if (m.rel[i][k] && m.rel[k][j]) {
                    red.rel[i][j] = 0;
                    break;
                }
            }
        }
    }
    return red.to_order();
}

std::vector<RuleOrder> linear_extensions(const RuleOrder& o, std::size_t max_elements) {
    if (o.domain().size() > max_elements) {
        throw LimitExceeded("enumerating total orders of " + std::to_string(o.domain().size()) +
                            " rules exceeds the limit of " + std::to_string(max_elements));
    }
    Matrix m(o);
    m.close();
    if (!m.irreflexive()) {
        throw InvalidInput("order is cyclic");
    }
    std::vector<RuleOrder> out;
    std::vector<char>      placed(m.ids.size(), 0);
    std::vector<RuleId>    seq;
    extend(m, placed, seq, out);
    return out;
}

std::vector<RuleOrder> full_prioritizations(const PrioritizedProgram& p, std::size_t max_rules) {
    return linear_extensions(p.order(), max_rules);
}

std::int64_t sequence_distance(const std::vector<RuleId>& s1, const std::vector<RuleId>& s2) {
    std::map<RuleId, std::size_t> pos2;
    for (std::size_t i = 0; i != s2.size(); ++i) {
        pos2[s2[i]] = i;
    }
    if (pos2.size() != s1.size() || s1.size() != s2.size()) {
        throw InvalidInput("orders have different domains");
    }
    std::vector<std::size_t> mapped;
    mapped.reserve(s1.size());
    for (const auto& id : s1) {
        auto it = pos2.find(id);
        if (it == pos2.end()) {
            throw InvalidInput("orders have different domains");
        }
        mapped.push_back(it->second);
    }
    std::int64_t d = 0;
    for (std::size_t i = 0; i != mapped.size(); ++i) {
        for (std::size_t j = i + 1; j != mapped.size(); ++j) {
            d += mapped[j] < mapped[i];
        }
    }
    return d;
}

std::int64_t order_distance(const RuleOrder& o1, const RuleOrder& o2) {
    if (o1.domain() != o2.domain()) {
        throw InvalidInput("orders have different domains");
    }
    return sequence_distance(o1.sequence(), o2.sequence());
}

} // namespace prefasp
