#include <prefasp/model.hpp>
#include <prefasp/order.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace prefasp {

ParseError::ParseError(const std::string& msg, SourceSpan span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + msg)
    , span_(span)
    , msg_(msg) {}

bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_constant(std::string_view s) noexcept {
    if (is_identifier(s)) {
        return true;
    }
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Atom::Atom(std::string predicate, std::vector<std::string> args)
    : predicate_(std::move(predicate))
    , args_(std::move(args)) {
    if (!is_identifier(predicate_)) {
        throw InvalidInput("invalid predicate name '" + predicate_ + "'");
    }
    text_ = predicate_;
    if (!args_.empty()) {
        text_ += '(';
        for (std::size_t i = 0; i != args_.size(); ++i) {
            if (!is_constant(args_[i])) {
                throw InvalidInput("invalid constant '" + args_[i] + "'");
            }
            if (i) {
                text_ += ',';
            }
            text_ += args_[i];
        }
        text_ += ')';
    }
}

ClassicalLiteral lit(std::string_view text) {
    bool pos = true;
    if (!text.empty() && text.front() == '-') {
        pos = false;
        text.remove_prefix(1);
    }
    return {Atom(std::string(text)), pos};
}

ClassicalLiteral complement(const ClassicalLiteral& l) { return {l.atom, !l.positive}; }

bool is_consistent(const Interpretation& interp) {
    // Negative literals sort first; look each one up among the positives.
    for (const auto& l : interp) {
        if (l.positive) {
            break;
        }
        if (interp.count(complement(l))) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Interpretation& interp) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& l : interp) {
        out += std::exchange(sep, ", ");
        out += l.str();
    }
    return out + "}";
}

namespace {
LiteralVec normalize(LiteralVec v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
bool holds_all(const LiteralVec& lits, const Interpretation& interp) {
    return std::all_of(lits.begin(), lits.end(), [&](const ClassicalLiteral& l) { return interp.count(l) != 0; });
}
bool holds_none(const LiteralVec& lits, const Interpretation& interp) {
    return std::none_of(lits.begin(), lits.end(), [&](const ClassicalLiteral& l) { return interp.count(l) != 0; });
}
} // namespace

Rule::Rule(RuleId id, LiteralVec head, LiteralVec pos_body, LiteralVec neg_body)
    : id_(std::move(id))
    , head_(normalize(std::move(head)))
    , pos_(normalize(std::move(pos_body)))
    , neg_(normalize(std::move(neg_body))) {}

WeakConstraint::WeakConstraint(LiteralVec pos_body, LiteralVec neg_body, std::int64_t weight, std::int64_t level)
    : pos_(normalize(std::move(pos_body)))
    , neg_(normalize(std::move(neg_body)))
    , weight_(weight)
    , level_(level) {
    if (weight_ < 1 || level_ < 1) {
        throw InvalidInput("weak constraint weight and level must be >= 1");
    }
}

bool WeakConstraint::violated_by(const Interpretation& interp) const {
    return holds_all(pos_, interp) && holds_none(neg_, interp);
}

Program::Program(std::vector<Rule> rules, std::vector<WeakConstraint> weak)
    : rules_(std::move(rules))
    , weak_(std::move(weak)) {
    std::set<RuleId> seen;
    for (const auto& r : rules_) {
        if (!seen.insert(r.id()).second) {
            throw InvalidInput("duplicate rule id '" + r.id().str() + "'");
        }
    }
}

const Rule* Program::find(const RuleId& id) const noexcept {
    auto it = std::find_if(rules_.begin(), rules_.end(), [&](const Rule& r) { return r.id() == id; });
    return it != rules_.end() ? &*it : nullptr;
}

bool Program::is_normal() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.head().size() <= 1; });
}

bool Program::has_constraints() const noexcept {
    return std::any_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_constraint(); });
}

std::set<Atom> Program::atoms() const {
    std::set<Atom> out;
    auto           add = [&](const LiteralVec& v) {
        for (const auto& l : v) {
            out.insert(l.atom);
        }
    };
    for (const auto& r : rules_) {
        add(r.head());
        add(r.pos_body());
        add(r.neg_body());
    }
    for (const auto& w : weak_) {
        add(w.pos_body());
        add(w.neg_body());
    }
    return out;
}

Interpretation Program::literal_base() const {
    Interpretation out;
    for (const auto& a : atoms()) {
        out.insert({a, true});
        out.insert({a, false});
    }
    return out;
}

RuleOrder::RuleOrder(std::set<RuleId> domain, std::set<Pair> pairs)
    : domain_(std::move(domain))
    , pairs_(std::move(pairs)) {
    for (const auto& [a, b] : pairs_) {
        if (!domain_.count(a) || !domain_.count(b)) {
            throw InvalidInput("order pair (" + a.str() + "," + b.str() + ") outside of domain");
        }
    }
}

RuleOrder RuleOrder::from_sequence(const std::vector<RuleId>& seq) {
    std::set<RuleId> dom(seq.begin(), seq.end());
    if (dom.size() != seq.size()) {
        throw InvalidInput("sequence contains duplicate rule ids");
    }
    std::set<Pair> pairs;
    for (std::size_t i = 0; i != seq.size(); ++i) {
        for (std::size_t j = i + 1; j != seq.size(); ++j) {
            pairs.emplace(seq[i], seq[j]);
        }
    }
    return RuleOrder(std::move(dom), std::move(pairs));
}

bool RuleOrder::is_total() const {
    RuleOrder c = transitive_closure(*this);
    if (!is_strict_partial_order(c)) {
        return false;
    }
    const std::size_t n = domain_.size();
    return c.pairs().size() == n * (n - (n ? 1 : 0)) / 2;
}

std::vector<RuleId> RuleOrder::sequence() const {
    if (!is_total()) {
        throw InvalidInput("order is not total");
    }
    RuleOrder                 c = transitive_closure(*this);
    std::map<RuleId, std::size_t> preds;
    for (const auto& id : domain_) {
        preds[id] = 0;
    }
    for (const auto& p : c.pairs()) {
        ++preds[p.second];
    }
    std::vector<RuleId> seq(domain_.size());
    for (const auto& [id, k] : preds) {
        seq[k] = id;
    }
    return seq;
}

std::string_view to_string(RuleLabel l) noexcept {
    switch (l) {
        case RuleLabel::Generating: return "g";
        case RuleLabel::Zombie    : return "z";
        default                   : return "i";
    }
}

PrioritizedProgram::PrioritizedProgram(Program program, const std::vector<RuleOrder::Pair>& prefers)
    : program_(std::move(program)) {
    for (const auto& r : program_.rules()) {
        if (r.head().size() != 1) {
            throw InvalidInput("rule '" + r.id().str() + "': prioritized programs need exactly one head literal");
        }
    }
    if (!program_.weak_constraints().empty()) {
        throw InvalidInput("prioritized programs cannot contain weak constraints");
    }
    std::set<RuleId> ids = rule_ids();
    for (const auto& [a, b] : prefers) {
        if (!ids.count(a) || !ids.count(b)) {
            throw InvalidInput("preference (" + a.str() + " < " + b.str() + ") refers to an unknown rule");
        }
    }
    prefers_ = RuleOrder(ids, std::set<RuleOrder::Pair>(prefers.begin(), prefers.end()));
    order_   = transitive_closure(prefers_);
    if (!is_strict_partial_order(order_)) {
        throw InvalidInput("preferences are cyclic");
    }
}

std::set<RuleId> PrioritizedProgram::rule_ids() const {
    std::set<RuleId> ids;
    for (const auto& r : program_.rules()) {
        ids.insert(r.id());
    }
    return ids;
}

namespace {
void write_body(std::ostream& os, const LiteralVec& pos, const LiteralVec& neg) {
    const char* sep = "";
    for (const auto& l : pos) {
        os << std::exchange(sep, ", ") << l.str();
    }
    for (const auto& l : neg) {
        os << std::exchange(sep, ", ") << "not " << l.str();
    }
}
} // namespace

std::string to_string(const Rule& r, bool with_label) {
    std::ostringstream os;
    if (with_label && is_identifier(r.id().str())) {
        os << r.id().str() << ": ";
    }
    const char* sep = "";
    for (const auto& h : r.head()) {
        os << std::exchange(sep, " v ") << h.str();
    }
    if (!r.pos_body().empty() || !r.neg_body().empty() || r.head().empty()) {
        os << (r.head().empty() ? ":- " : " :- ");
        write_body(os, r.pos_body(), r.neg_body());
    }
    os << '.';
    return os.str();
}

std::string to_string(const WeakConstraint& w) {
    std::ostringstream os;
    os << ":~ ";
    write_body(os, w.pos_body(), w.neg_body());
    os << ". [" << w.weight() << ':' << w.level() << ']';
    return os.str();
}

std::string to_string(const Program& p, bool with_labels) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += to_string(r, with_labels) + '\n';
    }
    for (const auto& w : p.weak_constraints()) {
        out += to_string(w) + '\n';
    }
    return out;
}

std::string to_string(const PrioritizedProgram& p) {
    std::string out = to_string(p.program(), true);
    for (const auto& [a, b] : p.prefers().pairs()) {
        out += a.str() + " < " + b.str() + ".\n";
    }
    return out;
}

std::string to_string(const RuleOrder& o) {
    if (o.is_total()) {
        std::string out;
        const char* sep = "";
        for (const auto& id : o.sequence()) {
            out += std::exchange(sep, " < ");
            out += id.str();
        }
        return out;
    }
    std::string out = "{";
    const char* sep = "";
    for (const auto& [a, b] : o.pairs()) {
        out += std::exchange(sep, ", ");
        out += "(" + a.str() + "," + b.str() + ")";
    }
    return out + "}";
}

} // namespace prefasp
