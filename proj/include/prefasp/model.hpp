#pragma once
// Domain types for propositional (and ground) logic programs with preferences.
//
// Every set-like member is kept as a sorted, duplicate-free sequence whose order is the
// lexicographic order of the canonical text rendering. All types are immutable values once
// constructed.

#include <prefasp/errors.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prefasp {

/// True if `s` matches [a-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view s) noexcept;
/// True if `s` is an identifier or a non-negative decimal integer.
bool is_constant(std::string_view s) noexcept;

/// Ground atom: a predicate applied to zero or more constants. Propositional atoms have no
/// arguments; argument-carrying atoms only arise from grounding meta-programs.
class Atom {
public:
    explicit Atom(std::string predicate, std::vector<std::string> args = {});

    [[nodiscard]] const std::string&              predicate() const noexcept { return predicate_; }
    [[nodiscard]] const std::vector<std::string>& args() const noexcept { return args_; }
    [[nodiscard]] bool                            propositional() const noexcept { return args_.empty(); }
    /// Canonical rendering, e.g. `peng` or `pr(r1,r2)`.
    [[nodiscard]] const std::string& str() const noexcept { return text_; }

    friend bool operator==(const Atom& a, const Atom& b) noexcept { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
        return a.text_.compare(b.text_) <=> 0;
    }

private:
    std::string              predicate_;
    std::vector<std::string> args_;
    std::string              text_;
};

/// Signed atom. The canonical rendering of a negative literal is `-a`.
struct ClassicalLiteral {
    Atom atom;
    bool positive = true;

    ClassicalLiteral(Atom a, bool pos = true) : atom(std::move(a)), positive(pos) {}

    [[nodiscard]] std::string str() const { return positive ? atom.str() : "-" + atom.str(); }

    friend bool operator==(const ClassicalLiteral&, const ClassicalLiteral&) noexcept = default;
    // '-' sorts before every character an atom may start with, so comparing
    // (sign, atom) is the same as comparing the renderings.
    friend std::strong_ordering operator<=>(const ClassicalLiteral& a, const ClassicalLiteral& b) noexcept {
        if (a.positive != b.positive) {
            return a.positive ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.atom <=> b.atom;
    }
};

/// Shorthand for building propositional literals: `lit("flies")`, `lit("-flies")`.
ClassicalLiteral lit(std::string_view text);

[[nodiscard]] ClassicalLiteral complement(const ClassicalLiteral& l);

using LiteralVec     = std::vector<ClassicalLiteral>;
using Interpretation = std::set<ClassicalLiteral>;

[[nodiscard]] bool        is_consistent(const Interpretation& interp);
[[nodiscard]] std::string to_string(const Interpretation& interp);

/// Opaque rule identifier.
class RuleId {
public:
    RuleId() = default;
    explicit RuleId(std::string value) : value_(std::move(value)) {}

    [[nodiscard]] const std::string& str() const noexcept { return value_; }

    friend bool operator==(const RuleId&, const RuleId&) noexcept = default;
    friend std::strong_ordering operator<=>(const RuleId& a, const RuleId& b) noexcept {
        return a.value_.compare(b.value_) <=> 0;
    }

private:
    std::string value_;
};

inline std::ostream& operator<<(std::ostream& os, const RuleId& id) { return os << id.str(); }
inline std::ostream& operator<<(std::ostream& os, const ClassicalLiteral& l) { return os << l.str(); }

/// Rule `h1 v ... v hk :- b1, ..., bm, not c1, ..., not cn.`; an empty head makes it an
/// integrity constraint.
class Rule {
public:
    Rule(RuleId id, LiteralVec head, LiteralVec pos_body = {}, LiteralVec neg_body = {});

    [[nodiscard]] const RuleId&     id() const noexcept { return id_; }
    [[nodiscard]] const LiteralVec& head() const noexcept { return head_; }
    [[nodiscard]] const LiteralVec& pos_body() const noexcept { return pos_; }
    [[nodiscard]] const LiteralVec& neg_body() const noexcept { return neg_; }
    [[nodiscard]] bool              is_constraint() const noexcept { return head_.empty(); }
    [[nodiscard]] bool              is_fact() const noexcept { return head_.size() == 1 && pos_.empty() && neg_.empty(); }

    /// Same head and bodies, ignoring the id.
    [[nodiscard]] bool same_content(const Rule& other) const noexcept {
        return head_ == other.head_ && pos_ == other.pos_ && neg_ == other.neg_;
    }
    friend bool operator==(const Rule&, const Rule&) = default;

private:
    RuleId     id_;
    LiteralVec head_;
    LiteralVec pos_;
    LiteralVec neg_;
};

/// `:~ b1, ..., bm, not c1, ..., not cn. [weight:level]`
class WeakConstraint {
public:
    WeakConstraint(LiteralVec pos_body, LiteralVec neg_body, std::int64_t weight = 1, std::int64_t level = 1);

    [[nodiscard]] const LiteralVec& pos_body() const noexcept { return pos_; }
    [[nodiscard]] const LiteralVec& neg_body() const noexcept { return neg_; }
    [[nodiscard]] std::int64_t      weight() const noexcept { return weight_; }
    [[nodiscard]] std::int64_t      level() const noexcept { return level_; }

    /// Violated by `interp` iff the positive body holds and no negative body literal does.
    [[nodiscard]] bool violated_by(const Interpretation& interp) const;

    friend bool operator==(const WeakConstraint&, const WeakConstraint&) = default;

private:
    LiteralVec   pos_;
    LiteralVec   neg_;
    std::int64_t weight_;
    std::int64_t level_;
};

class Program {
public:
    Program() = default;
    Program(std::vector<Rule> rules, std::vector<WeakConstraint> weak = {});

    [[nodiscard]] const std::vector<Rule>&           rules() const noexcept { return rules_; }
    [[nodiscard]] const std::vector<WeakConstraint>& weak_constraints() const noexcept { return weak_; }
    [[nodiscard]] const Rule*                        find(const RuleId& id) const noexcept;

    /// Every rule has at most one head literal.
    [[nodiscard]] bool is_normal() const noexcept;
    [[nodiscard]] bool has_constraints() const noexcept;
    /// All atoms occurring in rules or weak constraints.
    [[nodiscard]] std::set<Atom> atoms() const;
    /// B_P: all literals over the atoms of the program, both signs.
    [[nodiscard]] Interpretation literal_base() const;
    /// Copy without the weak constraints.
    [[nodiscard]] Program without_weak_constraints() const { return Program(rules_); }

    friend bool operator==(const Program&, const Program&) = default;

private:
    std::vector<Rule>           rules_;
    std::vector<WeakConstraint> weak_;
};

/// Binary relation over rule ids; (a, b) reads "a has higher priority than b".
class RuleOrder {
public:
    using Pair = std::pair<RuleId, RuleId>;

    RuleOrder() = default;
    RuleOrder(std::set<RuleId> domain, std::set<Pair> pairs);
    /// Total order listing rules from highest to lowest priority.
    static RuleOrder from_sequence(const std::vector<RuleId>& seq);

    [[nodiscard]] const std::set<RuleId>& domain() const noexcept { return domain_; }
    [[nodiscard]] const std::set<Pair>&   pairs() const noexcept { return pairs_; }
    [[nodiscard]] bool contains(const RuleId& a, const RuleId& b) const { return pairs_.count({a, b}) != 0; }
    [[nodiscard]] bool empty() const noexcept { return pairs_.empty(); }

    /// Closure is irreflexive and relates every two distinct domain elements.
    [[nodiscard]] bool is_total() const;
    /// Rules from highest to lowest priority; requires is_total().
    [[nodiscard]] std::vector<RuleId> sequence() const;

    friend bool operator==(const RuleOrder&, const RuleOrder&) = default;

private:
    std::set<RuleId> domain_;
    std::set<Pair>   pairs_;
};

enum class RuleLabel { Generating, Zombie, Irrelevant };
[[nodiscard]] std::string_view to_string(RuleLabel l) noexcept;

/// Normal program without constraints plus a strict partial order on its rules.
class PrioritizedProgram {
public:
    PrioritizedProgram() = default;
    PrioritizedProgram(Program program, const std::vector<RuleOrder::Pair>& prefers);

    [[nodiscard]] const Program&   program() const noexcept { return program_; }
    [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return program_.rules(); }
    /// Preference pairs as given.
    [[nodiscard]] const RuleOrder& prefers() const noexcept { return prefers_; }
    /// Transitive closure of the preference pairs.
    [[nodiscard]] const RuleOrder& order() const noexcept { return order_; }
    [[nodiscard]] bool             fully_prioritized() const { return order_.is_total(); }
    [[nodiscard]] std::set<RuleId> rule_ids() const;

private:
    Program   program_;
    RuleOrder prefers_;
    RuleOrder order_;
};

// Surface syntax rendering.
[[nodiscard]] std::string to_string(const Rule& r, bool with_label = false);
[[nodiscard]] std::string to_string(const WeakConstraint& w);
[[nodiscard]] std::string to_string(const Program& p, bool with_labels = false);
[[nodiscard]] std::string to_string(const PrioritizedProgram& p);
[[nodiscard]] std::string to_string(const RuleOrder& o);

} // namespace prefasp
