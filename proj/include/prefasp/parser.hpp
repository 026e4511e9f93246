#pragma once
// Surface syntax for prioritized programs and for the non-ground meta language.
//
//   statement  ::= [label ":"] rule | ":~" body "." [weight] | label "<" label "."
//   rule       ::= head "." | head ":-" body "." | ":-" body "."
//   head       ::= literal { "v" literal }
//   body       ::= element { "," element }
//   element    ::= literal | "not" literal | term op term        op ::= "<" | ">" | "!="
//   literal    ::= ["-"] pred [ "(" term { "," term } ")" ]
//   weight     ::= "[" number [":" number] "]"
//
// Comments run from '%' to the end of the line. See docs/grammar.md for the full grammar and
// for which constructs each dialect accepts.

#include <prefasp/errors.hpp>
#include <prefasp/model.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefasp {

struct Term {
    enum class Kind { Constant, Variable, Anonymous };
    Kind        kind = Kind::Constant;
    std::string name;

    [[nodiscard]] bool is_variable() const noexcept { return kind != Kind::Constant; }
    friend bool        operator==(const Term&, const Term&) = default;
};

/// Possibly non-ground atom, optionally classically negated.
struct MetaAtom {
    std::string       predicate;
    std::vector<Term> args;
    bool              positive = true;

    friend bool operator==(const MetaAtom&, const MetaAtom&) = default;
};

enum class CompareOp { Less, Greater, NotEqual };

struct Builtin {
    CompareOp op = CompareOp::Less;
    Term      lhs;
    Term      rhs;

    friend bool operator==(const Builtin&, const Builtin&) = default;
};

struct WeakSpec {
    std::int64_t weight = 1;
    std::int64_t level  = 1;

    friend bool operator==(const WeakSpec&, const WeakSpec&) = default;
};

struct MetaRule {
    std::string             id;    ///< label if given, otherwise assigned from the position
    std::string             label; ///< user-written label, empty if none
    std::vector<MetaAtom>   head;
    std::vector<MetaAtom>   pos_body;
    std::vector<MetaAtom>   neg_body;
    std::vector<Builtin>    builtins;
    std::optional<WeakSpec> weak;
    SourceSpan              span;

    [[nodiscard]] bool is_weak() const noexcept { return weak.has_value(); }
    [[nodiscard]] bool is_constraint() const noexcept { return head.empty() && !weak; }

    // Spans are ignored.
    friend bool operator==(const MetaRule& a, const MetaRule& b) {
        return a.id == b.id && a.label == b.label && a.head == b.head && a.pos_body == b.pos_body &&
               a.neg_body == b.neg_body && a.builtins == b.builtins && a.weak == b.weak;
    }
};

struct NonGroundProgram {
    std::vector<MetaRule> rules;

    friend bool operator==(const NonGroundProgram&, const NonGroundProgram&) = default;
};

/// Propositional program as read from text; preferences are kept but not validated as an order.
struct ParsedProgram {
    Program                      program;
    std::vector<RuleOrder::Pair> prefers;
    std::vector<SourceSpan>      prefer_spans;
};

/// Parses the meta language (variables, disjunction, builtins, weak constraints) and checks
/// rule safety.
[[nodiscard]] NonGroundProgram parse_meta(std::string_view text);

/// Parses a propositional program: disjunction, integrity and weak constraints are allowed,
/// variables and builtins are not. Rules without label get ids r001, r002, ... by position.
[[nodiscard]] ParsedProgram parse_program(std::string_view text);

/// Parses a prioritized program. Rules must be normal; an integrity constraint `:- C.` is
/// rewritten to `bad_k :- C, not bad_k.` with a fresh atom bad_k.
[[nodiscard]] PrioritizedProgram parse_prioritized(std::string_view text);

/// Throws ParseError if a named variable of `r` does not occur in a positive non-builtin body
/// atom, or if an anonymous variable occurs outside of one.
void check_safety(const MetaRule& r);

[[nodiscard]] std::string to_string(const Term& t);
[[nodiscard]] std::string to_string(const MetaAtom& a);
[[nodiscard]] std::string to_string(const MetaRule& r);
[[nodiscard]] std::string to_string(const NonGroundProgram& p);

/// Converts a variable-free meta program into a Program. Throws InvalidInput on variables.
[[nodiscard]] Program to_ground_program(const NonGroundProgram& p);

} // namespace prefasp
