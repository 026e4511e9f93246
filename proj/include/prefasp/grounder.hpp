#pragma once
// Bottom-up instantiation of safe meta-language programs.
//
// Constants are ordered by byte-wise comparison of their names; the builtins <, > and !=
// are evaluated under that order.

#include <prefasp/model.hpp>
#include <prefasp/parser.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace prefasp {

struct GroundingStats {
    std::size_t ground_rules       = 0; ///< rules and weak constraints in the output
    std::size_t dropped_by_builtin = 0; ///< instances removed because a comparison failed
    std::size_t duplicates_removed = 0;
};

struct GroundOptions {
    /// Only instantiate positive bodies over atoms that can possibly be derived. When false,
    /// every variable ranges over the whole universe.
    bool relevance = true;
};

struct GroundResult {
    Program        program;
    GroundingStats stats;
};

/// Constants of `p` in ConstantOrder; {"u0"} if `p` contains none.
[[nodiscard]] std::vector<std::string> herbrand_universe(const NonGroundProgram& p);

/// True iff a < b in the constant order.
[[nodiscard]] inline bool constant_less(const std::string& a, const std::string& b) noexcept { return a < b; }

/// Instantiates `p`. Ground rule ids are `id[X=c,...,_1=c,...]` with named variables sorted
/// by name followed by anonymous ones in order of occurrence, or the source id if the rule has
/// no variables. Throws ParseError for unsafe rules.
[[nodiscard]] GroundResult ground_with_stats(const NonGroundProgram& p, const GroundOptions& opts = {});
[[nodiscard]] Program      ground(const NonGroundProgram& p, const GroundOptions& opts = {});

/// Lifts a ground program back into the meta language (for re-grounding and printing).
[[nodiscard]] NonGroundProgram to_meta(const Program& p);

/// True iff the predicate dependency graph of `p` has no cycle through a negative edge.
/// Disjunctive heads count as mutually dependent through negation.
[[nodiscard]] bool is_stratified(const Program& p);

} // namespace prefasp
