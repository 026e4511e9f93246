#pragma once
// B-, W-, D- and weakly preferred answer sets of prioritized programs.

#include <prefasp/model.hpp>
#include <prefasp/order.hpp>
#include <prefasp/solver.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace prefasp {

/// Default rule bound for pvd, which enumerates all total orders of the program.
inline constexpr std::size_t kDefaultPvdLimit = 8;

/// Prerequisite-free rules in priority order (highest first). origins[i] is the first rule of
/// the source program, w.r.t. the total order, that reduces to rules[i].
struct DualReduct {
    std::vector<Rule>   rules;
    std::vector<RuleId> origins;

    /// Total order of the reduct, inherited from the origins.
    [[nodiscard]] RuleOrder order() const { return RuleOrder::from_sequence(origins); }
};

using Derivation = std::pair<ClassicalLiteral, RuleId>;

struct FixpointTrace {
    std::vector<Interpretation>            stages;      ///< S_0 .. S_n
    std::vector<std::set<Derivation>>      derivations; ///< per stage, D only: (literal, rule used)
    bool                                   consistent = true;
    Interpretation                         value;       ///< S_n, or B_P if S_n is inconsistent
};

struct FullOrderResult {
    bool                             accepted = false;
    std::map<RuleId, RuleLabel>      labels;
    std::vector<std::vector<RuleId>> rounds;  ///< rules removed per round, sorted
    std::vector<Interpretation>      s_after; ///< S after each round
    std::optional<RuleOrder>         witness; ///< rounds concatenated, if accepted
};

struct PvdResult {
    Interpretation set;
    std::int64_t   value = 0;
    RuleOrder      from_order; ///< <1, a full prioritization of the program
    RuleOrder      to_order;   ///< <2, a total order making `set` B-preferred
};

/// Dual reduct of p under X for the total order `sequence` (highest priority first).
[[nodiscard]] DualReduct dual_reduct(const Program& p, const std::vector<RuleId>& sequence, const Interpretation& X);
/// Requires p to be fully prioritized (PreconditionError otherwise).
[[nodiscard]] DualReduct dual_reduct(const PrioritizedProgram& p, const Interpretation& X);

/// C_B for prerequisite-free rules given in priority order. `base` is the sentinel value.
[[nodiscard]] FixpointTrace cb_value(const std::vector<Rule>& ordered, const Interpretation& S,
                                     const Interpretation& base);
[[nodiscard]] FixpointTrace cb_value(const DualReduct& reduct, const Interpretation& S, const Interpretation& base);

/// Label of every rule w.r.t. A: generating, zombie or irrelevant (dead or not applicable).
[[nodiscard]] std::map<RuleId, RuleLabel> rule_labels(const Program& p, const Interpretation& A);

/// Deterministic FULL-ORDER: removes all eligible sources per round.
[[nodiscard]] FullOrderResult full_order(const PrioritizedProgram& p, const Interpretation& A);

[[nodiscard]] FixpointTrace cw_value(const PrioritizedProgram& p, const Interpretation& S);
[[nodiscard]] FixpointTrace cd_value(const PrioritizedProgram& p, const Interpretation& S);

/// The predicates below require A to be an answer set of p (PreconditionError otherwise).
[[nodiscard]] bool is_b_preferred(const PrioritizedProgram& p, const Interpretation& A);
[[nodiscard]] bool is_w_preferred(const PrioritizedProgram& p, const Interpretation& A);
[[nodiscard]] bool is_d_preferred(const PrioritizedProgram& p, const Interpretation& A);

/// B-preferredness of A for the fully prioritized program (p, sequence).
[[nodiscard]] bool is_b_preferred_total(const Program& p, const std::vector<RuleId>& sequence, const Interpretation& A);

/// Preference violation degree of A with a witness pair of orders. Throws LimitExceeded if
/// p has more than `limit` rules.
[[nodiscard]] PvdResult pvd(const PrioritizedProgram& p, const Interpretation& A, std::size_t limit = kDefaultPvdLimit);
/// Minimum distance from `target` to a linear extension of `order`, with the closest
/// extension (ties broken towards smaller rule ids first).
[[nodiscard]] std::pair<std::int64_t, std::vector<RuleId>> distance_to_extensions(const RuleOrder&           order,
                                                                                 const std::vector<RuleId>& target);

/// Answer sets attaining the minimal pvd, sorted.
[[nodiscard]] std::vector<PvdResult> weakly_preferred(const PrioritizedProgram& p, std::size_t limit = kDefaultPvdLimit,
                                                      const SolveOptions& opts = {});

enum class Semantics { B, W, D };
/// Answer sets of p that are preferred under the given semantics, sorted.
[[nodiscard]] std::vector<Interpretation> preferred_answer_sets(const PrioritizedProgram& p, Semantics s,
                                                                const SolveOptions& opts = {});

} // namespace prefasp
