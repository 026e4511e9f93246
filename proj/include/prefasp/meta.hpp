#pragma once
// Meta-interpretation: a prioritized program is written as facts, joined with one of the
// embedded meta-programs, grounded and solved, and the answer sets are projected back onto
// object-level literals.

#include <prefasp/grounder.hpp>
#include <prefasp/model.hpp>
#include <prefasp/parser.hpp>
#include <prefasp/preferences.hpp>
#include <prefasp/solver.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefasp {

enum class MetaSemantics { Plain, B, Bgraph, W, D, Weak };

[[nodiscard]] std::string_view to_string(MetaSemantics s) noexcept;
/// Accepts plain, b, bgraph, w, d, weak.
[[nodiscard]] std::optional<MetaSemantics> parse_semantics(std::string_view name) noexcept;
[[nodiscard]] const std::vector<MetaSemantics>& all_semantics() noexcept;
/// in_AS or in_PAS.
[[nodiscard]] std::string_view projection_predicate(MetaSemantics s) noexcept;

/// Meta-level constant of an object literal. Positive atoms keep their name unless it starts
/// with `neg_` or `pos__`, which get the prefix `pos__`; ¬a becomes `neg__a`.
[[nodiscard]] std::string mangle(const ClassicalLiteral& l);
/// Inverse of mangle. Throws InvalidInput for constants mangle never produces.
[[nodiscard]] ClassicalLiteral demangle(std::string_view constant);

/// F(P): rule/head/pbl/nbl facts per rule, compl facts for complementary pairs occurring in
/// p, and pr facts for the transitive reduction of the preferences.
[[nodiscard]] NonGroundProgram emit_facts(const PrioritizedProgram& p);

/// Asset names: pia, pib, pig, piw, pid, piweak.
[[nodiscard]] const std::vector<std::string>& asset_names();
/// Embedded text of an asset. Throws InvalidInput for unknown names.
[[nodiscard]] std::string_view asset_text(std::string_view name);
/// Assets that make up the meta-program of a semantics, in order.
[[nodiscard]] std::vector<std::string> assets_of(MetaSemantics s);

struct MetaOptions {
    /// Drop `:- in_AS(X), not in_CP(X).` from the B meta-program.
    bool drop_redundant_constraint = false;
    /// Replacement texts keyed by asset name.
    std::map<std::string, std::string> asset_override;
    GroundOptions ground;
    SolveOptions  solve;
    /// Keep the unprojected meta answer sets.
    bool keep_raw = false;
};

/// The meta-program of a semantics. Rule ids carry the asset name as prefix (pia_r001, ...).
[[nodiscard]] NonGroundProgram meta_program(MetaSemantics s, const MetaOptions& opts = {});

struct MetaResult {
    std::vector<Interpretation> sets;       ///< projected, demangled, sorted, duplicate-free
    std::size_t                 raw_count = 0;
    std::vector<Interpretation> raw;        ///< only with keep_raw
    std::optional<std::int64_t> optimum;    ///< Weak only
    GroundingStats              grounding;
    SolverStats                 solver;
};

[[nodiscard]] MetaResult meta_solve(const PrioritizedProgram& p, MetaSemantics s, const MetaOptions& opts = {});

/// Result of the native procedure for a semantics (Plain: answer sets, Bgraph: as B).
[[nodiscard]] std::vector<Interpretation> native_solve(const PrioritizedProgram& p, MetaSemantics s,
                                                       const SolveOptions& opts = {},
                                                       std::size_t pvd_limit = kDefaultPvdLimit);

struct CrossValidationReport {
    std::string                 program_id;
    MetaSemantics               semantics = MetaSemantics::Plain;
    std::vector<Interpretation> native;
    std::vector<Interpretation> meta;
    bool                        agree = false;
    std::vector<Interpretation> only_native;
    std::vector<Interpretation> only_meta;
    /// W/D: meta results that are not answer sets of the program (consistent fixpoints).
    std::vector<Interpretation> non_answer_sets;
    double                      native_ms = 0;
    double                      meta_ms   = 0;
};

[[nodiscard]] CrossValidationReport cross_validate(const PrioritizedProgram& p, MetaSemantics s,
                                                   const MetaOptions& opts = {}, std::string program_id = {},
                                                   std::size_t pvd_limit = kDefaultPvdLimit);

} // namespace prefasp
