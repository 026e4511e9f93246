#pragma once
// Seeded generators for differential and property tests. Output depends only on the seed
// (and on the standard library's distribution implementation).

#include <prefasp/model.hpp>

#include <cstddef>
#include <cstdint>
#include <random>

namespace prefasp {

using Rng = std::mt19937_64;

struct RandomPrioritizedOptions {
    std::size_t max_rules      = 5;
    std::size_t max_atoms      = 4;
    std::size_t max_pos        = 2;
    std::size_t max_neg        = 2;
    double      strong_neg     = 0.3; ///< probability that a literal is classically negated
    double      pref_density   = 0.35; ///< probability of a preference between two rules
    bool        prereq_free    = false;
    bool        fully_ordered  = false;
};

/// Normal, constraint-free program over atoms a, b, c, ... with rule ids r001, r002, ...
/// and a random strict partial order (or total order if fully_ordered).
[[nodiscard]] PrioritizedProgram random_prioritized(Rng& rng, const RandomPrioritizedOptions& opts = {});

struct RandomGroundOptions {
    std::size_t max_atoms    = 10;
    std::size_t max_rules    = 12;
    std::size_t max_head     = 2;
    std::size_t max_pos      = 2;
    std::size_t max_neg      = 2;
    double      constraint   = 0.15;
    double      strong_neg   = 0.2;
};

/// Ground program over atoms p0, p1, ... with disjunctive heads and integrity constraints.
[[nodiscard]] Program random_ground(Rng& rng, const RandomGroundOptions& opts = {});

/// Random total order over ids r001..r<n>.
[[nodiscard]] RuleOrder random_total_order(Rng& rng, std::size_t n);

/// Zero-padded id used for generated rules: r001, ...
[[nodiscard]] RuleId generated_id(std::size_t index);

} // namespace prefasp
