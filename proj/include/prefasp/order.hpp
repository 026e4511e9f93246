#pragma once
// Operations on rule orders: closure, reduction, linear extensions and the
// discordant-pair distance between total orders.

#include <prefasp/model.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prefasp {

/// Default bound on the number of rules for which all full prioritizations are enumerated.
inline constexpr std::size_t kDefaultEnumerationLimit = 9;

[[nodiscard]] RuleOrder transitive_closure(const RuleOrder& o);
/// Closure is irreflexive.
[[nodiscard]] bool is_strict_partial_order(const RuleOrder& o);
/// Minimal pair set with the same closure. Throws InvalidInput on cyclic input.
[[nodiscard]] RuleOrder transitive_reduction(const RuleOrder& o);

/// All total orders of o.domain() that contain the closure of o, in lexicographic order of
/// their sequences. Throws LimitExceeded if the domain has more than `max_elements` elements
/// and InvalidInput if o is cyclic.
[[nodiscard]] std::vector<RuleOrder> linear_extensions(const RuleOrder& o,
                                                       std::size_t max_elements = kDefaultEnumerationLimit);
[[nodiscard]] std::vector<RuleOrder> full_prioritizations(const PrioritizedProgram& p,
                                                          std::size_t max_rules = kDefaultEnumerationLimit);

/// Number of pairs ordered one way by o1 and the other way by o2. Both must be total over the
/// same domain (InvalidInput otherwise).
[[nodiscard]] std::int64_t order_distance(const RuleOrder& o1, const RuleOrder& o2);
[[nodiscard]] std::int64_t sequence_distance(const std::vector<RuleId>& s1, const std::vector<RuleId>& s2);

} // namespace prefasp
