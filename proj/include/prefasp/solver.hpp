#pragma once
// Answer sets of ground (disjunctive) programs with classical negation, integrity and weak
// constraints.
//
// The search assigns literals three-valued and propagates rule satisfaction, support and
// complement consistency. Each total assignment is then checked for minimality against its
// Gelfond-Lifschitz reduct.

#include <prefasp/model.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace prefasp {

/// A program without negation as failure, obtained as P^I.
using GroundReduct = Program;

struct ObjectiveValue {
    std::map<std::int64_t, std::int64_t> level_weights; ///< level -> sum of violated weights
    std::int64_t                         H = 0;

    friend bool operator==(const ObjectiveValue&, const ObjectiveValue&) = default;
};

struct OptimalAnswerSet {
    Interpretation set;
    ObjectiveValue value;
};

struct SolveOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Prune branches whose violated weak constraints already cost more than the best model.
    bool branch_and_bound = true;
};

struct SolverStats {
    std::uint64_t decisions        = 0;
    std::uint64_t conflicts        = 0;
    std::uint64_t models           = 0; ///< answer sets reported
    std::uint64_t minimality_fails = 0; ///< total candidates rejected as non-minimal
};

[[nodiscard]] GroundReduct gl_reduct(const Program& p, const Interpretation& I);
/// Every rule whose body is contained in I has a head literal in I. Negative bodies are ignored.
[[nodiscard]] bool is_closed(const Interpretation& I, const GroundReduct& p);
/// I is consistent and a minimal closed set of P^I. Weak constraints are ignored.
[[nodiscard]] bool is_answer_set(const Program& p, const Interpretation& I);

/// f_P(level) for the weak constraints of p. Throws LimitExceeded on overflow.
[[nodiscard]] std::int64_t level_factor(const Program& p, std::int64_t level);
[[nodiscard]] ObjectiveValue objective(const Program& p, const Interpretation& A);

class Solver {
public:
    /// Return false to stop the enumeration.
    using Visitor = std::function<bool(const Interpretation&)>;

    explicit Solver(const Program& p);
    ~Solver();
    Solver(const Solver&)            = delete;
    Solver& operator=(const Solver&) = delete;

    /// Calls `visit` for every consistent answer set of the program without its weak
    /// constraints, in search order. Throws Timeout when the deadline passes.
    void enumerate(const Visitor& visit, const SolveOptions& opts = {});
    /// Calls `visit` for answer sets whose objective does not exceed the best one seen so
    /// far; the last calls are the optimal ones. Returns the optimum (nullopt if none).
    std::optional<std::int64_t> enumerate_optimal(const std::function<void(const Interpretation&, std::int64_t)>& visit,
                                                  const SolveOptions& opts = {});

    [[nodiscard]] const SolverStats& stats() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// All consistent answer sets of p (weak constraints ignored), sorted.
[[nodiscard]] std::vector<Interpretation> answer_sets(const Program& p, const SolveOptions& opts = {});
/// Answer sets of p without weak constraints that minimize H, sorted.
[[nodiscard]] std::vector<OptimalAnswerSet> optimal_answer_sets(const Program& p, const SolveOptions& opts = {});

/// Deadline `seconds` from now; nullopt for seconds <= 0.
[[nodiscard]] std::optional<std::chrono::steady_clock::time_point> deadline_after(double seconds);

} // namespace prefasp
