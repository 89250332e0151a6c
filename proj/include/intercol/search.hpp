#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>

#include "intercol/equivalence.hpp"

namespace intercol {

// Limits for the exact searches. Zero means unlimited. The seed drives
// the randomized restart order in realize_shift; sigma_search is
// deterministic and ignores it. When stop_flag is set, the search also
// halts (reported as a budget stop) once the flag becomes true - this is
// how the CLI turns an interrupt into a best-so-far result.
struct SearchBudget {
    std::int64_t node_limit = 0;
    double time_limit_seconds = 0.0;
    std::uint64_t seed = 0;
    const std::atomic<bool>* stop_flag = nullptr;
};

// Result of maximizing the labeled-matching count over all
// one-factorizations of K_{2n} under the identity pair ordering (which is
// fully general: relabeling vertices realizes every other ordering).
//
// sigma is the best value found; witness carries a factorization and an
// optimal label assignment achieving it. exhaustive is true when the
// value is proven optimal - either the enumeration completed, or the
// value reached the filter-calculus ceiling certified_upper_bound(n) -
// (2n-1). With a budget in force exhaustive may come back false, in
// which case sigma is only a lower bound.
struct SigmaResult {
    int n = 1;
    int sigma = 0;
    std::optional<LabeledFactorization> witness;
    bool exhaustive = false;
    std::int64_t nodes = 0;
};

// Optional progress hook: called with (nodes explored, best sigma so
// far) whenever the best value improves and periodically in between.
using SigmaProgress = std::function<void(std::int64_t nodes, int best)>;

// Enumerates one-factorizations canonically (matching #i is the one
// containing edge {0, i+1}) and scores each by a small max-flow that
// respects the label prefix caps sum(b_1..b_k) <= 2k-1. enable_pruning
// turns on the branch-and-bound cutoffs; with it off the enumeration is
// plain and exists so tests can cross-check the pruned search.
SigmaResult sigma_search(int n, SearchBudget budget = {}, bool enable_pruning = true,
                         const SigmaProgress& progress = {});

// Searches for an interval coloring of K_{2n} whose shift vector equals
// target exactly. The target must pass filter_feasible; a rejected
// vector is refused with invalid_argument. Runs restarts with
// geometrically growing node budgets, shuffling branch order per restart
// from budget.seed.
//
// A missing coloring is reported as not-found, never as nonexistence:
// completed=true only records that the canonical search space was fully
// covered before any budget ran out.
struct RealizeResult {
    std::optional<EdgeColoring> coloring;
    bool completed = false;
    std::int64_t nodes = 0;
    int restarts = 0;
};

RealizeResult realize_shift(int n, const ShiftVector& target, SearchBudget budget = {});

}  // namespace intercol
