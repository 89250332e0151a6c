#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intercol/coloring.hpp"

namespace intercol {

// Candidate shift vector for K_{2n}: length n-1, nonnegative entries.
struct CandidateVector {
    int n = 1;
    std::vector<int> b;

    int total() const;
    bool operator==(const CandidateVector&) const = default;
    bool operator<(const CandidateVector& o) const { return b < o.b; }
};

// Necessary conditions on realizable shift vectors. Each one is applied to
// the vector and to its reversal.
//
//   prefix_sum       sum(b_1..b_k) <= 2k-1 for every k
//   after_saturated  a saturated prefix at k in [2, n-2] forces b_{k+1} <= 1
//   before_saturated a saturated prefix at k in [3, n-1] forces b_k >= 3
//   edge_count       k(2k-1) >= sum_{i<=k} i b_i
//                             + sum_{i=k+1}^{min(2k-1,n-1)} (2k-i) b_i
//                    for k in [2, n-2]
//
// A prefix is saturated at k when sum(b_1..b_k) = 2k-1.
enum class FilterKind { prefix_sum, after_saturated, before_saturated, edge_count };

const char* filter_name(FilterKind k);

struct FilterSet {
    bool prefix_sum = true;  // always on; the calculus is meaningless without it
    bool after_saturated = true;
    bool before_saturated = true;
    bool edge_count = true;

    static FilterSet all() { return {}; }
    static FilterSet prefix_only() { return {true, false, false, false}; }
    std::vector<std::string> names() const;
};

struct FeasibilityVerdict {
    bool passed = true;
    FilterKind rejecting_filter = FilterKind::prefix_sum;
    bool reversed = false;  // rejection happened on the reversed vector
    int position = 0;       // the k at which the filter fired

    std::string to_string() const;
};

// Runs the filters (in declaration order) on v, then on its reversal;
// reports the first rejection. Throws invalid_argument on negative
// entries or a length other than n-1.
FeasibilityVerdict filter_feasible(const CandidateVector& v, FilterSet filters = {});

// All filter-feasible vectors of the given total, in lexicographic order.
// The search prunes with prefix/suffix sum bounds only, which are implied
// by the prefix_sum filter, so no feasible vector is ever skipped.
struct EnumerationResult {
    std::vector<CandidateVector> vectors;
    std::int64_t nodes_explored = 0;   // DFS nodes including internal ones
    std::int64_t vectors_checked = 0;  // complete vectors run through the filters
};

EnumerationResult enumerate_feasible(int n, int total, FilterSet filters = {},
                                     int threads = 1);

// Emptiness certificate at one total. The filter-feasible set is closed
// under decreasing an entry, so emptiness at a total extends to all larger
// totals: empty here means W(K_{2n}) <= (2n-1) + total - 1.
struct BoundCertificate {
    int n = 1;
    int total = 0;
    std::vector<std::string> filters;
    std::int64_t nodes_explored = 0;
    std::int64_t vectors_checked = 0;
    std::int64_t feasible_count = 0;
    bool empty = false;
    int claimed_bound = 0;  // meaningful only when empty
};

BoundCertificate certify_upper(int n, int total, FilterSet filters = {}, int threads = 1);

// Largest t not excluded by the filter calculus: walks totals downward
// from the prefix-filter ceiling (2n-4 for n >= 3) until a feasible vector
// exists, and returns 2n-1 plus that total.
int certified_upper_bound(int n, int threads = 1);

// Minimum of sum(i * b_i) over filter-feasible length-k prefixes with
// sum(b_i) = r, using only the checks valid for every extension: all
// prefix sums, saturation windows inside the prefix, and the edge-count
// inequality truncated at k. Infeasible for r >= 2k.
struct MFilterResult {
    bool feasible = false;
    int value = 0;
    std::vector<int> attaining;  // lexicographically smallest minimizer
};

MFilterResult m_filter(int k, int r);

// Closed-form upper bound on W(K_{2n}):
// 1, 4, 4n-5 (n in [3,4]), 4n-6 (n in [5,8]), 4n-7 (n >= 9).
int upper_bound(int n);

// Best published lower bound on W(K_{2n}), evaluated from the prime
// factorization of n. Reproduces the published reference table, including
// its n = 14 entry (46); the factorization formula alone would give 48
// there.
int lower_bound(int n);

// Older bounds and conjectured values for comparison.
struct ReferenceFormulas {
    int n = 1;
    int kamalian = 0;         // lower: 2n-1 + floor(log2(2n-1))
    int giaro = 0;            // upper: 2|V| - 4 = 4n - 4 (n >= 2)
    int petrosyan_3n2 = 0;    // lower: 3n - 2
    int petrosyan_pq = 0;     // lower: 4n - 2 - p - q where n = p 2^q, p odd
    int conjecture_pq = 0;    // conjectured exact value, same formula
    int conjecture_log = 0;   // conjectured: 4n - 2 - floor(log2 n) - popcount(n)
};

ReferenceFormulas reference_formulas(int n);

// Lower bound for a product order from two witness values:
// wm + wn + 4(m-1)(n-1) - 1.
int composite_lower(int m, int wm, int n, int wn);

}  // namespace intercol
