#pragma once

#include "intercol/coloring.hpp"
#include "intercol/graph.hpp"

namespace intercol {

// 1-factorization of K_{2n} in which some matchings carry a split label.
// Label 0 means free; label i in [1, n-1] asserts the matching is
// i-splitted with respect to the ordering. The vector order is
// significant: the j-th matching carrying label i (counting occurrences
// in storage order) is F^i_j, and likewise for free matchings F^0_j.
//
// Construction validates everything it claims: matching count 2n-1,
// pairwise disjointness, exact edge cover, label range, splittedness of
// every labeled matching, and the prefix bounds sum(b_1..b_k) <= 2k-1 on
// the implied shift vector.
class LabeledFactorization {
public:
    LabeledFactorization(PairedOrdering ordering,
                         std::vector<PerfectMatching> matchings,
                         std::vector<int> labels);

    int n() const { return ordering_.n(); }
    const PairedOrdering& ordering() const { return ordering_; }

    int size() const { return static_cast<int>(matchings_.size()); }
    const PerfectMatching& matching(int idx) const { return matchings_.at(idx); }
    int label(int idx) const { return labels_.at(idx); }
    const std::vector<PerfectMatching>& matchings() const { return matchings_; }
    const std::vector<int>& labels() const { return labels_; }

    int labeled_count() const;
    // b_i = number of matchings labeled i.
    ShiftVector implied_shift() const;

    // Equivalent factorization with the identity ordering: vertex v is
    // renamed to its position. Matching order and labels are kept.
    LabeledFactorization normalized() const;

    bool operator==(const LabeledFactorization&) const = default;

private:
    PairedOrdering ordering_;
    std::vector<PerfectMatching> matchings_;
    std::vector<int> labels_;
};

// Coloring -> factorization. Color classes in the common range
// [total+1, 2n-1+total] become free matchings in color order; the classes
// B_{i-1}+j and B_{i-1}+(2n-1)+j fuse into the j-th i-labeled matching.
// A valid interval coloring always decomposes this way; failure of any
// internal step throws logic_error.
LabeledFactorization coloring_to_factorization(const EdgeColoring& c);

// Factorization -> coloring. With B the partial sums of the implied shift
// vector: the left part of F^i_j gets color B_{i-1}+j, the right part
// B_{i-1}+(2n-1)+j, and the free matching F^0_j gets B_{n-1}+j. The result
// is verified to be a valid interval (2n-1+total)-coloring.
EdgeColoring factorization_to_coloring(const LabeledFactorization& f);

// Labels the first `want` matchings (storage order) that admit a split
// index, each with the smallest index available to it; the rest stay
// free. Throws invalid_argument when fewer than `want` matchings are
// splittable.
LabeledFactorization assign_splits(const PairedOrdering& ordering,
                                   std::vector<PerfectMatching> matchings,
                                   int want);

}  // namespace intercol
