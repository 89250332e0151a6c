#include "intercol/equivalence.hpp"

#include <algorithm>
#include <string>

namespace intercol {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace

LabeledFactorization::LabeledFactorization(PairedOrdering ordering,
                                           std::vector<PerfectMatching> matchings,
                                           std::vector<int> labels)
    : ordering_(std::move(ordering)),
      matchings_(std::move(matchings)),
      labels_(std::move(labels)) {
    int n = ordering_.n();
    require(static_cast<int>(matchings_.size()) == 2 * n - 1,
            "LabeledFactorization: a 1-factorization of K_{2n} has 2n-1 matchings");
    require(labels_.size() == matchings_.size(),
            "LabeledFactorization: one label per matching");

    std::vector<char> used(edge_count(n), 0);
    for (const PerfectMatching& m : matchings_) {
        require(m.n() == n, "LabeledFactorization: matching size mismatch");
        for (auto [a, b] : m.edges()) {
            int idx = edge_index(a, b, n);
            require(!used[idx], "LabeledFactorization: matchings are not edge-disjoint");
            used[idx] = 1;
        }
    }
    // n(2n-1) edges in 2n-1 disjoint n-edge matchings: cover is implied,
    // but keep the direct check cheap and explicit.
    require(std::find(used.begin(), used.end(), 0) == used.end(),
            "LabeledFactorization: matchings do not cover K_{2n}");

    for (int idx = 0; idx < size(); ++idx) {
        int lab = labels_[idx];
        require(lab >= 0 && lab <= n - 1, "LabeledFactorization: label out of range");
        if (lab > 0)
            require(is_splitted_at(matchings_[idx], lab, ordering_),
                    "LabeledFactorization: matching is not splitted at its label");
    }

    ShiftVector b = implied_shift();
    auto sums = b.partial_sums();
    for (int k = 1; k <= b.length(); ++k)
        require(sums[k] <= 2 * k - 1,
                "LabeledFactorization: more than 2k-1 matchings labeled within [1, k]");
}

int LabeledFactorization::labeled_count() const {
    return static_cast<int>(std::count_if(labels_.begin(), labels_.end(),
                                          [](int l) { return l > 0; }));
}

ShiftVector LabeledFactorization::implied_shift() const {
    ShiftVector sh;
    sh.b.assign(std::max(n() - 1, 0), 0);
    for (int lab : labels_)
        if (lab > 0) sh.b[lab - 1] += 1;
    return sh;
}

LabeledFactorization LabeledFactorization::normalized() const {
    std::vector<PerfectMatching> renamed;
    renamed.reserve(matchings_.size());
    for (const PerfectMatching& m : matchings_) {
        EdgeList edges;
        for (auto [a, b] : m.edges()) {
            int pa = ordering_.position_of(a);
            int pb = ordering_.position_of(b);
            edges.emplace_back(std::min(pa, pb), std::max(pa, pb));
        }
        renamed.push_back(PerfectMatching::from_edges(n(), edges));
    }
    return LabeledFactorization(PairedOrdering::identity(n()), std::move(renamed), labels_);
}

LabeledFactorization coloring_to_factorization(const EdgeColoring& c) {
    IntervalReport rep = verify_interval(c);
    require(rep.valid, "coloring_to_factorization: not a valid interval coloring (" +
                           rep.message + ")");

    PairedOrdering ord = canonical_ordering(c);
    ShiftVector sh = shift_vector(c, ord);
    auto B = sh.partial_sums();
    int n = c.n();
    int total = sh.total();
    ensure(c.t() == 2 * n - 1 + total,
           "coloring_to_factorization: t does not equal 2n-1 plus the shift total");

    std::vector<PerfectMatching> matchings;
    std::vector<int> labels;

    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= sh.b[i - 1]; ++j) {
            EdgeList fused = color_class(c, B[i - 1] + j);
            EdgeList right = color_class(c, B[i - 1] + (2 * n - 1) + j);
            fused.insert(fused.end(), right.begin(), right.end());
            PerfectMatching m = PerfectMatching::from_edges(n, fused);
            ensure(is_splitted_at(m, i, ord),
                   "coloring_to_factorization: fused class is not splitted at its label");
            matchings.push_back(std::move(m));
            labels.push_back(i);
        }
    }
    for (int j = 1; j <= 2 * n - 1 - total; ++j) {
        matchings.push_back(PerfectMatching::from_edges(n, color_class(c, total + j)));
        labels.push_back(0);
    }

    return LabeledFactorization(ord, std::move(matchings), std::move(labels));
}

EdgeColoring factorization_to_coloring(const LabeledFactorization& f) {
    int n = f.n();
    ShiftVector sh = f.implied_shift();
    auto B = sh.partial_sums();
    int total = sh.total();
    int t = 2 * n - 1 + total;

    const PairedOrdering& ord = f.ordering();
    std::vector<int> colors(edge_count(n), 0);
    std::vector<int> seen_per_label(n, 0);  // j counters, index 0 = free

    auto paint = [&](const EdgeList& edges, int color) {
        for (auto [a, b] : edges) {
            int idx = edge_index(a, b, n);
            ensure(colors[idx] == 0, "factorization_to_coloring: edge colored twice");
            colors[idx] = color;
        }
    };

    for (int idx = 0; idx < f.size(); ++idx) {
        int lab = f.label(idx);
        int j = ++seen_per_label[lab];
        if (lab == 0) {
            paint(f.matching(idx).edges(), B[n - 1] + j);
        } else {
            SplitParts parts = split_parts(f.matching(idx), lab, ord);
            ensure(parts.crossing.empty(),
                   "factorization_to_coloring: labeled matching crosses its boundary");
            paint(parts.left, B[lab - 1] + j);
            paint(parts.right, B[lab - 1] + (2 * n - 1) + j);
        }
    }

    EdgeColoring c(n, t, std::move(colors));
    IntervalReport rep = verify_interval(c);
    ensure(rep.valid,
           "factorization_to_coloring: result is not a valid interval coloring (" +
               rep.message + ")");
    ensure(shift_vector(c) == sh,
           "factorization_to_coloring: realized shift vector differs from the labels");
    return c;
}

LabeledFactorization assign_splits(const PairedOrdering& ordering,
                                   std::vector<PerfectMatching> matchings,
                                   int want) {
    require(want >= 0, "assign_splits: want must be >= 0");
    std::vector<int> labels(matchings.size(), 0);
    int assigned = 0;
    for (size_t idx = 0; idx < matchings.size() && assigned < want; ++idx) {
        std::vector<int> options = split_indices(matchings[idx], ordering);
        if (!options.empty()) {
            labels[idx] = options.front();
            ++assigned;
        }
    }
    require(assigned == want, "assign_splits: only " + std::to_string(assigned) +
                                  " of the requested " + std::to_string(want) +
                                  " matchings admit a split index");
    return LabeledFactorization(ordering, std::move(matchings), std::move(labels));
}

}  // namespace intercol
