#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "intercol/constructions.hpp"
#include "intercol/equivalence.hpp"
#include "support.hpp"

using namespace intercol;
using testsupport::Rng;

namespace {

// Order-free fingerprint of a labeled factorization: the multiset of
// (label, sorted edge list) pairs.
std::multiset<std::pair<int, EdgeList>> fingerprint(const LabeledFactorization& f) {
    std::multiset<std::pair<int, EdgeList>> out;
    for (int i = 0; i < f.size(); ++i) out.insert({f.label(i), f.matching(i).edges()});
    return out;
}

}  // namespace

TEST_CASE("painting a labeled factorization yields a verified coloring with its shift") {
    Rng rng(201);
    for (int rep = 0; rep < 60; ++rep) {
        int n = testsupport::rand_int(rng, 1, 7);
        LabeledFactorization f = testsupport::random_labeled_factorization(rng, n);
        EdgeColoring c = factorization_to_coloring(f);
        CHECK(verify_interval(c).valid);
        CHECK(c.t() == 2 * n - 1 + f.implied_shift().total());
        CHECK(shift_vector(c) == f.implied_shift());
    }
}

TEST_CASE("coloring -> factorization -> coloring is the identity") {
    Rng rng(202);
    for (int rep = 0; rep < 60; ++rep) {
        int n = testsupport::rand_int(rng, 1, 7);
        EdgeColoring c = testsupport::random_coloring(rng, n);
        LabeledFactorization f = coloring_to_factorization(c);
        CHECK(f.size() == 2 * n - 1);
        CHECK(f.implied_shift() == shift_vector(c));
        CHECK(f.ordering() == canonical_ordering(c));
        CHECK(factorization_to_coloring(f) == c);
    }
}

TEST_CASE("factorization -> coloring -> factorization keeps the labeled matchings") {
    Rng rng(203);
    for (int rep = 0; rep < 60; ++rep) {
        int n = testsupport::rand_int(rng, 1, 7);
        LabeledFactorization f = testsupport::random_labeled_factorization(rng, n);
        LabeledFactorization g = coloring_to_factorization(factorization_to_coloring(f));
        CHECK(fingerprint(g) == fingerprint(f));
    }
}

TEST_CASE("decomposition refuses colorings that are not interval colorings") {
    // Improper: (0,1) and (0,2) share color 1.
    EdgeColoring improper(2, 4, {1, 1, 4, 1, 2, 3});
    CHECK_THROWS_AS(coloring_to_factorization(improper), std::logic_error);
}

TEST_CASE("LabeledFactorization validates its pieces") {
    PairedOrdering ord = PairedOrdering::identity(2);
    std::vector<PerfectMatching> ms = round_robin_factorization(2);
    REQUIRE(ms.size() == 3);

    SUBCASE("a valid free factorization passes") {
        LabeledFactorization f(ord, ms, {0, 0, 0});
        CHECK(f.labeled_count() == 0);
        CHECK(f.implied_shift() == ShiftVector{{0}});
    }
    SUBCASE("matching count must be 2n-1") {
        CHECK_THROWS_AS(
            LabeledFactorization(ord, {ms[0], ms[1]}, std::vector<int>{0, 0}),
            std::invalid_argument);
    }
    SUBCASE("label vector must match the matching count") {
        CHECK_THROWS_AS(LabeledFactorization(ord, ms, {0, 0}), std::invalid_argument);
    }
    SUBCASE("matchings must be pairwise disjoint") {
        CHECK_THROWS_AS(LabeledFactorization(ord, {ms[0], ms[0], ms[2]},
                                             std::vector<int>{0, 0, 0}),
                        std::invalid_argument);
    }
    SUBCASE("labels must lie in [0, n-1]") {
        CHECK_THROWS_AS(LabeledFactorization(ord, ms, {-1, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(LabeledFactorization(ord, ms, {2, 0, 0}), std::invalid_argument);
    }
    SUBCASE("a labeled matching must actually be splitted there") {
        // Exactly one of the three matchings of K_4 keeps both pairs
        // internal; labeling any other with 1 must fail.
        int splitted = -1;
        for (int i = 0; i < 3; ++i)
            if (is_splitted_at(ms[i], 1, ord)) splitted = i;
        REQUIRE(splitted >= 0);
        for (int i = 0; i < 3; ++i) {
            std::vector<int> labels = {0, 0, 0};
            labels[i] = 1;
            if (i == splitted)
                CHECK_NOTHROW(LabeledFactorization(ord, ms, labels));
            else
                CHECK_THROWS_AS(LabeledFactorization(ord, ms, labels),
                                std::invalid_argument);
        }
    }
}

TEST_CASE("implied_shift counts labels by value") {
    LabeledFactorization f = construct_pn_konig(4);
    CHECK(f.n() == 4);
    CHECK(f.size() == 7);
    CHECK(f.labeled_count() == 3);
    CHECK(f.implied_shift() == ShiftVector{{1, 1, 1}});
}

TEST_CASE("normalized renames vertices to their positions") {
    Rng rng(204);
    for (int rep = 0; rep < 40; ++rep) {
        int n = testsupport::rand_int(rng, 2, 7);
        EdgeColoring c = testsupport::random_coloring(rng, n);
        LabeledFactorization f = coloring_to_factorization(c);
        LabeledFactorization g = f.normalized();
        CHECK(g.ordering() == PairedOrdering::identity(n));
        CHECK(g.labels() == f.labels());
        CHECK(g.implied_shift() == f.implied_shift());
        for (int i = 0; i < f.size(); ++i) {
            EdgeList renamed;
            for (auto [a, b] : f.matching(i).edges()) {
                int pa = f.ordering().position_of(a), pb = f.ordering().position_of(b);
                renamed.emplace_back(std::min(pa, pb), std::max(pa, pb));
            }
            std::sort(renamed.begin(), renamed.end());
            CHECK(g.matching(i).edges() == renamed);
        }
        CHECK(g.normalized() == g);  // idempotent
    }
}

TEST_CASE("assign_splits is first-fit with the smallest split index") {
    Rng rng(205);
    for (int rep = 0; rep < 40; ++rep) {
        int n = testsupport::rand_int(rng, 2, 6);
        PairedOrdering ord = PairedOrdering::identity(n);
        std::vector<PerfectMatching> ms = testsupport::random_factorization(rng, n);

        // Oracle: replay the documented policy directly.
        int splittable = 0;
        for (const auto& m : ms)
            if (!split_indices(m, ord).empty()) ++splittable;

        for (int want = 0; want <= splittable; ++want) {
            LabeledFactorization f = assign_splits(ord, ms, want);
            CHECK(f.labeled_count() == want);
            int assigned = 0;
            for (int i = 0; i < f.size(); ++i) {
                std::vector<int> opts = split_indices(ms[i], ord);
                if (assigned < want && !opts.empty()) {
                    CHECK(f.label(i) == opts.front());
                    ++assigned;
                } else {
                    CHECK(f.label(i) == 0);
                }
            }
        }
        CHECK_THROWS_AS(assign_splits(ord, ms, splittable + 1), std::invalid_argument);
    }
}

TEST_CASE("assign_splits on K_4 finds exactly one labelable matching") {
    PairedOrdering ord = PairedOrdering::identity(2);
    std::vector<PerfectMatching> ms = round_robin_factorization(2);
    LabeledFactorization f = assign_splits(ord, ms, 1);
    CHECK(f.labeled_count() == 1);
    CHECK(f.implied_shift() == ShiftVector{{1}});
    CHECK_THROWS_AS(assign_splits(ord, ms, 2), std::invalid_argument);
}
