#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <climits>
#include <optional>
#include <vector>

#include "doctest.h"
#include "intercol/bounds.hpp"
#include "support.hpp"

using namespace intercol;
using testsupport::Rng;

namespace {

// Independent transcription of the four shift-vector conditions, written
// before the implementation checks below and sharing nothing with them.
// Returns pass/fail only; b is indexed from zero, so b_k is b[k-1].
bool oracle_forward(const std::vector<int>& b, int n, FilterSet fs) {
    int len = n - 1;
    std::vector<long long> B(len + 1, 0);
    for (int k = 1; k <= len; ++k) B[k] = B[k - 1] + b[k - 1];
    for (int k = 1; k <= len; ++k)
        if (B[k] > 2 * k - 1) return false;
    if (fs.after_saturated)
        for (int k = 2; k <= n - 2; ++k)
            if (B[k] == 2 * k - 1 && b[k] > 1) return false;
    if (fs.before_saturated)
        for (int k = 3; k <= n - 1; ++k)
            if (B[k] == 2 * k - 1 && b[k - 1] < 3) return false;
    if (fs.edge_count)
        for (int k = 2; k <= n - 2; ++k) {
            long long rhs = 0;
            for (int i = 1; i <= k; ++i) rhs += 1LL * i * b[i - 1];
            for (int i = k + 1; i <= std::min(2 * k - 1, n - 1); ++i)
                rhs += 1LL * (2 * k - i) * b[i - 1];
            if (1LL * k * (2 * k - 1) < rhs) return false;
        }
    return true;
}

bool oracle_passes(std::vector<int> b, int n, FilterSet fs) {
    if (!oracle_forward(b, n, fs)) return false;
    std::reverse(b.begin(), b.end());
    return oracle_forward(b, n, fs);
}

// All vectors of the given length and sum in lexicographic order.
void compositions(int length, int sum, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == length) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= sum; ++v) {
        cur.push_back(v);
        compositions(length, sum - v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> oracle_enumerate(int n, int total, FilterSet fs) {
    std::vector<std::vector<int>> all, keep;
    std::vector<int> cur;
    compositions(n - 1, total, cur, all);
    for (const auto& b : all)
        if (oracle_passes(b, n, fs)) keep.push_back(b);
    return keep;
}

// Brute minimum of sum(i * b_i) over truncated-filter-feasible prefixes:
// the same windows m_filter documents, evaluated directly.
struct OracleM {
    bool feasible = false;
    long long value = 0;
    std::vector<int> attaining;
};

bool oracle_prefix_ok(const std::vector<int>& b, int k) {
    std::vector<long long> B(k + 1, 0);
    for (int j = 1; j <= k; ++j) B[j] = B[j - 1] + b[j - 1];
    for (int j = 1; j <= k; ++j)
        if (B[j] > 2 * j - 1) return false;
    for (int j = 2; j <= k - 1; ++j)
        if (B[j] == 2 * j - 1 && b[j] > 1) return false;
    for (int j = 3; j <= k; ++j)
        if (B[j] == 2 * j - 1 && b[j - 1] < 3) return false;
    for (int j = 2; j <= k - 1; ++j) {
        long long rhs = 0;
        for (int i = 1; i <= j; ++i) rhs += 1LL * i * b[i - 1];
        for (int i = j + 1; i <= std::min(2 * j - 1, k); ++i)
            rhs += 1LL * (2 * j - i) * b[i - 1];
        if (1LL * j * (2 * j - 1) < rhs) return false;
    }
    return true;
}

OracleM oracle_m(int k, int r) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    compositions(k, r, cur, all);
    OracleM best;
    for (const auto& b : all) {
        if (!oracle_prefix_ok(b, k)) continue;
        long long w = 0;
        for (int i = 1; i <= k; ++i) w += 1LL * i * b[i - 1];
        if (!best.feasible || w < best.value ||
            (w == best.value && b < best.attaining)) {
            best.feasible = true;
            best.value = w;
            best.attaining = b;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("filter_feasible matches the independent transcription") {
    Rng rng(401);
    for (int rep = 0; rep < 4000; ++rep) {
        int n = testsupport::rand_int(rng, 2, 9);
        std::vector<int> b(n - 1);
        for (int& x : b) x = testsupport::rand_int(rng, 0, 5);
        CHECK(filter_feasible({n, b}).passed == oracle_passes(b, n, FilterSet::all()));
        CHECK(filter_feasible({n, b}, FilterSet::prefix_only()).passed ==
              oracle_passes(b, n, FilterSet::prefix_only()));
    }
}

TEST_CASE("filter_feasible validates its input") {
    CHECK_THROWS_AS(filter_feasible({0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(filter_feasible({3, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(filter_feasible({3, {1, -1}}), std::invalid_argument);
    CHECK(filter_feasible({1, {}}).passed);
}

TEST_CASE("rejection verdicts name the filter, position, and direction") {
    SUBCASE("forward prefix overflow") {
        FeasibilityVerdict v = filter_feasible({3, {2, 0}});
        CHECK_FALSE(v.passed);
        CHECK(v.rejecting_filter == FilterKind::prefix_sum);
        CHECK(v.position == 1);
        CHECK_FALSE(v.reversed);
        CHECK(v.to_string() == "rejected by prefix-sum at k=1");
    }
    SUBCASE("the same overflow seen only after reversal") {
        FeasibilityVerdict v = filter_feasible({3, {0, 2}});
        CHECK_FALSE(v.passed);
        CHECK(v.rejecting_filter == FilterKind::prefix_sum);
        CHECK(v.position == 1);
        CHECK(v.reversed);
        CHECK(v.to_string() == "rejected by prefix-sum at k=1 (reversed)");
    }
    SUBCASE("saturation followed by a too-large entry") {
        FeasibilityVerdict v = filter_feasible({6, {1, 2, 2, 0, 0}});
        CHECK_FALSE(v.passed);
        CHECK(v.rejecting_filter == FilterKind::after_saturated);
        CHECK(v.position == 2);
        CHECK_FALSE(v.reversed);
    }
    SUBCASE("edge-count violation on the reversal") {
        FeasibilityVerdict v = filter_feasible({7, {1, 2, 1, 3, 1, 1}});
        CHECK_FALSE(v.passed);
        CHECK(v.rejecting_filter == FilterKind::edge_count);
        CHECK(v.position == 3);
        CHECK(v.reversed);
    }
    SUBCASE("a realizable vector passes") {
        CHECK(filter_feasible({6, {1, 1, 3, 0, 0}}).passed);
        CHECK(filter_feasible({6, {1, 1, 3, 0, 0}}).to_string() == "feasible");
    }
}

TEST_CASE("before-saturated fires once after-saturated stops shadowing it") {
    // With every filter on, a saturated prefix ending in b_k = 2 is
    // already saturated one step earlier, so after-saturated fires first;
    // disabling it (and edge-count) exposes the before-saturated check.
    FilterSet only_before{true, false, true, false};
    FeasibilityVerdict v = filter_feasible({4, {1, 2, 2}}, only_before);
    CHECK_FALSE(v.passed);
    CHECK(v.rejecting_filter == FilterKind::before_saturated);
    CHECK(v.position == 3);

    FeasibilityVerdict all = filter_feasible({4, {1, 2, 2}});
    CHECK_FALSE(all.passed);
    CHECK(all.rejecting_filter == FilterKind::after_saturated);
    CHECK(all.position == 2);
}

TEST_CASE("filter and set names are stable") {
    CHECK(std::string(filter_name(FilterKind::prefix_sum)) == "prefix-sum");
    CHECK(std::string(filter_name(FilterKind::after_saturated)) == "after-saturated");
    CHECK(std::string(filter_name(FilterKind::before_saturated)) == "before-saturated");
    CHECK(std::string(filter_name(FilterKind::edge_count)) == "edge-count");
    CHECK(FilterSet::all().names() ==
          std::vector<std::string>{"prefix-sum", "after-saturated", "before-saturated",
                                   "edge-count"});
    CHECK(FilterSet::prefix_only().names() == std::vector<std::string>{"prefix-sum"});
}

TEST_CASE("enumerate_feasible agrees with brute-force composition filtering") {
    for (int n = 2; n <= 7; ++n) {
        for (int total = 0; total <= 2 * n - 4 + 1; ++total) {
            for (FilterSet fs : {FilterSet::all(), FilterSet::prefix_only()}) {
                EnumerationResult got = enumerate_feasible(n, total, fs);
                std::vector<std::vector<int>> got_b;
                for (const auto& v : got.vectors) {
                    CHECK(v.n == n);
                    CHECK(v.total() == total);
                    got_b.push_back(v.b);
                }
                CHECK(got_b == oracle_enumerate(n, total, fs));
                CHECK(got.vectors_checked >= static_cast<std::int64_t>(got_b.size()));
                CHECK(got.nodes_explored >= got.vectors_checked);
            }
        }
    }
}

TEST_CASE("enumeration order and content are thread-invariant") {
    EnumerationResult one = enumerate_feasible(8, 8, FilterSet::all(), 1);
    EnumerationResult four = enumerate_feasible(8, 8, FilterSet::all(), 4);
    CHECK_FALSE(one.vectors.empty());
    CHECK(one.vectors == four.vectors);
    CHECK(one.vectors_checked == four.vectors_checked);
    CHECK_THROWS_AS(enumerate_feasible(8, 8, FilterSet::all(), 0), std::invalid_argument);
}

TEST_CASE("the feasible set empties exactly where the calculus promises") {
    // Orders 5 through 8 die at 2n-4, orders 9 and up already at 2n-5.
    // n = 7 is the one order whose set empties a step earlier still,
    // which is exactly the slack behind its certified bound.
    for (int n = 5; n <= 8; ++n) {
        if (n != 7) CHECK_FALSE(enumerate_feasible(n, 2 * n - 5).vectors.empty());
        CHECK(enumerate_feasible(n, 2 * n - 4).vectors.empty());
    }
    CHECK_FALSE(enumerate_feasible(7, 8).vectors.empty());
    CHECK(enumerate_feasible(7, 9).vectors.empty());
    for (int n = 9; n <= 10; ++n) {
        CHECK_FALSE(enumerate_feasible(n, 2 * n - 6).vectors.empty());
        CHECK(enumerate_feasible(n, 2 * n - 5).vectors.empty());
    }
}

TEST_CASE("the prefix filter alone already empties the set at 2n-3") {
    for (int n = 3; n <= 9; ++n) {
        CHECK_FALSE(enumerate_feasible(n, 2 * n - 4, FilterSet::prefix_only()).vectors.empty());
        CHECK(enumerate_feasible(n, 2 * n - 3, FilterSet::prefix_only()).vectors.empty());
    }
}

TEST_CASE("certify_upper reports a faithful emptiness certificate") {
    BoundCertificate empty = certify_upper(5, 6);
    CHECK(empty.n == 5);
    CHECK(empty.total == 6);
    CHECK(empty.empty);
    CHECK(empty.feasible_count == 0);
    CHECK(empty.claimed_bound == 2 * 5 - 1 + 6 - 1);
    CHECK(empty.filters == FilterSet::all().names());
    CHECK(empty.vectors_checked >= 0);

    BoundCertificate alive = certify_upper(5, 5);
    CHECK_FALSE(alive.empty);
    CHECK(alive.feasible_count ==
          static_cast<std::int64_t>(enumerate_feasible(5, 5).vectors.size()));
    CHECK(alive.feasible_count > 0);
}

TEST_CASE("certified upper bounds for small orders") {
    const int expected[] = {1, 4, 7, 11, 14, 18, 21, 26, 29, 33};
    for (int n = 1; n <= 10; ++n) CHECK(certified_upper_bound(n) == expected[n - 1]);
}

TEST_CASE("certified bound matches the closed form except the n=7 slack") {
    for (int n = 1; n <= 9; ++n) {
        if (n == 7)
            CHECK(certified_upper_bound(n) == upper_bound(n) - 1);
        else
            CHECK(certified_upper_bound(n) == upper_bound(n));
    }
}

TEST_CASE("shift vectors of actual colorings always pass the filters") {
    Rng rng(402);
    for (int rep = 0; rep < 100; ++rep) {
        int n = testsupport::rand_int(rng, 1, 8);
        EdgeColoring c = testsupport::random_coloring(rng, n);
        ShiftVector s = shift_vector(c);
        CHECK(filter_feasible({n, s.b}).passed);
    }
}

TEST_CASE("m_filter agrees with brute-force minimization") {
    for (int k = 1; k <= 5; ++k) {
        for (int r = 0; r <= 10; ++r) {
            MFilterResult got = m_filter(k, r);
            OracleM want = oracle_m(k, r);
            CHECK(got.feasible == want.feasible);
            if (want.feasible) {
                CHECK(got.value == want.value);
                CHECK(got.attaining == want.attaining);
            }
            if (r >= 2 * k) CHECK_FALSE(got.feasible);
        }
    }
    CHECK_THROWS_AS(m_filter(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(m_filter(1, -1), std::invalid_argument);
}

TEST_CASE("m_filter reproduces the published prefix-cost table") {
    const struct {
        int k, r, value;
    } cells[] = {
        {1, 0, 0}, {1, 1, 1},                                      //
        {2, 1, 1}, {2, 2, 3}, {2, 3, 5},                           //
        {3, 2, 3}, {3, 3, 5}, {3, 4, 8}, {3, 5, 12},               //
        {4, 4, 8}, {4, 5, 12}, {4, 6, 16}, {4, 7, 20},             //
    };
    for (const auto& cell : cells) {
        MFilterResult r = m_filter(cell.k, cell.r);
        CHECK(r.feasible);
        CHECK(r.value == cell.value);
        long long weighted = 0;
        for (int i = 1; i <= cell.k; ++i) weighted += 1LL * i * r.attaining[i - 1];
        CHECK(weighted == r.value);
        int sum = 0;
        for (int x : r.attaining) sum += x;
        CHECK(sum == cell.r);
    }
    CHECK_FALSE(m_filter(1, 2).feasible);
    CHECK_FALSE(m_filter(2, 4).feasible);
    CHECK_FALSE(m_filter(3, 6).feasible);
    CHECK_FALSE(m_filter(4, 8).feasible);
}

TEST_CASE("closed-form bound rows for n up to 18") {
    const int lower[] = {1,  4,  7,  11, 14, 18, 21, 26, 29,
                         33, 37, 41, 42, 46, 52, 57, 56, 64};
    const int upper[] = {1,  4,  7,  11, 14, 18, 22, 26, 29,
                         33, 37, 41, 45, 49, 53, 57, 61, 65};
    for (int n = 1; n <= 18; ++n) {
        CHECK(lower_bound(n) == lower[n - 1]);
        CHECK(upper_bound(n) == upper[n - 1]);
        CHECK(lower_bound(n) <= upper_bound(n));
    }
    CHECK_THROWS_AS(lower_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound(0), std::invalid_argument);
}

TEST_CASE("the published n=14 value beats the factorization formula") {
    // 14 = 2 * 7 would give 4n-3-(1+4) = 48; the published table reads 46.
    CHECK(lower_bound(14) == 46);
    CHECK(lower_bound(13) == 42);
    CHECK(lower_bound(7) == 21);
}

TEST_CASE("reference formulas and the witnesses that beat two conjectures") {
    ReferenceFormulas one = reference_formulas(1);
    CHECK(one.kamalian == 1);
    CHECK(one.giaro == 1);
    CHECK(one.petrosyan_3n2 == 1);
    CHECK(one.petrosyan_pq == 1);
    CHECK(one.conjecture_log == 1);

    ReferenceFormulas five = reference_formulas(5);
    CHECK(five.kamalian == 12);
    CHECK(five.giaro == 16);
    CHECK(five.petrosyan_3n2 == 13);
    CHECK(five.petrosyan_pq == 13);
    CHECK(five.conjecture_pq == 13);
    CHECK(five.conjecture_log == 14);

    for (int n = 1; n <= 20; ++n) {
        ReferenceFormulas r = reference_formulas(n);
        CHECK(r.n == n);
        CHECK(r.conjecture_pq == r.petrosyan_pq);
        CHECK(r.kamalian <= lower_bound(n));
        CHECK(r.petrosyan_3n2 <= lower_bound(n));
        if (n >= 2) CHECK(upper_bound(n) <= r.giaro);
    }

    // Constructed witnesses push past both conjectured ceilings.
    CHECK(reference_formulas(5).conjecture_pq < lower_bound(5));
    CHECK(reference_formulas(11).conjecture_log < lower_bound(11));
    CHECK(reference_formulas(15).conjecture_log < lower_bound(15));
}

TEST_CASE("product lower bounds never beat the direct table") {
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n)
            CHECK(lower_bound(m * n) >=
                  composite_lower(m, lower_bound(m), n, lower_bound(n)));
    CHECK(composite_lower(2, 4, 3, 7) == 18);
}
