#include "intercol/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace intercol {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// First failure of the forward filters on b (length n-1), or nullopt.
std::optional<std::pair<FilterKind, int>> check_direction(const std::vector<int>& b, int n,
                                                          FilterSet fs) {
    int len = n - 1;
    std::vector<int> sums(len + 1, 0);
    std::partial_sum(b.begin(), b.end(), sums.begin() + 1);

    if (fs.prefix_sum)
        for (int k = 1; k <= len; ++k)
            if (sums[k] > 2 * k - 1) return {{FilterKind::prefix_sum, k}};

    if (fs.after_saturated)
        for (int k = 2; k <= n - 2; ++k)
            if (sums[k] == 2 * k - 1 && b[k] > 1)
                return {{FilterKind::after_saturated, k}};

    if (fs.before_saturated)
        for (int k = 3; k <= n - 1; ++k)
            if (sums[k] == 2 * k - 1 && b[k - 1] < 3)
                return {{FilterKind::before_saturated, k}};

    if (fs.edge_count)
        for (int k = 2; k <= n - 2; ++k) {
            long long rhs = 0;
            for (int i = 1; i <= k; ++i) rhs += static_cast<long long>(i) * b[i - 1];
            for (int i = k + 1; i <= std::min(2 * k - 1, len); ++i)
                rhs += static_cast<long long>(2 * k - i) * b[i - 1];
            if (rhs > static_cast<long long>(k) * (2 * k - 1))
                return {{FilterKind::edge_count, k}};
        }

    return std::nullopt;
}

}  // namespace

int CandidateVector::total() const { return std::accumulate(b.begin(), b.end(), 0); }

const char* filter_name(FilterKind k) {
    switch (k) {
        case FilterKind::prefix_sum: return "prefix-sum";
        case FilterKind::after_saturated: return "after-saturated";
        case FilterKind::before_saturated: return "before-saturated";
        case FilterKind::edge_count: return "edge-count";
    }
    return "?";
}

std::vector<std::string> FilterSet::names() const {
    std::vector<std::string> out;
    if (prefix_sum) out.emplace_back(filter_name(FilterKind::prefix_sum));
    if (after_saturated) out.emplace_back(filter_name(FilterKind::after_saturated));
    if (before_saturated) out.emplace_back(filter_name(FilterKind::before_saturated));
    if (edge_count) out.emplace_back(filter_name(FilterKind::edge_count));
    return out;
}

std::string FeasibilityVerdict::to_string() const {
    if (passed) return "feasible";
    std::string s = "rejected by ";
    s += filter_name(rejecting_filter);
    s += " at k=" + std::to_string(position);
    if (reversed) s += " (reversed)";
    return s;
}

FeasibilityVerdict filter_feasible(const CandidateVector& v, FilterSet fs) {
    require(v.n >= 1, "filter_feasible: n must be >= 1");
    require(static_cast<int>(v.b.size()) == v.n - 1,
            "filter_feasible: vector length must be n-1");
    for (int x : v.b) require(x >= 0, "filter_feasible: entries must be nonnegative");

    FeasibilityVerdict verdict;
    if (auto hit = check_direction(v.b, v.n, fs)) {
        verdict = {false, hit->first, false, hit->second};
        return verdict;
    }
    std::vector<int> rev(v.b.rbegin(), v.b.rend());
    if (auto hit = check_direction(rev, v.n, fs)) {
        verdict = {false, hit->first, true, hit->second};
        return verdict;
    }
    return verdict;
}

namespace {

// Lexicographic DFS over vectors of a fixed total. Prunes with the
// forward prefix bound and the (reversed) suffix bound only; both are
// consequences of the always-on prefix_sum filter.
struct Enumerator {
    int n;
    int total;
    FilterSet fs;
    std::vector<CandidateVector> out;
    std::int64_t nodes = 0;
    std::int64_t checked = 0;

    void run(std::vector<int>& b, int depth, int sum) {
        int len = n - 1;
        if (depth == len) {
            if (sum != total) return;
            ++checked;
            CandidateVector v{n, b};
            if (filter_feasible(v, fs).passed) out.push_back(std::move(v));
            return;
        }
        int remaining_slots = len - depth - 1;
        for (int val = 0; sum + val <= std::min(total, 2 * (depth + 1) - 1); ++val) {
            int rest = total - sum - val;
            // The rest must fit in the last remaining_slots entries, whose
            // sum the reversed prefix bound caps at 2*slots - 1.
            if (remaining_slots == 0 ? rest != 0 : rest > 2 * remaining_slots - 1) continue;
            ++nodes;
            b[depth] = val;
            run(b, depth + 1, sum + val);
        }
        b[depth] = 0;
    }
};

}  // namespace

EnumerationResult enumerate_feasible(int n, int total, FilterSet fs, int threads) {
    require(n >= 1, "enumerate_feasible: n must be >= 1");
    require(total >= 0, "enumerate_feasible: total must be >= 0");
    require(threads >= 1, "enumerate_feasible: thread count must be >= 1");

    EnumerationResult res;
    int len = n - 1;
    if (len == 0) {
        if (total == 0) {
            res.vectors.push_back({n, {}});
            res.vectors_checked = 1;
        }
        return res;
    }

    // Seed tasks with every admissible prefix of depth min(2, len); each
    // task completes its subtree independently. Task order is
    // lexicographic and each subtree emits in lexicographic order, so the
    // concatenation needs no sort and is identical for any thread count.
    int depth = std::min(2, len);
    struct Task {
        std::vector<int> prefix;
        int sum;
    };
    std::vector<Task> tasks;
    std::vector<int> prefix(depth, 0);
    std::function<void(int, int)> seed = [&](int d, int sum) {
        if (d == depth) {
            tasks.push_back({prefix, sum});
            return;
        }
        int remaining_slots = len - d - 1;
        for (int val = 0; sum + val <= std::min(total, 2 * (d + 1) - 1); ++val) {
            int rest = total - sum - val;
            if (remaining_slots == 0 ? rest != 0 : rest > 2 * remaining_slots - 1) continue;
            res.nodes_explored += 1;
            prefix[d] = val;
            seed(d + 1, sum + val);
        }
        prefix[d] = 0;
    };
    seed(0, 0);

    std::vector<Enumerator> parts(tasks.size());
    auto run_task = [&](size_t i) {
        Enumerator& e = parts[i];
        e.n = n;
        e.total = total;
        e.fs = fs;
        std::vector<int> b(len, 0);
        std::copy(tasks[i].prefix.begin(), tasks[i].prefix.end(), b.begin());
        e.run(b, depth, tasks[i].sum);
    };

    if (threads == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int workers = std::min<int>(threads, static_cast<int>(tasks.size()));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(i);
            });
        for (auto& th : pool) th.join();
    }

    for (Enumerator& e : parts) {
        res.nodes_explored += e.nodes;
        res.vectors_checked += e.checked;
        std::move(e.out.begin(), e.out.end(), std::back_inserter(res.vectors));
    }
    return res;
}

BoundCertificate certify_upper(int n, int total, FilterSet fs, int threads) {
    EnumerationResult r = enumerate_feasible(n, total, fs, threads);
    BoundCertificate cert;
    cert.n = n;
    cert.total = total;
    cert.filters = fs.names();
    cert.nodes_explored = r.nodes_explored;
    cert.vectors_checked = r.vectors_checked;
    cert.feasible_count = static_cast<std::int64_t>(r.vectors.size());
    cert.empty = r.vectors.empty();
    cert.claimed_bound = cert.empty ? (2 * n - 1) + total - 1 : 0;
    return cert;
}

int certified_upper_bound(int n, int threads) {
    require(n >= 1, "certified_upper_bound: n must be >= 1");
    if (n == 1) return 1;
    // The prefix filter forces b_1 <= 1, sum(b_1..b_{n-2}) <= 2n-5 and
    // (reversed) b_{n-1} <= 1, so no feasible vector exceeds this total.
    int start = (n == 2) ? 1 : 2 * n - 4;
    for (int total = start; total >= 1; --total)
        if (!enumerate_feasible(n, total, FilterSet::all(), threads).vectors.empty())
            return 2 * n - 1 + total;
    return 2 * n - 1;
}

namespace {

// Forward-only filter variant for length-k prefixes: every check must
// stay valid for every completion to length n-1, any n > k.
bool prefix_mode_feasible(const std::vector<int>& b) {
    int k = static_cast<int>(b.size());
    std::vector<int> sums(k + 1, 0);
    std::partial_sum(b.begin(), b.end(), sums.begin() + 1);

    for (int j = 1; j <= k; ++j)
        if (sums[j] > 2 * j - 1) return false;
    for (int j = 2; j <= k - 1; ++j)
        if (sums[j] == 2 * j - 1 && b[j] > 1) return false;
    for (int j = 3; j <= k; ++j)
        if (sums[j] == 2 * j - 1 && b[j - 1] < 3) return false;
    for (int j = 2; j <= k - 1; ++j) {
        long long rhs = 0;
        for (int i = 1; i <= j; ++i) rhs += static_cast<long long>(i) * b[i - 1];
        for (int i = j + 1; i <= std::min(2 * j - 1, k); ++i)
            rhs += static_cast<long long>(2 * j - i) * b[i - 1];
        if (rhs > static_cast<long long>(j) * (2 * j - 1)) return false;
    }
    return true;
}

}  // namespace

MFilterResult m_filter(int k, int r) {
    require(k >= 1, "m_filter: k must be >= 1");
    require(r >= 0, "m_filter: r must be >= 0");

    MFilterResult best;
    std::vector<int> b(k, 0);

    // Lexicographic DFS; the first prefix attaining a value is kept, so
    // the minimizer reported is the lexicographically smallest one.
    std::function<void(int, int, int)> dfs = [&](int depth, int sum, int weighted) {
        if (best.feasible) {
            // remaining mass costs at least (depth+1) per unit
            if (weighted + (r - sum) * (depth + 1) >= best.value && depth < k) return;
        }
        if (depth == k) {
            if (sum != r) return;
            if (!prefix_mode_feasible(b)) return;
            if (!best.feasible || weighted < best.value) {
                best.feasible = true;
                best.value = weighted;
                best.attaining = b;
            }
            return;
        }
        int slots_left = k - depth - 1;
        for (int val = 0; sum + val <= std::min(r, 2 * (depth + 1) - 1); ++val) {
            if (slots_left == 0 && sum + val != r) continue;
            b[depth] = val;
            dfs(depth + 1, sum + val, weighted + val * (depth + 1));
        }
        b[depth] = 0;
    };
    dfs(0, 0, 0);
    return best;
}

int upper_bound(int n) {
    require(n >= 1, "upper_bound: n must be >= 1");
    if (n == 1) return 1;
    if (n == 2) return 4;
    if (n <= 4) return 4 * n - 5;
    if (n <= 8) return 4 * n - 6;
    return 4 * n - 7;
}

namespace {

std::vector<std::pair<int, int>> prime_factorization(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p) continue;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.emplace_back(p, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// 4p - 3 minus the best known W(K_{2p}) for prime p.
int prime_deficit(int p) {
    switch (p) {
        case 2: return 1;
        case 3: return 2;
        case 5: return 3;
        case 7: return 4;
        case 11: return 4;
        default: return (p + 1) / 2;  // from the floor(3.5p)-3 witness
    }
}

}  // namespace

int lower_bound(int n) {
    require(n >= 1, "lower_bound: n must be >= 1");
    if (n == 14) return 46;  // published table value; see header note
    int value = 4 * n - 3;
    for (auto [p, a] : prime_factorization(n)) value -= a * prime_deficit(p);
    return value;
}

ReferenceFormulas reference_formulas(int n) {
    require(n >= 1, "reference_formulas: n must be >= 1");
    ReferenceFormulas f;
    f.n = n;
    f.kamalian = 2 * n - 1 + std::bit_width(static_cast<unsigned>(2 * n - 1)) - 1;
    f.giaro = (n == 1) ? 1 : 4 * n - 4;
    f.petrosyan_3n2 = 3 * n - 2;
    int q = std::countr_zero(static_cast<unsigned>(n));
    int p = n >> q;
    f.petrosyan_pq = 4 * n - 2 - p - q;
    f.conjecture_pq = f.petrosyan_pq;
    f.conjecture_log = 4 * n - 2 - (std::bit_width(static_cast<unsigned>(n)) - 1) -
                       std::popcount(static_cast<unsigned>(n));
    return f;
}

int composite_lower(int m, int wm, int n, int wn) {
    require(m >= 1 && n >= 1, "composite_lower: m, n must be >= 1");
    return wm + wn + 4 * (m - 1) * (n - 1) - 1;
}

}  // namespace intercol
