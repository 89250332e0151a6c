#include "intercol/search.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <random>
#include <stdexcept>

#include "intercol/bounds.hpp"

namespace intercol {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
    std::int64_t limit;
    bool has_deadline = false;
    Clock::time_point deadline{};
    const std::atomic<bool>* stop_flag;
    std::int64_t nodes = 0;
    bool stopped = false;

    explicit BudgetTracker(const SearchBudget& b)
        : limit(b.node_limit), stop_flag(b.stop_flag) {
        if (b.time_limit_seconds > 0) {
            has_deadline = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(b.time_limit_seconds));
        }
    }

    // Counts one search node; false once any limit is exceeded.
    bool tick() {
        ++nodes;
        if (stopped) return false;
        if (limit > 0 && nodes > limit) return stopped = true, false;
        if ((nodes & 1023) == 0) {
            if (has_deadline && Clock::now() >= deadline) return stopped = true, false;
            if (stop_flag && stop_flag->load(std::memory_order_relaxed))
                return stopped = true, false;
        }
        return true;
    }
};

// Minimal max-flow (BFS augmenting paths); graphs here have ~50 nodes.
struct MaxFlow {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> g;

    explicit MaxFlow(int vertices) : g(vertices) {}

    void add(int a, int b, int cap) {
        g[a].push_back({b, cap, static_cast<int>(g[b].size())});
        g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
    }

    int run(int s, int t) {
        int total = 0;
        for (;;) {
            std::vector<int> via_node(g.size(), -1), via_arc(g.size(), -1);
            std::vector<int> queue{s};
            via_node[s] = s;
            for (size_t h = 0; h < queue.size() && via_node[t] < 0; ++h) {
                int u = queue[h];
                for (int i = 0; i < static_cast<int>(g[u].size()); ++i) {
                    const Arc& a = g[u][i];
                    if (a.cap <= 0 || via_node[a.to] >= 0) continue;
                    via_node[a.to] = u;
                    via_arc[a.to] = i;
                    queue.push_back(a.to);
                }
            }
            if (via_node[t] < 0) return total;
            int bottleneck = INT_MAX;
            for (int v = t; v != s; v = via_node[v])
                bottleneck = std::min(bottleneck, g[via_node[v]][via_arc[v]].cap);
            for (int v = t; v != s; v = via_node[v]) {
                Arc& a = g[via_node[v]][via_arc[v]];
                a.cap -= bottleneck;
                g[a.to][a.rev].cap += bottleneck;
            }
            total += bottleneck;
        }
    }
};

// Maximum number of matchings that can be labeled, given each matching's
// admissible split indices, under the caps #{labels <= k} <= 2k-1. Labels
// enter a chain node per index; chain arc k -> k+1 carries everything
// labeled <= k. Optionally reports one optimal assignment (0 = free).
int max_labeling(const std::vector<std::vector<int>>& options, int n,
                 std::vector<int>* labels_out) {
    int nm = static_cast<int>(options.size());
    if (labels_out) labels_out->assign(nm, 0);
    if (n <= 1) return 0;

    int source = 0, sink = 1 + nm + (n - 1);
    auto matching_node = [](int m) { return 1 + m; };
    auto chain_node = [nm](int k) { return 1 + nm + (k - 1); };

    MaxFlow flow(sink + 1);
    for (int m = 0; m < nm; ++m) {
        if (options[m].empty()) continue;
        flow.add(source, matching_node(m), 1);
        for (int i : options[m]) flow.add(matching_node(m), chain_node(i), 1);
    }
    for (int k = 1; k <= n - 2; ++k) flow.add(chain_node(k), chain_node(k + 1), 2 * k - 1);
    flow.add(chain_node(n - 1), sink, 2 * (n - 1) - 1);

    int value = flow.run(source, sink);
    if (labels_out)
        for (int m = 0; m < nm; ++m)
            for (const MaxFlow::Arc& a : flow.g[matching_node(m)]) {
                int k = a.to - (1 + nm) + 1;
                if (k >= 1 && k <= n - 1 && a.cap == 0) {
                    (*labels_out)[m] = k;
                    break;
                }
            }
    return value;
}

// Canonical enumeration of one-factorizations: matching #idx is the one
// containing edge {0, idx+1}, so each factorization appears exactly once.
struct SigmaDfs {
    int n, nv, nm;
    PairedOrdering ord;
    BudgetTracker& budget;
    bool prune;
    int sigma_cap;  // proven ceiling; reaching it ends the search

    std::vector<char> used;
    std::vector<int> partner;
    std::vector<PerfectMatching> built;
    std::vector<std::vector<int>> options;
    int built_with_options = 0;

    int best = -1;
    std::optional<LabeledFactorization> witness;
    bool aborted = false;
    bool optimal_found = false;
    const SigmaProgress* progress = nullptr;

    SigmaDfs(int n_, BudgetTracker& b, bool prune_, int cap)
        : n(n_),
          nv(2 * n_),
          nm(2 * n_ - 1),
          ord(PairedOrdering::identity(n_)),
          budget(b),
          prune(prune_),
          sigma_cap(cap),
          used(edge_count(n_), 0),
          partner(nv, -1) {}

    bool halted() const { return aborted || optimal_found; }

    void start_slot(int idx) {
        if (idx == nm) {
            std::vector<int> labels;
            int value = max_labeling(options, n, &labels);
            if (value > best) {
                best = value;
                witness = LabeledFactorization(ord, built, labels);
                if (progress) (*progress)(budget.nodes, best);
                if (prune && best >= sigma_cap) optimal_found = true;
            }
            return;
        }
        if (prune) {
            int bound =
                std::min({built_with_options + (nm - idx), std::max(2 * n - 3, 0), sigma_cap});
            if (bound <= best) return;
        }
        int p = idx + 1;  // forced partner of vertex 0, still unused here
        int e = edge_index(0, p, n);
        partner[0] = p;
        partner[p] = 0;
        used[e] = 1;
        fill(idx);
        partner[0] = -1;
        partner[p] = -1;
        used[e] = 0;
    }

    void fill(int idx) {
        int u = 0;
        while (u < nv && partner[u] != -1) ++u;
        if (u == nv) {
            PerfectMatching m(partner);
            std::vector<int> opts = split_indices(m, ord);
            if (!opts.empty()) ++built_with_options;
            built.push_back(std::move(m));
            options.push_back(std::move(opts));
            // The next slot starts from an empty matching; ours comes back
            // once the subtree below it is done.
            std::vector<int> mine(nv, -1);
            mine.swap(partner);
            start_slot(idx + 1);
            partner.swap(mine);
            if (!options.back().empty()) --built_with_options;
            built.pop_back();
            options.pop_back();
            return;
        }
        for (int v = u + 1; v < nv; ++v) {
            if (partner[v] != -1) continue;
            int e = edge_index(u, v, n);
            if (used[e]) continue;
            if (!budget.tick()) {
                aborted = true;
                return;
            }
            if (progress && (budget.nodes & ((1 << 20) - 1)) == 0)
                (*progress)(budget.nodes, best);
            partner[u] = v;
            partner[v] = u;
            used[e] = 1;
            fill(idx);
            partner[u] = -1;
            partner[v] = -1;
            used[e] = 0;
            if (halted()) return;
        }
    }
};

}  // namespace

SigmaResult sigma_search(int n, SearchBudget budget, bool enable_pruning,
                         const SigmaProgress& progress) {
    require(n >= 1, "sigma_search: n must be >= 1");

    SigmaResult res;
    res.n = n;

    int cap = enable_pruning ? certified_upper_bound(n) - (2 * n - 1) : INT_MAX;
    BudgetTracker tracker(budget);
    SigmaDfs dfs(n, tracker, enable_pruning, cap);
    if (progress) dfs.progress = &progress;
    dfs.start_slot(0);

    res.sigma = std::max(dfs.best, 0);
    res.witness = std::move(dfs.witness);
    res.nodes = tracker.nodes;
    res.exhaustive = !dfs.aborted;
    return res;
}

namespace {

// Depth-first realization of a target shift vector. Slots are filled in
// a fixed canonical order that every solution can be permuted into:
// labeled matchings first, split index ascending, same-label runs in
// strictly increasing edge-list order; then the free matchings, each
// forced to take the smallest unused edge at vertex 0.
struct RealizeDfs {
    enum class St { found, none, cut };

    int n, nv, nm;
    std::vector<int> slot_label;  // labels of slots [0, labeled_slots)
    int labeled_slots;
    PairedOrdering ord;
    BudgetTracker& global;
    std::int64_t local_limit;
    std::int64_t local_nodes = 0;
    std::mt19937_64 rng;

    std::vector<char> used;
    std::vector<int> partner;
    EdgeList cur;
    std::vector<PerfectMatching> built;
    std::vector<EdgeList> built_edges;

    // lexicographic tie state against the previous same-label matching
    const EdgeList* lex_prev = nullptr;
    bool lex_tight = false;

    std::optional<LabeledFactorization> found;
    bool budget_hit = false;

    RealizeDfs(int n_, const ShiftVector& target, BudgetTracker& g, std::int64_t limit,
               std::uint64_t seed)
        : n(n_),
          nv(2 * n_),
          nm(2 * n_ - 1),
          ord(PairedOrdering::identity(n_)),
          global(g),
          local_limit(limit),
          rng(seed),
          used(edge_count(n_), 0),
          partner(nv, -1) {
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 0; j < target.b[i - 1]; ++j) slot_label.push_back(i);
        labeled_slots = static_cast<int>(slot_label.size());
    }

    bool tick() {
        ++local_nodes;
        if (!global.tick()) return budget_hit = true, false;
        if (local_limit > 0 && local_nodes > local_limit) return budget_hit = true, false;
        return true;
    }

    St start_slot(int slot) {
        if (slot == nm) {
            std::vector<int> labels(slot_label);
            labels.resize(nm, 0);
            found = LabeledFactorization(ord, built, labels);
            return St::found;
        }

        lex_prev = nullptr;
        lex_tight = false;
        if (slot < labeled_slots) {
            if (slot > 0 && slot_label[slot - 1] == slot_label[slot]) {
                lex_prev = &built_edges[slot - 1];
                lex_tight = true;
            }
            return fill(slot);
        }

        // Free slot: every remaining matching is free, so ascending order
        // forces this one to cover the smallest unused edge at vertex 0.
        int p = -1;
        for (int v = 1; v < nv; ++v)
            if (!used[edge_index(0, v, n)]) {
                p = v;
                break;
            }
        if (p < 0) return St::none;
        if (!tick()) return St::cut;
        push_edge(0, p);
        St r = fill(slot);
        pop_edge(0, p);
        return r;
    }

    void push_edge(int u, int v) {
        partner[u] = v;
        partner[v] = u;
        used[edge_index(u, v, n)] = 1;
        cur.emplace_back(u, v);
    }

    void pop_edge(int u, int v) {
        partner[u] = -1;
        partner[v] = -1;
        used[edge_index(u, v, n)] = 0;
        cur.pop_back();
    }

    St complete_slot(int slot) {
        if (lex_tight) return St::none;  // equal to predecessor: impossible order
        built.push_back(PerfectMatching::from_edges(n, cur));
        built_edges.push_back(cur);

        EdgeList saved_cur;
        saved_cur.swap(cur);
        for (auto [a, b] : saved_cur) partner[a] = partner[b] = -1;
        const EdgeList* saved_prev = lex_prev;
        bool saved_tight = lex_tight;

        St r = start_slot(slot + 1);

        lex_prev = saved_prev;
        lex_tight = saved_tight;
        for (auto [a, b] : saved_cur) {
            partner[a] = b;
            partner[b] = a;
        }
        cur.swap(saved_cur);
        built.pop_back();
        built_edges.pop_back();
        return r;
    }

    St fill(int slot) {
        int u = 0;
        while (u < nv && partner[u] != -1) ++u;
        if (u == nv) return complete_slot(slot);

        // For a labeled slot the matching may not cross the split
        // boundary, so u's partner stays on u's side of it.
        int hi = nv;
        if (slot < labeled_slots) {
            int boundary = 2 * slot_label[slot];
            hi = (u < boundary) ? boundary : nv;
        }

        bool was_tight = lex_tight;
        std::pair<int, int> floor_edge{-1, -1};
        if (was_tight) {
            floor_edge = (*lex_prev)[cur.size()];
            if (u < floor_edge.first) return St::none;
            if (u > floor_edge.first) lex_tight = false;
        }

        std::vector<int> cands;
        for (int v = u + 1; v < hi; ++v)
            if (partner[v] == -1 && !used[edge_index(u, v, n)]) cands.push_back(v);
        std::shuffle(cands.begin(), cands.end(), rng);

        for (int v : cands) {
            bool tight_here = was_tight && u == floor_edge.first;
            if (tight_here) {
                if (v < floor_edge.second) continue;
                lex_tight = (v == floor_edge.second);
            }
            if (!tick()) {
                lex_tight = was_tight;
                return St::cut;
            }
            push_edge(u, v);
            St r = fill(slot);
            pop_edge(u, v);
            if (r != St::none) {
                lex_tight = was_tight;
                return r;
            }
        }
        lex_tight = was_tight;
        return St::none;
    }
};

}  // namespace

RealizeResult realize_shift(int n, const ShiftVector& target, SearchBudget budget) {
    require(n >= 1, "realize_shift: n must be >= 1");
    require(target.length() == n - 1, "realize_shift: shift vector length must be n-1");
    for (int x : target.b) require(x >= 0, "realize_shift: entries must be nonnegative");

    // The filters are necessary conditions, so a rejected vector can
    // never be realized; refuse it rather than searching.
    FeasibilityVerdict verdict = filter_feasible({n, target.b});
    require(verdict.passed, "realize_shift: target is " + verdict.to_string());

    RealizeResult out;
    BudgetTracker tracker(budget);
    std::int64_t per_restart = 1 << 14;
    for (int restart = 0;; ++restart, per_restart *= 2) {
        RealizeDfs dfs(n, target, tracker, per_restart, budget.seed + restart);
        RealizeDfs::St r = dfs.start_slot(0);
        out.nodes = tracker.nodes;
        out.restarts = restart + 1;
        if (r == RealizeDfs::St::found) {
            out.coloring = factorization_to_coloring(*dfs.found);
            out.completed = true;
            return out;
        }
        if (r == RealizeDfs::St::none) {
            out.completed = true;  // full canonical space covered
            return out;
        }
        if (tracker.stopped) return out;  // global budget exhausted
    }
}

}  // namespace intercol
