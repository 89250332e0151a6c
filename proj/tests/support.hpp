#pragma once

// Shared test helpers: a deterministic RNG alias and seeded generators
// that produce valid factorizations and interval colorings for
// property-based checks. Everything is header-only and allocation-heavy
// rather than clever; tests prefer obviousness over speed.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "intercol/constructions.hpp"
#include "intercol/equivalence.hpp"
#include "intercol/graph.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A perfect matching of K_{2n} avoiding the edges marked in `used`,
// found by full backtracking with a randomized branch order; nullopt
// when the remaining graph has none.
inline std::optional<intercol::PerfectMatching> random_matching_avoiding(
    Rng& rng, int n, const std::vector<char>& used) {
    int nv = 2 * n;
    std::vector<int> partner(nv, -1);
    std::function<bool()> go = [&]() -> bool {
        int u = 0;
        while (u < nv && partner[u] != -1) ++u;
        if (u == nv) return true;
        std::vector<int> cands;
        for (int v = u + 1; v < nv; ++v)
            if (partner[v] == -1 && !used[intercol::edge_index(u, v, n)]) cands.push_back(v);
        std::shuffle(cands.begin(), cands.end(), rng);
        for (int v : cands) {
            partner[u] = v;
            partner[v] = u;
            if (go()) return true;
            partner[u] = -1;
            partner[v] = -1;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    return intercol::PerfectMatching(std::move(partner));
}

// A uniform-ish random 1-factorization of K_{2n}: matchings are drawn
// one at a time, and the whole attempt restarts when the leftover graph
// runs out of perfect matchings (possible once fewer than n remain).
inline std::vector<intercol::PerfectMatching> random_factorization(Rng& rng, int n) {
    for (;;) {
        std::vector<char> used(intercol::edge_count(n), 0);
        std::vector<intercol::PerfectMatching> out;
        bool ok = true;
        for (int k = 0; k < 2 * n - 1; ++k) {
            auto m = random_matching_avoiding(rng, n, used);
            if (!m) {
                ok = false;
                break;
            }
            for (auto [a, b] : m->edges()) used[intercol::edge_index(a, b, n)] = 1;
            out.push_back(std::move(*m));
        }
        if (ok) return out;
    }
}

// A valid interval coloring of K_{2n}: one of the library constructions
// picked at random, then up to three structure-preserving mutations
// (mirror the pair order, free one labeled matching).
inline intercol::EdgeColoring random_coloring(Rng& rng, int n) {
    using namespace intercol;
    EdgeColoring c = [&]() -> EdgeColoring {
        int pick = rand_int(rng, 0, n >= 2 ? 2 : 1);
        switch (pick) {
            case 0: return construct_round_robin(n);
            case 1: return factorization_to_coloring(construct_pn_konig(n));
            default: return factorization_to_coloring(construct_three_five(n));
        }
    }();
    int mutations = rand_int(rng, 0, 3);
    for (int step = 0; step < mutations; ++step) {
        ShiftVector s = shift_vector(c);
        std::vector<int> droppable;
        for (int i = 1; i <= s.length(); ++i)
            if (s.b[i - 1] >= 1) droppable.push_back(i);
        if (!droppable.empty() && rand_int(rng, 0, 1) == 0)
            c = drop_color(c, droppable[rand_int(rng, 0, static_cast<int>(droppable.size()) - 1)]);
        else
            c = reverse_coloring(c);
    }
    return c;
}

// A valid labeled factorization: either the decomposition of a random
// coloring or a fresh random factorization with every matching free.
inline intercol::LabeledFactorization random_labeled_factorization(Rng& rng, int n) {
    using namespace intercol;
    if (rand_int(rng, 0, 2) == 0) {
        std::vector<PerfectMatching> ms = random_factorization(rng, n);
        std::vector<int> labels(ms.size(), 0);
        return LabeledFactorization(PairedOrdering::identity(n), std::move(ms),
                                    std::move(labels));
    }
    return coloring_to_factorization(random_coloring(rng, n));
}

}  // namespace testsupport
