#include "intercol/constructions.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace intercol {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

int u_of(int i) { return 2 * (i - 1); }
int v_of(int i) { return 2 * (i - 1) + 1; }

}  // namespace

PnFamily pn_factorization(int n_pairs) {
    require(n_pairs >= 1, "pn_factorization: n must be >= 1");
    int n = n_pairs;
    PnFamily fam;
    fam.n = n;

    EdgeList p0;
    for (int j = 1; j <= n / 2; ++j) {
        p0.emplace_back(u_of(j), u_of(n + 1 - j));
        p0.emplace_back(v_of(j), v_of(n + 1 - j));
    }
    if (n % 2 == 1) p0.emplace_back(u_of((n + 1) / 2), v_of((n + 1) / 2));
    fam.p.push_back(PerfectMatching::from_edges(n, p0));

    for (int i = 1; i <= n - 1; ++i) {
        EdgeList pi;
        for (int j = 1; j <= i / 2; ++j) {
            pi.emplace_back(u_of(j), u_of(i + 1 - j));
            pi.emplace_back(v_of(j), v_of(i + 1 - j));
        }
        if (i % 2 == 1) pi.emplace_back(u_of((i + 1) / 2), v_of((i + 1) / 2));
        for (int j = 1; j <= (n - i) / 2; ++j) {
            pi.emplace_back(u_of(i + j), u_of(n + 1 - j));
            pi.emplace_back(v_of(i + j), v_of(n + 1 - j));
        }
        if ((n - i) % 2 == 1) pi.emplace_back(u_of((n + i + 1) / 2), v_of((n + i + 1) / 2));
        fam.p.push_back(PerfectMatching::from_edges(n, pi));
    }

    // The family must tile K_2 [] K_n, and P_i must respect its boundary.
    PairedOrdering ord = PairedOrdering::identity(n);
    EdgeList all;
    for (const PerfectMatching& m : fam.p) {
        EdgeList e = m.edges();
        all.insert(all.end(), e.begin(), e.end());
    }
    std::sort(all.begin(), all.end());
    ensure(all == build_k2_square_kn(n), "pn_factorization: family does not tile K_2 [] K_n");
    for (int i = 1; i <= n - 1; ++i)
        ensure(is_splitted_at(fam.p[i], i, ord), "pn_factorization: P_i is not splitted at i");
    return fam;
}

std::vector<EdgeList> bipartite_one_factorization(const AdjGraph& g) {
    int nv = g.vertex_count;
    require(nv >= 0, "bipartite_one_factorization: negative vertex count");
    std::vector<std::vector<int>> adj(nv);
    for (auto [a, b] : g.edges) {
        require(a >= 0 && a < nv && b >= 0 && b < nv && a != b,
                "bipartite_one_factorization: invalid edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& nb : adj) {
        auto s = nb;
        std::sort(s.begin(), s.end());
        require(std::adjacent_find(s.begin(), s.end()) == s.end(),
                "bipartite_one_factorization: parallel edges");
    }

    std::vector<int> active;
    for (int v = 0; v < nv; ++v)
        if (!adj[v].empty()) active.push_back(v);
    if (active.empty()) return {};

    int r = static_cast<int>(adj[active[0]].size());
    for (int v : active)
        require(static_cast<int>(adj[v].size()) == r,
                "bipartite_one_factorization: graph is not regular");

    std::vector<int> side(nv, -1);
    for (int s : active) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (side[w] == -1) {
                    side[w] = side[v] ^ 1;
                    stack.push_back(w);
                } else {
                    require(side[w] != side[v],
                            "bipartite_one_factorization: graph is not bipartite");
                }
            }
        }
    }

    // Repeated augmenting-path matching; adjacency shrinks by one perfect
    // matching per round. Left side and neighbour lists are scanned in a
    // fixed order, so the output is deterministic.
    std::vector<char> removed(g.edges.size(), 0);
    std::vector<std::vector<std::pair<int, int>>> inc(nv);  // (neighbour, edge id)
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        inc[a].emplace_back(b, static_cast<int>(e));
        inc[b].emplace_back(a, static_cast<int>(e));
    }

    std::vector<EdgeList> rounds;
    for (int round = 0; round < r; ++round) {
        std::vector<int> match(nv, -1);   // partner
        std::vector<int> via(nv, -1);     // edge id used by the match at a right vertex
        std::vector<char> visited(nv, 0);

        std::function<bool(int)> augment = [&](int left) -> bool {
            for (auto [w, e] : inc[left]) {
                if (removed[e] || visited[w]) continue;
                visited[w] = 1;
                if (match[w] == -1 || augment(match[w])) {
                    match[w] = left;
                    match[left] = w;
                    via[w] = e;
                    return true;
                }
            }
            return false;
        };

        for (int v : active) {
            if (side[v] != 0 || match[v] != -1) continue;
            std::fill(visited.begin(), visited.end(), 0);
            require(augment(v), "bipartite_one_factorization: no perfect matching left");
        }

        EdgeList matched;
        for (int v : active) {
            if (side[v] != 1) continue;
            require(match[v] != -1, "bipartite_one_factorization: right vertex unmatched");
            removed[via[v]] = 1;
            auto [a, b] = g.edges[via[v]];
            matched.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(matched.begin(), matched.end());
        rounds.push_back(std::move(matched));
    }
    return rounds;
}

std::vector<PerfectMatching> round_robin_factorization(int n_pairs) {
    require(n_pairs >= 1, "round_robin_factorization: n must be >= 1");
    int nv = 2 * n_pairs;
    int mod = nv - 1;
    std::vector<PerfectMatching> out;
    for (int r = 0; r < mod; ++r) {
        EdgeList edges;
        edges.emplace_back(std::min(r, nv - 1), std::max(r, nv - 1));
        for (int x = 0; x < mod; ++x) {
            if (x == r) continue;
            int y = ((2 * r - x) % mod + mod) % mod;
            if (x < y) edges.emplace_back(x, y);
        }
        out.push_back(PerfectMatching::from_edges(n_pairs, edges));
    }
    return out;
}

EdgeColoring construct_round_robin(int n_pairs) {
    std::vector<PerfectMatching> ms = round_robin_factorization(n_pairs);
    std::vector<int> labels(ms.size(), 0);
    return factorization_to_coloring(
        LabeledFactorization(PairedOrdering::identity(n_pairs), std::move(ms), std::move(labels)));
}

LabeledFactorization construct_pn_konig(int n_pairs) {
    PnFamily fam = pn_factorization(n_pairs);
    std::vector<PerfectMatching> ms;
    std::vector<int> labels;
    for (int i = 1; i <= n_pairs - 1; ++i) {
        ms.push_back(fam.p[i]);
        labels.push_back(i);
    }
    ms.push_back(fam.p[0]);
    labels.push_back(0);
    AdjGraph cross{2 * n_pairs, build_k2_times_kn(n_pairs)};
    for (EdgeList& round : bipartite_one_factorization(cross)) {
        ms.push_back(PerfectMatching::from_edges(n_pairs, round));
        labels.push_back(0);
    }
    return LabeledFactorization(PairedOrdering::identity(n_pairs), std::move(ms),
                                std::move(labels));
}

LabeledFactorization construct_three_five(int n_pairs) {
    require(n_pairs >= 2, "construct_three_five: n must be >= 2");
    int n = n_pairs;
    int h = n / 2;
    PnFamily fam = pn_factorization(n);

    std::vector<PerfectMatching> ms;
    std::vector<int> labels;
    for (int i = 1; i <= n - 1; ++i) {
        ms.push_back(fam.p[i]);
        labels.push_back(i);
    }

    // Halve the cross graph at pair h and factorize both sides.
    EdgeList cross = build_k2_times_kn(n);
    EdgeList left_edges, right_edges;
    for (auto [a, b] : cross) {
        int pa = a / 2 + 1, pb = b / 2 + 1;
        if (pa <= h && pb <= h)
            left_edges.emplace_back(a, b);
        else if (pa > h && pb > h)
            right_edges.emplace_back(a, b);
    }
    std::vector<EdgeList> f_left = bipartite_one_factorization({2 * n, left_edges});
    std::vector<EdgeList> f_right = bipartite_one_factorization({2 * n, right_edges});
    ensure(static_cast<int>(f_left.size()) == h - 1,
           "construct_three_five: left half has wrong matching count");
    ensure(static_cast<int>(f_right.size()) == n - h - 1,
           "construct_three_five: right half has wrong matching count");

    EdgeList joined_all;
    for (int i = 0; i < h - 1; ++i) {
        EdgeList join = f_left[i];
        join.insert(join.end(), f_right[i].begin(), f_right[i].end());
        joined_all.insert(joined_all.end(), join.begin(), join.end());
        ms.push_back(PerfectMatching::from_edges(n, join));
        labels.push_back(h);
    }

    ms.push_back(fam.p[0]);
    labels.push_back(0);

    std::sort(joined_all.begin(), joined_all.end());
    EdgeList residual;
    std::set_difference(cross.begin(), cross.end(), joined_all.begin(), joined_all.end(),
                        std::back_inserter(residual));
    std::vector<EdgeList> f_free = bipartite_one_factorization({2 * n, residual});
    ensure(static_cast<int>(f_free.size()) == n - h,
           "construct_three_five: residual has wrong matching count");
    for (EdgeList& round : f_free) {
        ms.push_back(PerfectMatching::from_edges(n, round));
        labels.push_back(0);
    }

    return LabeledFactorization(PairedOrdering::identity(n), std::move(ms), std::move(labels));
}

EdgeProjection::EdgeProjection(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw std::invalid_argument("EdgeProjection: m, n must be >= 1");
}

EdgeProjection::Image EdgeProjection::project(VertexPair e) const {
    auto [x, y] = e;
    int nv = 2 * m_ * n_;
    if (x < 0 || y < 0 || x >= nv || y >= nv || x == y)
        throw std::invalid_argument("EdgeProjection: invalid edge");
    int rx = role_of(x), ry = role_of(y);
    Image img;
    if (rx == ry) {
        img.tilde = true;
        int side = rx % 2;
        int a = 2 * (copy_of(x) - 1) + side;
        int b = 2 * (copy_of(y) - 1) + side;
        img.edge = {std::min(a, b), std::max(a, b)};
    } else {
        img.tilde = false;
        img.edge = {std::min(rx, ry), std::max(rx, ry)};
    }
    return img;
}

LabeledFactorization construct_composite(const LabeledFactorization& fm_in,
                                         const LabeledFactorization& fn_in) {
    LabeledFactorization fm = fm_in.normalized();
    LabeledFactorization fn = fn_in.normalized();
    int m = fm.n(), n = fn.n(), N = m * n;
    const PairedOrdering& ord_n = fn.ordering();
    EdgeProjection proj(m, n);

    std::vector<int> splitted_idx, free_idx;
    for (int idx = 0; idx < fn.size(); ++idx)
        (fn.label(idx) > 0 ? splitted_idx : free_idx).push_back(idx);
    ensure(!free_idx.empty(), "construct_composite: inner factorization has no free matching");

    // 1-factorization of K_2 [] K_{2m}: the "tower" pattern. Column c of
    // the tower is copy interval c; cell k spans columns 2k-1 (left) and
    // 2k (right).
    PnFamily tower = pn_factorization(2 * m);
    auto cell_of = [](int c) { return (c + 1) / 2; };

    std::vector<PerfectMatching> out;
    std::vector<int> out_labels;

    // Family 1: each splitted matching of the inner factorization times
    // each odd tower matching. Vertical tower edges place one part of the
    // matching into their cell; horizontal ones (same-parity columns)
    // place both preimages of a part across two cells.
    for (int idx : splitted_idx) {
        const PerfectMatching& ni = fn.matching(idx);
        int r = fn.label(idx);
        SplitParts parts = split_parts(ni, r, ord_n);
        ensure(parts.crossing.empty(), "construct_composite: labeled matching crosses");
        for (int j = 0; j <= m - 1; ++j) {
            EdgeList f;
            for (auto [e1, e2] : tower.p[2 * j + 1].edges()) {
                int c1 = e1 / 2 + 1, y1 = e1 % 2;
                int c2 = e2 / 2 + 1, y2 = e2 % 2;
                if (c1 == c2) {
                    const EdgeList& part = (c1 % 2 == 1) ? parts.left : parts.right;
                    int k = cell_of(c1);
                    for (auto [a, b] : part) f.emplace_back(proj.lift(a, k), proj.lift(b, k));
                } else {
                    ensure(y1 == y2, "construct_composite: slanted tower edge");
                    if (y1 == 1) continue;  // v-side mirrors the u-side column pairing
                    ensure(c1 % 2 == c2 % 2,
                           "construct_composite: odd tower matching joins mixed columns");
                    const EdgeList& part = (c1 % 2 == 1) ? parts.left : parts.right;
                    int k = cell_of(c1), l = cell_of(c2);
                    for (auto [a, b] : part) {
                        f.emplace_back(proj.lift(a, k), proj.lift(b, l));
                        f.emplace_back(proj.lift(b, k), proj.lift(a, l));
                    }
                }
            }
            ensure(static_cast<int>(f.size()) == N,
                   "construct_composite: family-1 piece has wrong cardinality");
            out.push_back(PerfectMatching::from_edges(N, f));
            out_labels.push_back(j * n + r);
        }
    }

    // Family 2: each remaining free inner matching (beyond the first)
    // times each even tower matching, which is horizontal with
    // opposite-parity columns: a within-cell edge embeds the matching in
    // its cell, a cross-cell pair contributes both preimages once.
    for (size_t fi = 1; fi < free_idx.size(); ++fi) {
        EdgeList n_edges = fn.matching(free_idx[fi]).edges();
        for (int j = 0; j <= m - 1; ++j) {
            EdgeList f;
            for (auto [e1, e2] : tower.p[2 * j].edges()) {
                int c1 = e1 / 2 + 1, y1 = e1 % 2;
                int c2 = e2 / 2 + 1, y2 = e2 % 2;
                ensure(c1 != c2 && y1 == y2,
                       "construct_composite: even tower matching must be horizontal");
                if (y1 == 1) continue;
                ensure(c1 % 2 != c2 % 2,
                       "construct_composite: even tower matching joins same-parity columns");
                if (c1 % 2 == 0) continue;  // companion edge of a cross-cell pair
                int k = cell_of(c1), l = cell_of(c2);
                if (k == l) {
                    for (auto [a, b] : n_edges)
                        f.emplace_back(proj.lift(a, k), proj.lift(b, k));
                } else {
                    for (auto [a, b] : n_edges) {
                        f.emplace_back(proj.lift(a, k), proj.lift(b, l));
                        f.emplace_back(proj.lift(b, k), proj.lift(a, l));
                    }
                }
            }
            ensure(static_cast<int>(f.size()) == N,
                   "construct_composite: family-2 piece has wrong cardinality");
            out.push_back(PerfectMatching::from_edges(N, f));
            out_labels.push_back(j == 0 ? 0 : j * n);
        }
    }

    // Family 3: the first free inner matching spans n disjoint K_{2m}
    // blocks (one per edge, across the m copies); color each block by the
    // outer factorization.
    EdgeList n1_edges = fn.matching(free_idx[0]).edges();
    for (int midx = 0; midx < fm.size(); ++midx) {
        EdgeList f;
        for (auto [a, b] : n1_edges) {
            // a takes the u-role of the block, b the v-role
            for (auto [e1, e2] : fm.matching(midx).edges()) {
                int p = e1 / 2 + 1, y1 = e1 % 2;
                int q = e2 / 2 + 1, y2 = e2 % 2;
                f.emplace_back(proj.lift(y1 == 0 ? a : b, p), proj.lift(y2 == 0 ? a : b, q));
            }
        }
        ensure(static_cast<int>(f.size()) == N,
               "construct_composite: family-3 piece has wrong cardinality");
        out.push_back(PerfectMatching::from_edges(N, f));
        out_labels.push_back(fm.label(midx) > 0 ? fm.label(midx) * n : 0);
    }

    LabeledFactorization result(PairedOrdering::identity(N), std::move(out),
                                std::move(out_labels));
    int want = fm.labeled_count() + fn.labeled_count() + 2 * (m - 1) * (n - 1);
    ensure(result.labeled_count() == want, "construct_composite: label count mismatch");
    return result;
}

EdgeColoring reverse_coloring(const EdgeColoring& c) {
    LabeledFactorization f = coloring_to_factorization(c);
    int n = f.n();
    std::vector<int> labels;
    labels.reserve(f.size());
    for (int idx = 0; idx < f.size(); ++idx)
        labels.push_back(f.label(idx) == 0 ? 0 : n - f.label(idx));
    LabeledFactorization rev(f.ordering().reversed(), f.matchings(), std::move(labels));
    return factorization_to_coloring(rev);
}

EdgeColoring drop_color(const EdgeColoring& c, int i) {
    LabeledFactorization f = coloring_to_factorization(c);
    require(i >= 1 && i <= f.n() - 1, "drop_color: split index out of range");
    int last = -1;
    for (int idx = 0; idx < f.size(); ++idx)
        if (f.label(idx) == i) last = idx;
    require(last != -1, "drop_color: no matching carries label " + std::to_string(i));

    std::vector<PerfectMatching> ms;
    std::vector<int> labels;
    for (int idx = 0; idx < f.size(); ++idx) {
        if (idx == last) continue;
        ms.push_back(f.matching(idx));
        labels.push_back(f.label(idx));
    }
    ms.push_back(f.matching(last));  // demoted to the last free matching
    labels.push_back(0);
    return factorization_to_coloring(LabeledFactorization(f.ordering(), std::move(ms),
                                                          std::move(labels)));
}

}  // namespace intercol
