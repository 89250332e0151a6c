#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace intercol {

// Edges of K_{2n} are unordered pairs of vertex ids in [0, 2n).
using VertexPair = std::pair<int, int>;
using EdgeList = std::vector<VertexPair>;

inline int vertex_count(int n_pairs) { return 2 * n_pairs; }
inline int edge_count(int n_pairs) { return n_pairs * (2 * n_pairs - 1); }

// Canonical edge index: lexicographic on the sorted endpoint pair.
// Bijective with [0, n(2n-1)) so colorings can live in flat arrays.
int edge_index(int a, int b, int n_pairs);

// Inverse of edge_index.
VertexPair edge_endpoints(int index, int n_pairs);

// Arrangement of the 2n vertices of K_{2n} into n ordered pairs
// (u_1,v_1, u_2,v_2, ..., u_n,v_n). Pair indices are 1-based, vertex ids
// 0-based. Side 0 is the u-side, side 1 the v-side.
class PairedOrdering {
public:
    static PairedOrdering identity(int n_pairs);

    // pos[v] = position of vertex v in the arrangement; must be a
    // permutation of [0, 2n).
    static PairedOrdering from_positions(std::vector<int> pos);

    int n() const { return n_; }
    int vertex_count() const { return 2 * n_; }

    int position_of(int v) const { return pos_.at(v); }
    int pair_of(int v) const { return pos_.at(v) / 2 + 1; }
    int side_of(int v) const { return pos_.at(v) % 2; }

    int vertex_at(int pair, int side) const { return vert_.at(2 * (pair - 1) + side); }
    int u(int pair) const { return vertex_at(pair, 0); }
    int v(int pair) const { return vertex_at(pair, 1); }

    // Pairs in reverse order, u/v sides kept: (u_n,v_n, ..., u_1,v_1).
    PairedOrdering reversed() const;

    bool operator==(const PairedOrdering&) const = default;

private:
    PairedOrdering(int n, std::vector<int> pos, std::vector<int> vert)
        : n_(n), pos_(std::move(pos)), vert_(std::move(vert)) {}

    int n_ = 0;
    std::vector<int> pos_;   // vertex -> position
    std::vector<int> vert_;  // position -> vertex
};

// Contiguous range of pair indices [lo, hi]; stands for the induced
// subgraph on vertices u_lo,v_lo,...,u_hi,v_hi of some ordering.
struct PairRange {
    int lo = 1;
    int hi = 1;

    int vertex_count() const { return 2 * (hi - lo + 1); }
    bool contains_vertex(int v, const PairedOrdering& ord) const {
        int p = ord.pair_of(v);
        return lo <= p && p <= hi;
    }
    bool contains_edge(int a, int b, const PairedOrdering& ord) const {
        return contains_vertex(a, ord) && contains_vertex(b, ord);
    }
};

// Perfect matching of K_{2n}, stored as the vertex -> partner involution.
class PerfectMatching {
public:
    // partner must be a fixed-point-free involution on [0, 2n).
    explicit PerfectMatching(std::vector<int> partner);

    // edges must cover every vertex of [0, 2n) exactly once.
    static PerfectMatching from_edges(int n_pairs, std::span<const VertexPair> edges);

    int n() const { return static_cast<int>(partner_.size()) / 2; }
    int vertex_count() const { return static_cast<int>(partner_.size()); }
    int partner(int v) const { return partner_.at(v); }
    bool contains(int a, int b) const { return partner_.at(a) == b; }

    // Edges as sorted (a<b) pairs in ascending order.
    EdgeList edges() const;

    bool operator==(const PerfectMatching&) const = default;

private:
    std::vector<int> partner_;
};

struct SplitParts {
    EdgeList left;      // edges inside pairs [1, i]
    EdgeList right;     // edges inside pairs [i+1, n]
    EdgeList crossing;  // edges spanning the boundary
};

// Partition of a matching's edges against the vertical line between
// pair i and pair i+1 of the ordering. Requires 1 <= i <= n-1.
SplitParts split_parts(const PerfectMatching& m, int i, const PairedOrdering& ord);

// All i in [1, n-1] with empty crossing part: the matching is i-splitted.
// May be empty, may contain several indices.
std::vector<int> split_indices(const PerfectMatching& m, const PairedOrdering& ord);

bool is_splitted_at(const PerfectMatching& m, int i, const PairedOrdering& ord);

// Spanning regular subgraphs of K_{2n} under the identity ordering.
// The Cartesian product K_2 [] K_n: both horizontal cliques plus the
// vertical edges u_i v_i; degree n.
EdgeList build_k2_square_kn(int n_pairs);

// The direct product K_2 x K_n: the cross edges u_i v_j, i != j;
// degree n-1, bipartite with parts {u_i} and {v_i}.
EdgeList build_k2_times_kn(int n_pairs);

}  // namespace intercol
