#pragma once

#include "intercol/equivalence.hpp"

namespace intercol {

// Factorization of K_2 [] K_n into n perfect matchings of K_{2n}
// (identity ordering): P_0 pairs column j with column n+1-j; for
// i in [1, n-1], P_i pairs columns j and i+1-j on the left of the
// boundary after pair i, and columns i+j and n+1-j on the right, with a
// vertical edge closing each odd-sized block. P_i is i-splitted.
struct PnFamily {
    int n = 0;
    std::vector<PerfectMatching> p;  // p[i] = P_i, i = 0..n-1
};

PnFamily pn_factorization(int n_pairs);

// Plain undirected graph on vertex ids [0, vertex_count); vertices of
// degree zero are treated as absent.
struct AdjGraph {
    int vertex_count = 0;
    EdgeList edges;
};

// Splits an r-regular bipartite graph into r perfect matchings
// (repeated augmenting-path maximum matching, deterministic scan order).
// Throws invalid_argument when the graph is not bipartite or not regular.
std::vector<EdgeList> bipartite_one_factorization(const AdjGraph& g);

// Circle-method 1-factorization of K_{2n}: 2n-1 matchings, all free.
std::vector<PerfectMatching> round_robin_factorization(int n_pairs);

// Zero-shift interval (2n-1)-coloring from the round-robin factorization.
EdgeColoring construct_round_robin(int n_pairs);

// P_1..P_{n-1} labeled with their split index, P_0 free, plus the n-1
// matchings of the bipartite complement K_2 x K_n, free. Total of colors
// 3n-2.
LabeledFactorization construct_pn_konig(int n_pairs);

// The floor(1.5n)-2 label construction: split K_2 x K_n at pair
// floor(n/2), factorize both halves, join floor(n/2)-1 matching pairs
// across the boundary, keep the rest free. Together with the P family
// this colors K_{2n} with floor(3.5n)-3 colors. Requires n >= 2.
LabeledFactorization construct_three_five(int n_pairs);

// Product construction: from labeled factorizations of K_{2m} and K_{2n}
// builds one of K_{2mn} with sigma_m + sigma_n + 2(m-1)(n-1) labels,
// where sigma_m, sigma_n are the input label counts. Every piece is
// recomputed and checked; cardinality or cover violations throw.
LabeledFactorization construct_composite(const LabeledFactorization& fm,
                                         const LabeledFactorization& fn);

// Mirror transformation: reverses the pair order, so the shift vector
// reads backwards; t is unchanged.
EdgeColoring reverse_coloring(const EdgeColoring& c);

// Frees the last matching labeled i, lowering b_i by one and t by one.
// Requires b_i >= 1.
EdgeColoring drop_color(const EdgeColoring& c, int i);

// Classifier for the edges of K_{2mn} viewed as m vertex-disjoint copies
// of K_{2n} stacked side by side (copy p occupies pairs
// [(p-1)n+1, pn]). An edge joining two distinct K_{2n} roles projects to
// that edge of K_{2n} (bar image); an edge joining two copies of the same
// role projects to a same-side horizontal edge of K_{2m} (tilde image).
class EdgeProjection {
public:
    EdgeProjection(int m, int n);

    struct Image {
        bool tilde = false;  // false: bar image in K_{2n}; true: tilde image in K_{2m}
        VertexPair edge{-1, -1};
    };

    int m() const { return m_; }
    int n() const { return n_; }

    // Decomposes a K_{2mn} vertex id into (role in K_{2n}, copy in [1, m]).
    int role_of(int gid) const { return gid % (2 * n_); }
    int copy_of(int gid) const { return gid / (2 * n_) + 1; }
    // Inverse: the K_{2mn} id of a K_{2n} role placed in a copy.
    int lift(int role, int copy) const { return role + 2 * n_ * (copy - 1); }

    Image project(VertexPair e) const;

private:
    int m_;
    int n_;
};

}  // namespace intercol
