#include "intercol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace intercol {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int edge_index(int a, int b, int n_pairs) {
    int nv = vertex_count(n_pairs);
    require(n_pairs >= 1, "edge_index: n must be >= 1");
    require(a >= 0 && a < nv && b >= 0 && b < nv, "edge_index: vertex out of range");
    require(a != b, "edge_index: loops are not edges");
    if (a > b) std::swap(a, b);
    // Pairs (a, *) with a fixed occupy a block of size 2n-1-a.
    return a * (2 * nv - a - 1) / 2 + (b - a - 1);
}

VertexPair edge_endpoints(int index, int n_pairs) {
    require(index >= 0 && index < edge_count(n_pairs), "edge_endpoints: index out of range");
    int nv = vertex_count(n_pairs);
    int a = 0;
    while (index >= nv - 1 - a) {
        index -= nv - 1 - a;
        ++a;
    }
    return {a, a + 1 + index};
}

PairedOrdering PairedOrdering::identity(int n_pairs) {
    require(n_pairs >= 1, "PairedOrdering: n must be >= 1");
    std::vector<int> pos(2 * n_pairs);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> vert = pos;
    return PairedOrdering(n_pairs, std::move(pos), std::move(vert));
}

PairedOrdering PairedOrdering::from_positions(std::vector<int> pos) {
    int nv = static_cast<int>(pos.size());
    require(nv >= 2 && nv % 2 == 0, "PairedOrdering: vertex count must be even and positive");
    std::vector<int> vert(nv, -1);
    for (int v = 0; v < nv; ++v) {
        require(pos[v] >= 0 && pos[v] < nv, "PairedOrdering: position out of range");
        require(vert[pos[v]] == -1, "PairedOrdering: positions must be a permutation");
        vert[pos[v]] = v;
    }
    return PairedOrdering(nv / 2, std::move(pos), std::move(vert));
}

PairedOrdering PairedOrdering::reversed() const {
    std::vector<int> pos(pos_.size());
    for (int v = 0; v < vertex_count(); ++v) {
        int pair = pos_[v] / 2;  // 0-based
        int side = pos_[v] % 2;
        pos[v] = 2 * (n_ - 1 - pair) + side;
    }
    return from_positions(std::move(pos));
}

PerfectMatching::PerfectMatching(std::vector<int> partner) : partner_(std::move(partner)) {
    int nv = static_cast<int>(partner_.size());
    require(nv >= 2 && nv % 2 == 0, "PerfectMatching: vertex count must be even and positive");
    for (int v = 0; v < nv; ++v) {
        int w = partner_[v];
        require(w >= 0 && w < nv && w != v, "PerfectMatching: partner out of range or fixed point");
        require(partner_[w] == v, "PerfectMatching: partner map is not an involution");
    }
}

PerfectMatching PerfectMatching::from_edges(int n_pairs, std::span<const VertexPair> edges) {
    int nv = intercol::vertex_count(n_pairs);
    std::vector<int> partner(nv, -1);
    for (auto [a, b] : edges) {
        require(a >= 0 && a < nv && b >= 0 && b < nv && a != b,
                "PerfectMatching: invalid edge");
        require(partner[a] == -1 && partner[b] == -1,
                "PerfectMatching: vertex covered twice");
        partner[a] = b;
        partner[b] = a;
    }
    for (int v = 0; v < nv; ++v)
        require(partner[v] != -1, "PerfectMatching: vertex left uncovered");
    return PerfectMatching(std::move(partner));
}

EdgeList PerfectMatching::edges() const {
    EdgeList out;
    out.reserve(partner_.size() / 2);
    for (int v = 0; v < vertex_count(); ++v)
        if (v < partner_[v]) out.emplace_back(v, partner_[v]);
    return out;
}

SplitParts split_parts(const PerfectMatching& m, int i, const PairedOrdering& ord) {
    require(m.n() == ord.n(), "split_parts: matching and ordering sizes differ");
    require(i >= 1 && i <= ord.n() - 1, "split_parts: boundary out of range");
    SplitParts parts;
    for (auto [a, b] : m.edges()) {
        int lo = std::min(ord.pair_of(a), ord.pair_of(b));
        int hi = std::max(ord.pair_of(a), ord.pair_of(b));
        if (hi <= i)
            parts.left.emplace_back(a, b);
        else if (lo >= i + 1)
            parts.right.emplace_back(a, b);
        else
            parts.crossing.emplace_back(a, b);
    }
    return parts;
}

std::vector<int> split_indices(const PerfectMatching& m, const PairedOrdering& ord) {
    require(m.n() == ord.n(), "split_indices: matching and ordering sizes differ");
    int n = ord.n();
    // Boundary i is crossed by an edge spanning pairs [lo, hi) with lo <= i < hi.
    std::vector<int> crossed(n + 1, 0);
    for (auto [a, b] : m.edges()) {
        int lo = std::min(ord.pair_of(a), ord.pair_of(b));
        int hi = std::max(ord.pair_of(a), ord.pair_of(b));
        if (lo < hi) {
            crossed[lo] += 1;
            crossed[hi] -= 1;
        }
    }
    std::vector<int> out;
    int running = 0;
    for (int i = 1; i <= n - 1; ++i) {
        running += crossed[i];
        if (running == 0) out.push_back(i);
    }
    return out;
}

bool is_splitted_at(const PerfectMatching& m, int i, const PairedOrdering& ord) {
    return split_parts(m, i, ord).crossing.empty();
}

EdgeList build_k2_square_kn(int n_pairs) {
    if (n_pairs < 1) throw std::invalid_argument("build_k2_square_kn: n must be >= 1");
    EdgeList out;
    auto u = [](int i) { return 2 * (i - 1); };
    auto v = [](int i) { return 2 * (i - 1) + 1; };
    for (int i = 1; i <= n_pairs; ++i) {
        out.emplace_back(u(i), v(i));
        for (int j = i + 1; j <= n_pairs; ++j) {
            out.emplace_back(u(i), u(j));
            out.emplace_back(v(i), v(j));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList build_k2_times_kn(int n_pairs) {
    if (n_pairs < 1) throw std::invalid_argument("build_k2_times_kn: n must be >= 1");
    EdgeList out;
    auto u = [](int i) { return 2 * (i - 1); };
    auto v = [](int i) { return 2 * (i - 1) + 1; };
    for (int i = 1; i <= n_pairs; ++i)
        for (int j = 1; j <= n_pairs; ++j)
            if (i != j) {
                int a = u(i), b = v(j);
                if (a < b)
                    out.emplace_back(a, b);
                else
                    out.emplace_back(b, a);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace intercol
