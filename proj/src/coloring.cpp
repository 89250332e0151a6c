#include "intercol/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace intercol {

EdgeColoring::EdgeColoring(int n_pairs, int t, std::vector<int> colors)
    : n_(n_pairs), t_(t), colors_(std::move(colors)) {
    if (n_ < 1) throw std::invalid_argument("EdgeColoring: n must be >= 1");
    if (t_ < 1) throw std::invalid_argument("EdgeColoring: t must be >= 1");
    if (static_cast<int>(colors_.size()) != edge_count(n_))
        throw std::invalid_argument("EdgeColoring: color map must cover every edge exactly once");
    for (int c : colors_)
        if (c < 1 || c > t_)
            throw std::invalid_argument("EdgeColoring: color outside [1, t]");
}

bool Spectrum::contains(int c) const {
    return std::binary_search(colors.begin(), colors.end(), c);
}

Spectrum vertex_spectrum(const EdgeColoring& c, int v) {
    Spectrum s;
    for (int w = 0; w < c.vertex_count(); ++w)
        if (w != v) s.colors.push_back(c.color(v, w));
    std::sort(s.colors.begin(), s.colors.end());
    s.colors.erase(std::unique(s.colors.begin(), s.colors.end()), s.colors.end());
    if (!s.colors.empty()) {
        s.lo = s.colors.front();
        s.hi = s.colors.back();
    }
    return s;
}

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::improper: return "improper";
        case Violation::unused_color: return "unused-color";
        case Violation::gap: return "spectrum-gap";
    }
    return "?";
}

IntervalReport verify_interval(const EdgeColoring& c) {
    IntervalReport rep;
    rep.t = c.t();
    int nv = c.vertex_count();
    rep.spectra.resize(nv);
    for (int v = 0; v < nv; ++v) rep.spectra[v] = vertex_spectrum(c, v);

    // Properness: a vertex of K_{2n} has 2n-1 incident edges, so its
    // spectrum has 2n-1 distinct colors iff no two of them clash.
    for (int v = 0; v < nv; ++v) {
        if (rep.spectra[v].size() == nv - 1) continue;
        std::vector<int> seen(c.t() + 1, -1);
        for (int w = 0; w < nv; ++w) {
            if (w == v) continue;
            int col = c.color(v, w);
            if (seen[col] != -1) {
                rep.violation = Violation::improper;
                rep.witness_vertex = v;
                rep.witness_edge = {std::min(v, w), std::max(v, w)};
                rep.witness_color = col;
                rep.message = "vertex " + std::to_string(v) + " sees color " +
                              std::to_string(col) + " on two edges";
                return rep;
            }
            seen[col] = w;
        }
    }

    std::vector<int> usage(c.t() + 1, 0);
    for (int idx = 0; idx < edge_count(c.n()); ++idx) usage[c.color_by_index(idx)] += 1;
    for (int col = 1; col <= c.t(); ++col) {
        if (usage[col] == 0) {
            rep.violation = Violation::unused_color;
            rep.witness_color = col;
            rep.message = "color " + std::to_string(col) + " is never used";
            return rep;
        }
    }

    for (int v = 0; v < nv; ++v) {
        const Spectrum& s = rep.spectra[v];
        if (!s.contiguous()) {
            rep.violation = Violation::gap;
            rep.witness_vertex = v;
            for (int col = s.lo; col <= s.hi; ++col)
                if (!s.contains(col)) {
                    rep.witness_color = col;
                    break;
                }
            rep.message = "vertex " + std::to_string(v) + " misses color " +
                          std::to_string(rep.witness_color) + " inside its spectrum";
            return rep;
        }
    }

    rep.valid = true;
    return rep;
}

PairedOrdering canonical_ordering(const EdgeColoring& c) {
    int nv = c.vertex_count();
    std::vector<int> smin(nv);
    for (int v = 0; v < nv; ++v) smin[v] = vertex_spectrum(c, v).lo;

    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (smin[a] != smin[b]) return smin[a] < smin[b];
        return a < b;
    });

    for (int k = 0; k + 1 < nv; k += 2)
        if (smin[order[k]] != smin[order[k + 1]])
            throw std::logic_error(
                "canonical_ordering: smallest-color strata do not pair up evenly");

    std::vector<int> pos(nv);
    for (int p = 0; p < nv; ++p) pos[order[p]] = p;
    return PairedOrdering::from_positions(std::move(pos));
}

int ShiftVector::total() const { return std::accumulate(b.begin(), b.end(), 0); }

std::vector<int> ShiftVector::partial_sums() const {
    std::vector<int> sums(b.size() + 1, 0);
    std::partial_sum(b.begin(), b.end(), sums.begin() + 1);
    return sums;
}

std::string ShiftVector::to_string() const {
    if (b.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(b[i]);
    }
    return out;
}

ShiftVector shift_vector(const EdgeColoring& c, const PairedOrdering& ord) {
    ShiftVector sh;
    sh.b.reserve(ord.n() - 1);
    auto smallest = [&](int v) { return vertex_spectrum(c, v).lo; };
    for (int i = 1; i <= ord.n() - 1; ++i)
        sh.b.push_back(smallest(ord.u(i + 1)) - smallest(ord.u(i)));
    return sh;
}

ShiftVector shift_vector(const EdgeColoring& c) {
    return shift_vector(c, canonical_ordering(c));
}

EdgeList color_class(const EdgeColoring& c, int k) {
    if (k < 1 || k > c.t()) throw std::invalid_argument("color_class: color outside [1, t]");
    EdgeList out;
    for (int idx = 0; idx < edge_count(c.n()); ++idx)
        if (c.color_by_index(idx) == k) out.push_back(edge_endpoints(idx, c.n()));
    return out;
}

std::vector<int> spectrum_meet(const EdgeColoring& c, std::span<const int> vertices) {
    std::vector<int> counts(c.t() + 1, 0);
    for (int v : vertices)
        for (int col : vertex_spectrum(c, v).colors) counts[col] += 1;
    std::vector<int> out;
    for (int col = 1; col <= c.t(); ++col)
        if (counts[col] == static_cast<int>(vertices.size())) out.push_back(col);
    return out;
}

std::vector<int> spectrum_join(const EdgeColoring& c, std::span<const int> vertices) {
    std::vector<int> counts(c.t() + 1, 0);
    for (int v : vertices)
        for (int col : vertex_spectrum(c, v).colors) counts[col] += 1;
    std::vector<int> out;
    for (int col = 1; col <= c.t(); ++col)
        if (counts[col] > 0) out.push_back(col);
    return out;
}

}  // namespace intercol
