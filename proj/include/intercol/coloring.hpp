#pragma once

#include <optional>
#include <string>

#include "intercol/graph.hpp"

namespace intercol {

// Edge coloring of K_{2n} with palette [1, t]; colors indexed by edge_index.
// The constructor enforces shape (total map, colors in range); the semantic
// conditions (proper, surjective, contiguous spectra) are verify's job.
class EdgeColoring {
public:
    EdgeColoring(int n_pairs, int t, std::vector<int> colors);

    int n() const { return n_; }
    int t() const { return t_; }
    int vertex_count() const { return 2 * n_; }
    int color(int a, int b) const { return colors_[edge_index(a, b, n_)]; }
    int color_by_index(int idx) const { return colors_.at(idx); }
    const std::vector<int>& colors() const { return colors_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    int n_;
    int t_;
    std::vector<int> colors_;
};

// Set of colors seen at one vertex.
struct Spectrum {
    int lo = 0;
    int hi = -1;                // empty when hi < lo
    std::vector<int> colors;    // ascending, distinct

    int size() const { return static_cast<int>(colors.size()); }
    bool contiguous() const { return hi - lo + 1 == size(); }
    bool contains(int c) const;
};

Spectrum vertex_spectrum(const EdgeColoring& c, int v);

enum class Violation {
    none,
    improper,      // two incident edges share a color
    unused_color,  // some color in [1, t] colors no edge
    gap,           // a vertex spectrum is not contiguous
};

const char* violation_name(Violation v);

struct IntervalReport {
    bool valid = false;
    int t = 0;
    std::vector<Spectrum> spectra;  // per vertex; filled even when invalid

    Violation violation = Violation::none;
    int witness_vertex = -1;             // improper / gap
    VertexPair witness_edge{-1, -1};     // improper: second edge with the clash
    int witness_color = 0;               // improper / unused_color / gap (missing color)
    std::string message;
};

// Checks, in order: properness, surjectivity onto [1, t], contiguity of
// every vertex spectrum. First violation found (vertices ascending, edges
// in canonical order) is reported.
IntervalReport verify_interval(const EdgeColoring& c);

// Rearranges the vertices ascending by smallest incident color, ties by
// vertex id. For a valid coloring, vertices at positions 2k, 2k+1 always
// agree on the smallest color, which makes the result a paired ordering
// with S(u_i) = S(v_i); anything else throws logic_error.
PairedOrdering canonical_ordering(const EdgeColoring& c);

// Differences of smallest incident colors between consecutive pairs of the
// canonical ordering: b_i = S(u_{i+1}) - S(u_i), i = 1..n-1.
struct ShiftVector {
    std::vector<int> b;

    int length() const { return static_cast<int>(b.size()); }
    int total() const;
    // B_0 = 0, B_i = b_1 + ... + b_i; size length()+1.
    std::vector<int> partial_sums() const;
    std::string to_string() const;  // "1,1,3,0,0"; "0" for length 0

    bool operator==(const ShiftVector&) const = default;
};

ShiftVector shift_vector(const EdgeColoring& c);
ShiftVector shift_vector(const EdgeColoring& c, const PairedOrdering& canonical);

// Edges wearing color k; requires k in [1, t].
EdgeList color_class(const EdgeColoring& c, int k);

// Intersection / union of the spectra over a set of vertices.
std::vector<int> spectrum_meet(const EdgeColoring& c, std::span<const int> vertices);
std::vector<int> spectrum_join(const EdgeColoring& c, std::span<const int> vertices);

}  // namespace intercol
