#pragma once

#include <cstdint>
#include <vector>

#include <graphlabel/eqlabel.hpp>
#include <graphlabel/graph.hpp>

namespace graphlabel {

// Weak reachability under a vertex order: v is weakly k-reachable from x if
// some path of length <= k from x to v has v as its order-minimum. reach[x]
// lists, per rank k = 1..r, the vertices whose least such k is exactly k; x
// itself always has rank 0 and is tracked implicitly. wcol counts x itself
// plus all reached vertices, maximized over x.
struct WcolResult {
    int r = 0;
    std::vector<int> position; // position[v] = rank of v in the order
    std::vector<std::vector<std::vector<Vertex>>> reach; // reach[x][k-1] = S_k(x)
    int wcol = 0;

    int reach_count(Vertex x) const; // 1 + sum over ranks
};

WcolResult compute_wcol(const Graph & g, const std::vector<Vertex> & order, int r);

enum class OrderStrategy {
    Degeneracy, // reverse peeling order: densest core first
    BfsDepth,   // nondecreasing distance from the root (per component)
    ExactTiny,  // brute force over all n! orders, minimizing wcol_r; n <= 9
};

std::vector<Vertex> choose_order(const Graph & g, OrderStrategy strategy, int r = 0, Vertex root = 0);

// Exact distance-threshold labels: the label of x stores its rank classes
// S_0(x)={x}, S_1(x), ..., S_r(x) as code parts; two vertices are within
// distance r iff some rank-i set of one meets some rank-j set of the other
// with i+j <= r (the order-minimum of a shortest path witnesses it).
LabelScheme build_distance_labels(const Graph & g, int r, const std::vector<Vertex> & order);

// Per-vertex window assignment of the BFS-layered scheme: windows of 2r
// consecutive layers at stride r, so every vertex lies in at most two windows
// and every path of length <= r stays inside one.
struct LayeredScheme {
    int r = 0;
    std::vector<int> layer_of;
    std::vector<std::vector<int>> windows_of; // vertex -> window indices (<= 2)
    int window_count = 0;
    std::vector<WcolResult> window_wcol;      // indexed by window, on the induced subgraph
    std::vector<std::vector<Vertex>> window_vertices;
};

LayeredScheme build_layered_scheme(const Graph & g, int r);

// Labels from the layered scheme: per window a block of r+1 rank parts, each
// part prefixed with the window id; ranks come from a degeneracy order of the
// window's induced subgraph, codes are global vertex names. Exact for
// dist <= r on any graph (components are layered from their first vertex).
LabelScheme build_layered_labels(const Graph & g, int r);

// Closed-form weak coloring number bounds for r >= 0.
std::int64_t wcol_upper_bound_planar(int r);
std::int64_t wcol_upper_bound_minor_free(int t, int r); // K_t-minor-free, t >= 3

} // namespace graphlabel
