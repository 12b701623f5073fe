#pragma once

#include <string>
#include <vector>

#include <graphlabel/eqlabel.hpp>
#include <graphlabel/graph.hpp>

namespace graphlabel {

// Exact disjunctive adjacency labels from the degeneracy orientation: the
// label of x is the single part (- | x, out-neighbors of x), so each vertex
// carries at most degeneracy+1 codes, and x ~ y iff one of them lists the
// other.
LabelScheme build_adjacency_labels(const Graph & g);

// lower <= arboricity <= upper. The lower bound is the Nash-Williams density
// ceil(m'/(n'-1)) maximized over the suffix subgraphs of the degeneracy
// peeling; the upper bound is the degeneracy itself (each out-neighbor slot
// of the orientation spans a forest, and degeneracy is within factor 2 of
// arboricity).
struct ArboricityBounds {
    int lower = 0;
    int upper = 0;
};

ArboricityBounds arboricity_bounds(const Graph & g);

// Bounded-depth colored tree whose leaves are the graph's vertices and whose
// truth table over (color(u), color(v), color(lca)) determines adjacency.
// Supplied as input (typically JSON), never computed from a graph.
class ConnectionModel {
public:
    int depth = 0;  // every leaf sits at exactly this depth
    int colors = 0; // colors are 0..colors-1
    std::vector<int> parent;     // per node; -1 at the root
    std::vector<int> color;      // per node
    std::vector<int> leaf_of;    // graph vertex -> node id, bijective onto leaves
    std::vector<std::uint8_t> phi; // colors^3 truth table, index (a*colors+b)*colors+c

    // Structural checks: single root, consistent depths, leaf bijection,
    // color range, table size. Throws on violation.
    void validate() const;

    int vertex_count() const { return static_cast<int>(leaf_of.size()); }
    int node_count() const { return static_cast<int>(parent.size()); }
    int node_depth(int node) const;
    int lca(int a, int b) const;
    bool adjacent(Vertex u, Vertex v) const;

    // The graph this model denotes.
    Graph induced_graph() const;

    // JSON shape:
    //   {"depth":d, "colors":k,
    //    "nodes":[{"id":0,"parent":-1,"color":2}, ...],
    //    "leaf_of":{"0":5, "1":6, ...},
    //    "phi":[[a,b,c,bit], ...]}   (absent triples default to 0)
    static ConnectionModel from_json_file(const std::string & path);
    void to_json_file(const std::string & path) const;
};

// Checks that the model reproduces g's adjacency on every pair.
void validate_model_against(const ConnectionModel & model, const Graph & g);

// Exact adjacency labels from a connection model: the truth table rides in
// the first part's prefix, then one part per node of the leaf-to-root path
// holding the node's color (prefix) and identity (code). Self-contained per
// vertex; the decoder resolves the lowest common ancestor by scanning for the
// first equal ancestor, starting one level above the leaves.
LabelScheme build_shrubdepth_labels(const ConnectionModel & model);

} // namespace graphlabel
