#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphlabel {

using Vertex = int;

// Distance value standing for "no path".
constexpr int inf_dist = std::numeric_limits<int>::max();

// Immutable undirected simple graph. Vertex ids are 0..n-1; construction
// rejects self-loops, duplicate edges and out-of-range endpoints. Optional
// roles tag special vertices in derived constructions ("branch", "root:v").
// Safe to share across threads once built.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list);
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list, std::map<Vertex, std::string> roles);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to u < v and sorted lexicographically.
    const std::vector<std::pair<Vertex, Vertex>> & edges() const { return edges_; }

    // Sorted neighbor list.
    const std::vector<Vertex> & neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    int min_degree() const;

    bool has_edge(Vertex u, Vertex v) const;

    const std::map<Vertex, std::string> & roles() const { return roles_; }

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::map<Vertex, std::string> roles_;
};

// Exact shortest-path distances from one source (inf_dist when unreachable).
struct DistRow {
    Vertex source = 0;
    std::vector<int> dist;
};

DistRow bfs_distances(const Graph & g, Vertex src);

// dist[u][v] for all pairs, by repeated BFS.
std::vector<std::vector<int>> all_pairs_distances(const Graph & g);

// Length of a shortest cycle; inf_dist for forests.
int girth(const Graph & g);

struct DegeneracyResult {
    std::vector<Vertex> order; // removal order: min-degree vertex first
    int degeneracy = 0;        // max degree at removal time
    // out_neighbors[v] = neighbors of v removed after v; size <= degeneracy.
    std::vector<std::vector<Vertex>> out_neighbors;
};

DegeneracyResult degeneracy_order(const Graph & g);

// Connected components; returns component id per vertex and component count.
std::pair<std::vector<int>, int> components(const Graph & g);

// Replaces every edge by a path with k internal vertices. Original vertices
// keep their ids and are tagged "branch"; internal vertices are appended in
// edge order. Distances between branch vertices scale by exactly k+1.
Graph k_subdivide(const Graph & g, int k);

// Builds the bounded-degree gadget: one balanced binary tree per vertex with
// a leaf per neighbor, and for every edge uv a path joining the leaf of u's
// tree indexed by v to the leaf of v's tree indexed by u, sized so the two
// tree roots end up at distance exactly ell. Roots take ids 0..n-1 and are
// tagged "root:<v>". Output max degree is 3. Throws when ell is too small to
// realize the exact root distance for some edge.
Graph binary_tree_gadget(const Graph & g, int ell);

// Root ids of a gadget, recovered from the role map: result[v] = id of the
// root of v's tree.
std::vector<Vertex> gadget_roots(const Graph & gadget);

// Smallest ell accepted by binary_tree_gadget for this graph.
int gadget_min_ell(const Graph & g);

} // namespace graphlabel
