#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <graphlabel/graph.hpp>

namespace graphlabel {
namespace gen {

    // d-dimensional hypercube: vertices are bitmasks, edges differ in one bit.
    Graph hypercube(int d);

    // w x h grid, 4-neighbor.
    Graph grid(int w, int h);

    // w x h grid with diagonals (strong product of two paths).
    Graph king_grid(int w, int h);

    // 3-dimensional grid (Cartesian product of three paths).
    Graph grid3(int w, int h, int d);

    Graph path(int n);

    Graph complete(int n);

    Graph cycle(int n);

    // Petersen graph: standard 10-vertex, girth-5 instance used in audits.
    Graph petersen();

    // Uniform random attachment tree: vertex i > 0 picks a parent in [0, i).
    Graph random_tree(int n, std::uint64_t seed);

    // Left side a, right side b; every left vertex picks deg distinct right
    // neighbors uniformly.
    Graph random_bipartite(int a, int b, int deg, std::uint64_t seed);

    // Erdos-Renyi G(n, p).
    Graph gnp(int n, double p, std::uint64_t seed);

    // Spanning subgraph keeping each edge independently with probability p.
    Graph random_subgraph(const Graph & g, double p, std::uint64_t seed);

    // Induced subgraph of the d-dimensional hypercube on the given bitmasks,
    // reindexed 0..|masks|-1 in the given order.
    Graph induced_subhypercube(int d, const std::vector<std::uint32_t> & masks);

    // k-dimensional subcube of the d-cube: d-k coordinates fixed at random.
    Graph random_subcube(int d, int k, std::uint64_t seed);

    // Random induced subgraph of the d-cube keeping each vertex with
    // probability p.
    Graph random_induced_subhypercube(int d, double p, std::uint64_t seed);

    // Parses colon-separated generator specs, e.g. "hypercube:4",
    // "grid:30:30", "king:3:3", "grid3:4:4:4", "path:10", "tree:100:7",
    // "bipartite:10:10:3:7", "gnp:100:0.05:7", "complete:5", "cycle:6",
    // "petersen", "subcube:8:4:7", "qnp:8:0.3:7". Specs that transform an
    // existing graph ("subgraph:<p>:<seed>", "subdivide:<k>",
    // "gadget:<ell>") require base != nullptr.
    Graph from_spec(const std::string & spec, const Graph * base = nullptr);

} // namespace gen
} // namespace graphlabel
