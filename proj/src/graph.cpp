#include <graphlabel/graph.hpp>

#include <graphlabel/bits.hpp>
#include <graphlabel/error.hpp>

#include <algorithm>
#include <queue>
#include <set>

namespace graphlabel {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list)
    : Graph(n, std::move(edge_list), {})
{
}

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list, std::map<Vertex, std::string> roles)
    : n_(n), edges_(std::move(edge_list)), roles_(std::move(roles))
{
    if (n < 0)
        throw Error("negative vertex count");
    for (auto & [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error("edge endpoint out of range");
        if (u == v)
            throw Error("self-loop rejected");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge rejected");
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto & nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
    for (auto & [v, role] : roles_)
        if (v < 0 || v >= n_)
            throw Error("role vertex out of range: " + role);
}

int Graph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const
{
    if (n_ == 0)
        return 0;
    int best = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto & nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DistRow bfs_distances(const Graph & g, Vertex src)
{
    if (src < 0 || src >= g.vertex_count())
        throw Error("bfs source out of range");
    DistRow row;
    row.source = src;
    row.dist.assign(g.vertex_count(), inf_dist);
    row.dist[src] = 0;
    std::queue<Vertex> queue;
    queue.push(src);
    while (! queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex v : g.neighbors(u)) {
            if (row.dist[v] == inf_dist) {
                row.dist[v] = row.dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return row;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph & g)
{
    std::vector<std::vector<int>> result;
    result.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        result.push_back(bfs_distances(g, v).dist);
    return result;
}

int girth(const Graph & g)
{
    // BFS from every root; for each non-tree edge with both endpoints
    // reached, d(a)+d(b)+1 closes a cycle through the root. The minimum over
    // all roots and edges is exact for unweighted graphs.
    int best = inf_dist;
    const int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), inf_dist);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            if (2 * dist[u] >= best - 1)
                continue;
            for (Vertex v : g.neighbors(u)) {
                if (dist[v] == inf_dist) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                }
            }
        }
        for (auto [a, b] : g.edges()) {
            if (dist[a] == inf_dist || dist[b] == inf_dist)
                continue;
            if (parent[a] == b || parent[b] == a)
                continue;
            long cycle = static_cast<long>(dist[a]) + dist[b] + 1;
            if (cycle < best)
                best = static_cast<int>(cycle);
        }
    }
    return best;
}

DegeneracyResult degeneracy_order(const Graph & g)
{
    const int n = g.vertex_count();
    DegeneracyResult result;
    result.out_neighbors.assign(n, {});
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> live;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        live.insert({deg[v], v});
    }
    std::vector<char> removed(n, 0);
    while (! live.empty()) {
        auto [d, v] = *live.begin();
        live.erase(live.begin());
        removed[v] = 1;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, d);
        for (Vertex u : g.neighbors(v)) {
            if (removed[u])
                continue;
            result.out_neighbors[v].push_back(u);
            live.erase({deg[u], u});
            --deg[u];
            live.insert({deg[u], u});
        }
    }
    return result;
}

std::pair<std::vector<int>, int> components(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (comp[v] != -1)
            continue;
        comp[v] = count;
        std::queue<Vertex> queue;
        queue.push(v);
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u)) {
                if (comp[w] == -1) {
                    comp[w] = count;
                    queue.push(w);
                }
            }
        }
        ++count;
    }
    return {comp, count};
}

Graph k_subdivide(const Graph & g, int k)
{
    if (k < 0)
        throw Error("subdivision count must be nonnegative");
    const int n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * (k + 1));
    int next = n;
    for (auto [u, v] : g.edges()) {
        if (k == 0) {
            edges.emplace_back(u, v);
            continue;
        }
        Vertex prev = u;
        for (int i = 0; i < k; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    std::map<Vertex, std::string> roles;
    for (Vertex v = 0; v < n; ++v)
        roles[v] = "branch";
    return Graph(next, std::move(edges), std::move(roles));
}

namespace {
    // Balanced binary tree shape with the given number of leaves; leaf depths
    // are ceil(log2(leaves)) or one less. Nodes are local indices, root = 0.
    struct TreeShape {
        std::vector<std::pair<int, int>> edges; // parent, child (local ids)
        std::vector<int> leaves;                // local ids, left-to-right
        std::vector<int> leaf_depth;
        int node_count = 0;
    };

    void split_leaves(TreeShape & shape, int node, int count, int depth)
    {
        if (count == 1) {
            shape.leaves.push_back(node);
            shape.leaf_depth.push_back(depth);
            return;
        }
        int left = shape.node_count++;
        shape.edges.emplace_back(node, left);
        split_leaves(shape, left, (count + 1) / 2, depth + 1);
        int right = shape.node_count++;
        shape.edges.emplace_back(node, right);
        split_leaves(shape, right, count / 2, depth + 1);
    }

    TreeShape tree_shape(int leaves)
    {
        TreeShape shape;
        shape.node_count = 1;
        split_leaves(shape, 0, leaves, 0);
        return shape;
    }
}

int gadget_min_ell(const Graph & g)
{
    int need = 2 * ceil_log2(std::max(1, g.vertex_count())) + 1;
    std::vector<TreeShape> shapes(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            shapes[v] = tree_shape(g.degree(v));
    auto leaf_depth = [&](Vertex v, Vertex nbr) {
        const auto & nbrs = g.neighbors(v);
        int idx = static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), nbr) - nbrs.begin());
        return shapes[v].leaf_depth[idx];
    };
    for (auto [u, v] : g.edges())
        need = std::max(need, leaf_depth(u, v) + leaf_depth(v, u) + 1);
    return need;
}

Graph binary_tree_gadget(const Graph & g, int ell)
{
    const int n = g.vertex_count();
    if (g.min_degree() == 0)
        throw Error("gadget requires no isolated vertices");
    const int floor_ell = 2 * ceil_log2(n) + 1;
    if (ell < floor_ell)
        throw Error("ell too small: need at least " + std::to_string(floor_ell));

    // Ids: roots 0..n-1; remaining tree nodes per vertex in vertex order;
    // connector path vertices in edge order.
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<TreeShape> shapes(n);
    std::vector<std::vector<Vertex>> leaf_id(n);
    int next = n;
    for (Vertex v = 0; v < n; ++v) {
        shapes[v] = tree_shape(g.degree(v));
        const auto & shape = shapes[v];
        std::vector<Vertex> global(shape.node_count);
        global[0] = v;
        for (int local = 1; local < shape.node_count; ++local)
            global[local] = next++;
        for (auto [p, c] : shape.edges)
            edges.emplace_back(global[p], global[c]);
        leaf_id[v].resize(shape.leaves.size());
        for (std::size_t i = 0; i < shape.leaves.size(); ++i)
            leaf_id[v][i] = global[shape.leaves[i]];
    }

    auto leaf_index = [&](Vertex v, Vertex nbr) {
        const auto & nbrs = g.neighbors(v);
        return static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), nbr) - nbrs.begin());
    };

    int min_ell = floor_ell;
    for (auto [u, v] : g.edges()) {
        int du = shapes[u].leaf_depth[leaf_index(u, v)];
        int dv = shapes[v].leaf_depth[leaf_index(v, u)];
        min_ell = std::max(min_ell, du + dv + 1);
    }
    if (ell < min_ell)
        throw Error("ell too small: need at least " + std::to_string(min_ell));

    for (auto [u, v] : g.edges()) {
        int iu = leaf_index(u, v), iv = leaf_index(v, u);
        int path_len = ell - shapes[u].leaf_depth[iu] - shapes[v].leaf_depth[iv];
        Vertex prev = leaf_id[u][iu];
        for (int i = 0; i + 1 < path_len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, leaf_id[v][iv]);
    }

    std::map<Vertex, std::string> roles;
    for (Vertex v = 0; v < n; ++v)
        roles[v] = "root:" + std::to_string(v);
    return Graph(next, std::move(edges), std::move(roles));
}

std::vector<Vertex> gadget_roots(const Graph & gadget)
{
    std::vector<Vertex> roots;
    for (const auto & [node, role] : gadget.roles()) {
        if (role.rfind("root:", 0) == 0) {
            std::size_t original = std::stoul(role.substr(5));
            if (roots.size() <= original)
                roots.resize(original + 1, -1);
            roots[original] = node;
        }
    }
    return roots;
}

} // namespace graphlabel
