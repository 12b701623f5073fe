#include <graphlabel/smalldist.hpp>

#include <graphlabel/error.hpp>

#include <algorithm>
#include <numeric>
#include <queue>

namespace graphlabel {

int WcolResult::reach_count(Vertex x) const
{
    int total = 1;
    for (const auto & set : reach.at(x))
        total += static_cast<int>(set.size());
    return total;
}

WcolResult compute_wcol(const Graph & g, const std::vector<Vertex> & order, int r)
{
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw Error("order must be a permutation of the vertices");
    WcolResult result;
    result.r = r;
    result.position.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || result.position[order[i]] != -1)
            throw Error("order must be a permutation of the vertices");
        result.position[order[i]] = i;
    }
    result.reach.assign(n, std::vector<std::vector<Vertex>>(r));

    // From each candidate v, BFS up to depth r over vertices ordered >= v:
    // on such paths v is the unique minimum, and the BFS depth of u is the
    // least k with v weakly k-reachable from u.
    std::vector<int> depth(n, -1);
    std::vector<Vertex> frontier, next, touched;
    for (Vertex v : order) {
        depth[v] = 0;
        frontier = {v};
        touched = {v};
        for (int k = 1; k <= r && ! frontier.empty(); ++k) {
            next.clear();
            for (Vertex u : frontier) {
                for (Vertex w : g.neighbors(u)) {
                    if (depth[w] != -1 || result.position[w] < result.position[v])
                        continue;
                    depth[w] = k;
                    result.reach[w][k - 1].push_back(v);
                    next.push_back(w);
                    touched.push_back(w);
                }
            }
            std::swap(frontier, next);
        }
        for (Vertex u : touched)
            depth[u] = -1;
    }
    for (Vertex x = 0; x < n; ++x)
        result.wcol = std::max(result.wcol, result.reach_count(x));
    return result;
}

namespace {

    std::vector<Vertex> degeneracy_wcol_order(const Graph & g)
    {
        auto order = degeneracy_order(g).order;
        std::reverse(order.begin(), order.end());
        return order;
    }

    std::vector<Vertex> bfs_depth_order(const Graph & g, Vertex root)
    {
        const int n = g.vertex_count();
        if (root < 0 || root >= n)
            throw Error("root out of range");
        std::vector<int> depth(n, -1);
        auto relax = [&](Vertex start) {
            depth[start] = 0;
            std::queue<Vertex> queue;
            queue.push(start);
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop();
                for (Vertex w : g.neighbors(u))
                    if (depth[w] == -1) {
                        depth[w] = depth[u] + 1;
                        queue.push(w);
                    }
            }
        };
        relax(root);
        for (Vertex v = 0; v < n; ++v)
            if (depth[v] == -1)
                relax(v);
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return depth[a] < depth[b]; });
        return order;
    }

    int wcol_value_only(const Graph & g, const std::vector<Vertex> & order, int r)
    {
        const int n = g.vertex_count();
        std::vector<int> position(n);
        for (int i = 0; i < n; ++i)
            position[order[i]] = i;
        std::vector<int> count(n, 1);
        std::vector<int> depth(n, -1);
        std::vector<Vertex> frontier, next, touched;
        int best = n > 0 ? 1 : 0;
        for (Vertex v : order) {
            depth[v] = 0;
            frontier = {v};
            touched = {v};
            for (int k = 1; k <= r && ! frontier.empty(); ++k) {
                next.clear();
                for (Vertex u : frontier)
                    for (Vertex w : g.neighbors(u)) {
                        if (depth[w] != -1 || position[w] < position[v])
                            continue;
                        depth[w] = k;
                        best = std::max(best, ++count[w]);
                        next.push_back(w);
                        touched.push_back(w);
                    }
                std::swap(frontier, next);
            }
            for (Vertex u : touched)
                depth[u] = -1;
        }
        return best;
    }

    std::vector<Vertex> exact_tiny_order(const Graph & g, int r)
    {
        const int n = g.vertex_count();
        if (n > 9)
            throw Error("exact order search is limited to 9 vertices");
        std::vector<Vertex> order(n), best_order(n);
        std::iota(order.begin(), order.end(), 0);
        best_order = order;
        int best = wcol_value_only(g, order, r);
        while (std::next_permutation(order.begin(), order.end())) {
            const int value = wcol_value_only(g, order, r);
            if (value < best) {
                best = value;
                best_order = order;
            }
        }
        return best_order;
    }

} // namespace

std::vector<Vertex> choose_order(const Graph & g, OrderStrategy strategy, int r, Vertex root)
{
    switch (strategy) {
    case OrderStrategy::Degeneracy: return degeneracy_wcol_order(g);
    case OrderStrategy::BfsDepth: return bfs_depth_order(g, root);
    case OrderStrategy::ExactTiny: return exact_tiny_order(g, r);
    }
    throw Error("bad order strategy");
}

LabelScheme build_distance_labels(const Graph & g, int r, const std::vector<Vertex> & order)
{
    if (r < 0)
        throw Error("radius must be nonnegative");
    const auto wr = compute_wcol(g, order, r);
    LabelScheme scheme;
    scheme.decoder_id = "or_rank_sum";
    scheme.disjunctive = true;
    scheme.params["r"] = r;
    scheme.labels.resize(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto & label = scheme.labels[x];
        label.parts.resize(r + 1);
        label.parts[0].codes.push_back(static_cast<Code>(x));
        for (int k = 1; k <= r; ++k)
            for (Vertex v : wr.reach[x][k - 1])
                label.parts[k].codes.push_back(static_cast<Code>(v));
    }
    return scheme;
}

LayeredScheme build_layered_scheme(const Graph & g, int r)
{
    if (r < 1)
        throw Error("radius must be at least 1");
    const int n = g.vertex_count();
    LayeredScheme scheme;
    scheme.r = r;

    // BFS layering, one rooted search per component.
    scheme.layer_of.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (scheme.layer_of[v] != -1)
            continue;
        scheme.layer_of[v] = 0;
        std::queue<Vertex> queue;
        queue.push(v);
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u))
                if (scheme.layer_of[w] == -1) {
                    scheme.layer_of[w] = scheme.layer_of[u] + 1;
                    queue.push(w);
                }
        }
    }

    // Window i covers layers [i*r, (i+2)*r).
    scheme.windows_of.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        const int layer = scheme.layer_of[v];
        for (int i = std::max(0, layer / r - 1); i * r <= layer; ++i) {
            if (layer < (i + 2) * r) {
                scheme.windows_of[v].push_back(i);
                scheme.window_count = std::max(scheme.window_count, i + 1);
            }
        }
    }

    scheme.window_vertices.assign(scheme.window_count, {});
    for (Vertex v = 0; v < n; ++v)
        for (int w : scheme.windows_of[v])
            scheme.window_vertices[w].push_back(v);

    scheme.window_wcol.reserve(scheme.window_count);
    for (int w = 0; w < scheme.window_count; ++w) {
        const auto & verts = scheme.window_vertices[w];
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            local[verts[i]] = static_cast<int>(i);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto [a, b] : g.edges())
            if (local[a] != -1 && local[b] != -1)
                edges.emplace_back(local[a], local[b]);
        Graph sub(static_cast<int>(verts.size()), std::move(edges));
        auto order = choose_order(sub, OrderStrategy::Degeneracy);
        scheme.window_wcol.push_back(compute_wcol(sub, order, r));
    }
    return scheme;
}

LabelScheme build_layered_labels(const Graph & g, int r)
{
    const auto layered = build_layered_scheme(g, r);
    const int window_bits = std::max(1, ceil_log2(static_cast<std::uint64_t>(layered.window_count)));

    LabelScheme scheme;
    scheme.decoder_id = "windowed_rank_sum";
    scheme.disjunctive = true;
    scheme.params["r"] = r;
    scheme.params["window_bits"] = window_bits;
    scheme.labels.resize(g.vertex_count());

    // local index of each vertex within each of its windows
    std::vector<std::vector<int>> local_of(g.vertex_count());
    for (int w = 0; w < layered.window_count; ++w)
        for (std::size_t i = 0; i < layered.window_vertices[w].size(); ++i)
            local_of[layered.window_vertices[w][i]].push_back(static_cast<int>(i));

    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto & label = scheme.labels[x];
        for (std::size_t wi = 0; wi < layered.windows_of[x].size(); ++wi) {
            const int w = layered.windows_of[x][wi];
            const int local = local_of[x][wi];
            const auto & wr = layered.window_wcol[w];
            Bits window_id;
            append_bits(window_id, static_cast<std::uint64_t>(w), window_bits);
            std::vector<LabelPart> block(r + 1);
            for (auto & part : block)
                part.prefix = window_id;
            block[0].codes.push_back(static_cast<Code>(x));
            for (int k = 1; k <= r; ++k)
                for (Vertex v_local : wr.reach[local][k - 1])
                    block[k].codes.push_back(static_cast<Code>(layered.window_vertices[w][v_local]));
            for (auto & part : block)
                label.parts.push_back(std::move(part));
        }
    }
    return scheme;
}

std::int64_t wcol_upper_bound_planar(int r)
{
    if (r < 0)
        throw Error("radius must be nonnegative");
    // (2r+1) * C(r+2, 2)
    return static_cast<std::int64_t>(2 * r + 1) * ((static_cast<std::int64_t>(r) + 2) * (r + 1) / 2);
}

std::int64_t wcol_upper_bound_minor_free(int t, int r)
{
    if (t < 3)
        throw Error("minor order must be at least 3");
    if (r < 0)
        throw Error("radius must be nonnegative");
    // C(r+t-2, t-2) * (t-3) * (2r+2)
    std::int64_t binom = 1;
    for (int i = 1; i <= t - 2; ++i)
        binom = binom * (r + i) / i;
    return binom * (t - 3) * (2 * static_cast<std::int64_t>(r) + 2);
}

} // namespace graphlabel
