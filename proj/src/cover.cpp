#include <graphlabel/adt.hpp>

#include <graphlabel/error.hpp>

#include <algorithm>
#include <queue>

namespace graphlabel {

namespace {

    void add_band_components(const Graph & g, const std::vector<int> & depth, int lo, int hi, Cover & cover)
    {
        // clusters = connected components of the induced subgraph on
        // depths [lo, hi)
        const int n = g.vertex_count();
        std::vector<char> taken(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (taken[v] || depth[v] < lo || depth[v] >= hi)
                continue;
            std::vector<Vertex> cluster;
            std::queue<Vertex> queue;
            queue.push(v);
            taken[v] = 1;
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop();
                cluster.push_back(u);
                for (Vertex w : g.neighbors(u))
                    if (! taken[w] && depth[w] >= lo && depth[w] < hi) {
                        taken[w] = 1;
                        queue.push(w);
                    }
            }
            std::sort(cluster.begin(), cluster.end());
            cover.clusters.push_back(std::move(cluster));
        }
    }

    void fill_membership(Cover & cover, int n)
    {
        cover.membership.assign(n, {});
        for (std::size_t c = 0; c < cover.clusters.size(); ++c)
            for (Vertex v : cover.clusters[c])
                cover.membership[v].push_back(static_cast<int>(c));
    }

} // namespace

Cover tree_sparse_cover(const Graph & tree, Vertex root, int delta)
{
    if (delta < 8)
        throw Error("tree cover needs delta >= 8");
    if (tree.edge_count() >= tree.vertex_count() || girth(tree) != inf_dist)
        throw Error("tree cover needs an acyclic input");
    const int n = tree.vertex_count();
    std::vector<int> depth(n, 0);
    {
        auto row = bfs_distances(tree, root);
        for (Vertex v = 0; v < n; ++v)
            depth[v] = row.dist[v] == inf_dist ? 0 : row.dist[v]; // other components root at depth 0
        // per-component depths for forests
        std::vector<char> seen(n, 0);
        for (Vertex v = 0; v < n; ++v)
            seen[v] = row.dist[v] != inf_dist;
        for (Vertex v = 0; v < n; ++v) {
            if (seen[v])
                continue;
            auto extra = bfs_distances(tree, v);
            for (Vertex u = 0; u < n; ++u)
                if (extra.dist[u] != inf_dist && ! seen[u]) {
                    depth[u] = extra.dist[u];
                    seen[u] = 1;
                }
        }
    }

    const int height = delta / 2;
    const int shift = delta / 4;
    int max_depth = 0;
    for (int d : depth)
        max_depth = std::max(max_depth, d);

    Cover cover;
    cover.delta = delta;
    cover.sigma = 8;
    for (int lo = 0; lo <= max_depth; lo += height)
        add_band_components(tree, depth, lo, lo + height, cover);
    add_band_components(tree, depth, 0, shift, cover);
    for (int lo = shift; lo <= max_depth; lo += height)
        add_band_components(tree, depth, lo, lo + height, cover);

    fill_membership(cover, n);
    return cover;
}

Cover greedy_ball_cover(const Graph & g, int delta)
{
    if (delta < 4)
        throw Error("greedy cover needs delta >= 4");
    const int n = g.vertex_count();
    const int inner = delta / 4;
    const int outer = delta / 2;

    Cover cover;
    cover.delta = delta;
    cover.sigma = 4;

    // covered_radius[v]: the largest rho <= inner such that B(v, rho) is
    // known to sit inside some existing cluster.
    std::vector<int> covered_radius(n, -1);
    for (Vertex u = 0; u < n; ++u) {
        if (covered_radius[u] >= inner)
            continue;
        auto row = bfs_distances(g, u);
        std::vector<Vertex> cluster;
        for (Vertex v = 0; v < n; ++v)
            if (row.dist[v] <= outer)
                cluster.push_back(v);
        for (Vertex v : cluster) {
            // B(v, outer - dist(u,v)) is inside this ball
            covered_radius[v] = std::max(covered_radius[v], outer - row.dist[v]);
        }
        cover.clusters.push_back(std::move(cluster));
    }
    fill_membership(cover, n);
    return cover;
}

CoverReport verify_cover(const Graph & g, const Cover & cover)
{
    const int n = g.vertex_count();
    CoverReport report;
    report.required_radius = cover.sigma > 0 ? cover.delta / cover.sigma : 0;

    const auto dist = all_pairs_distances(g);

    for (const auto & cluster : cover.clusters)
        for (std::size_t i = 0; i < cluster.size(); ++i)
            for (std::size_t j = i + 1; j < cluster.size(); ++j) {
                const int d = dist[cluster[i]][cluster[j]];
                if (d == inf_dist || d > cover.delta)
                    ++report.violations;
                if (d != inf_dist)
                    report.max_weak_diameter = std::max(report.max_weak_diameter, d);
            }

    for (Vertex v = 0; v < n; ++v)
        report.tau = std::max(report.tau, static_cast<int>(cover.membership.at(v).size()));

    // Largest radius around each vertex that fits inside one cluster.
    report.min_covered_radius = n > 0 ? inf_dist : 0;
    for (Vertex u = 0; u < n; ++u) {
        int best = -1;
        for (int c : cover.membership[u]) {
            // radius covered by cluster c at u = largest rho such that every
            // vertex within rho of u is in c
            std::vector<char> inside(n, 0);
            for (Vertex v : cover.clusters[c])
                inside[v] = 1;
            int rho = n; // caps at graph diameter anyway
            for (Vertex v = 0; v < n; ++v)
                if (! inside[v] && dist[u][v] != inf_dist)
                    rho = std::min(rho, dist[u][v] - 1);
            best = std::max(best, rho);
        }
        report.min_covered_radius = std::min(report.min_covered_radius, best);
        if (best < report.required_radius) {
            report.uncovered.push_back(u);
            ++report.violations;
        }
    }
    report.ok = report.violations == 0;
    return report;
}

LabelScheme sc_adt_labels(const Cover & cover)
{
    LabelScheme scheme;
    scheme.decoder_id = "or_any";
    scheme.disjunctive = true;
    scheme.labels.resize(cover.membership.size());
    for (std::size_t v = 0; v < cover.membership.size(); ++v) {
        LabelPart part;
        for (int c : cover.membership[v])
            part.codes.push_back(static_cast<Code>(c));
        scheme.labels[v].parts.push_back(std::move(part));
    }
    return scheme;
}

} // namespace graphlabel
