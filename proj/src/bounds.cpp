#include <graphlabel/bounds.hpp>

#include <graphlabel/bits.hpp>
#include <graphlabel/error.hpp>
#include <graphlabel/generators.hpp>
#include <graphlabel/rng.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>

namespace graphlabel {

BitDecoder random_decoder_table(int s, std::uint64_t seed)
{
    if (s < 0 || s > 10)
        throw Error("decoder table limited to 10-bit strings");
    const std::uint32_t side = std::uint32_t{1} << s;
    auto table = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(side) * side);
    Rng rng(seed);
    for (auto & bit : *table)
        bit = static_cast<std::uint8_t>(rng.below(2));
    return [table, side](std::uint32_t a, std::uint32_t b) {
        return (*table)[static_cast<std::size_t>(a) * side + b];
    };
}

CountingReport counting_verifier(const Graph & g, int s, double delta, const BitDecoder & decoder)
{
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (s < 1)
        throw Error("label size must be positive");
    if (delta < 0 || delta >= 1)
        throw Error("delta must lie in [0, 1)");
    if (s * n > 20 || m > 10)
        throw Error("exhaustive verifier limited to s*n <= 20 and m <= 10");

    CountingReport report;
    report.n = n;
    report.s = s;
    report.m = m;
    report.delta = delta;
    // floor with a nudge so ratios like 1/6 * 6 land on the integer
    report.allowed_disagreements = static_cast<int>(std::floor(delta * m + 1e-9));
    report.strings = std::int64_t{1} << (s * n);
    report.subgraphs = std::int64_t{1} << m;
    report.half_bound = std::pow(2.0, m / 2.0);

    std::int64_t ball = 0;
    {
        std::int64_t binom = 1;
        for (int i = 0; i <= report.allowed_disagreements; ++i) {
            ball += binom;
            binom = binom * (m - i) / (i + 1);
        }
    }
    report.hamming_bound = ball;

    const std::uint32_t mask = (std::uint32_t{1} << s) - 1;
    for (std::int64_t rho = 0; rho < report.strings; ++rho) {
        // decoder-defined subgraph on E(g)
        std::uint32_t f = 0;
        for (int e = 0; e < m; ++e) {
            const auto [u, v] = g.edges()[e];
            const std::uint32_t pu = (static_cast<std::uint64_t>(rho) >> (u * s)) & mask;
            const std::uint32_t pv = (static_cast<std::uint64_t>(rho) >> (v * s)) & mask;
            if (decoder(pu, pv))
                f |= std::uint32_t{1} << e;
        }
        std::int64_t good = 0;
        for (std::uint32_t h = 0; h < static_cast<std::uint32_t>(report.subgraphs); ++h)
            if (std::popcount(h ^ f) <= report.allowed_disagreements)
                ++good;
        report.max_good = std::max(report.max_good, good);
    }

    report.within_hamming = report.max_good <= report.hamming_bound;
    report.contradiction =
        static_cast<double>(report.strings) * static_cast<double>(report.max_good) < static_cast<double>(report.subgraphs);
    return report;
}

double adt_size_lower_bound(double n, double alpha)
{
    if (alpha < 2)
        throw Error("alpha must be at least 2");
    if (n < 2)
        throw Error("n must be at least 2");
    return std::pow(n, 1.0 / alpha) / 9.0;
}

GirthGapReport girth_gap_audit(const Graph & g, int alpha, int trials, std::uint64_t seed)
{
    if (girth(g) <= alpha + 1)
        throw Error("girth must exceed alpha + 1");
    GirthGapReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Graph h = gen::random_subgraph(g, 0.5, keyed_hash(seed, t));
        for (auto [u, v] : g.edges()) {
            ++report.edges_checked;
            if (h.has_edge(u, v))
                continue;
            // bounded BFS in h: is dist_h(u,v) > alpha?
            const auto row = bfs_distances(h, u);
            if (row.dist[v] <= alpha)
                ++report.violations;
        }
    }
    return report;
}

GadgetReport gadget_audit(const Graph & g, int ell)
{
    GadgetReport report;
    report.ell = ell;
    report.base_n = g.vertex_count();

    const Graph gadget = binary_tree_gadget(g, ell);
    const auto roots = gadget_roots(gadget);
    report.gadget_n = gadget.vertex_count();
    report.max_degree = gadget.max_degree();
    report.degree_ok = report.max_degree <= 3;

    const int log_n = std::max(1, ceil_log2(static_cast<std::uint64_t>(g.vertex_count())));
    report.size_ok =
        static_cast<long>(report.gadget_n) <= 8L * g.vertex_count() * g.vertex_count() * log_n;

    const auto base_dist = all_pairs_distances(g);
    const int lower_factor = ell - 2 * ceil_log2(static_cast<std::uint64_t>(g.vertex_count()));
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto row = bfs_distances(gadget, roots[u]);
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            ++report.pairs_checked;
            const int d_base = base_dist[u][v];
            const int d_roots = row.dist[roots[v]];
            if (d_base == inf_dist) {
                if (d_roots != inf_dist)
                    ++report.sandwich_violations;
                continue;
            }
            if (d_roots == inf_dist ||
                    static_cast<long>(lower_factor) * d_base > d_roots ||
                    d_roots > static_cast<long>(ell) * d_base)
                ++report.sandwich_violations;
            if (d_base == 1 && d_roots != ell)
                ++report.edge_violations;
        }
    }
    report.ok = report.degree_ok && report.size_ok && report.sandwich_violations == 0 && report.edge_violations == 0;
    return report;
}

} // namespace graphlabel
