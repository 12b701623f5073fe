#include <doctest.h>

#include <graphlabel/bits.hpp>
#include <graphlabel/error.hpp>
#include <graphlabel/generators.hpp>
#include <graphlabel/graph.hpp>
#include <graphlabel/io.hpp>
#include <graphlabel/rng.hpp>

#include "oracles.hpp"

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>

using namespace graphlabel;

TEST_CASE("graph construction validates and normalizes")
{
    Graph g(4, {{2, 1}, {0, 1}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(! g.has_edge(2, 3));
    for (Vertex v = 0; v < 4; ++v)
        for (Vertex u : g.neighbors(v))
            CHECK(g.has_edge(u, v));

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
}

TEST_CASE("bfs distances")
{
    CHECK(bfs_distances(gen::path(3), 0).dist == std::vector<int>{0, 1, 2});

    Graph isolated(2, {});
    CHECK(bfs_distances(isolated, 0).dist == std::vector<int>{0, inf_dist});

    // hypercube distance is Hamming weight
    const Graph q4 = gen::hypercube(4);
    const auto row = bfs_distances(q4, 0);
    for (int x = 0; x < 16; ++x)
        CHECK(row.dist[x] == std::popcount(static_cast<unsigned>(x)));

    CHECK_THROWS_AS(bfs_distances(isolated, 5), Error);
}

TEST_CASE("distrow triangle inequality along edges")
{
    const Graph g = gen::gnp(60, 0.08, 11);
    const auto row = bfs_distances(g, 0);
    for (auto [u, v] : g.edges()) {
        if (row.dist[u] == inf_dist || row.dist[v] == inf_dist) {
            CHECK(row.dist[u] == row.dist[v]); // edge endpoints share reachability
            continue;
        }
        CHECK(std::abs(row.dist[u] - row.dist[v]) <= 1);
    }
}

TEST_CASE("girth")
{
    CHECK(girth(gen::cycle(6)) == 6);
    CHECK(girth(gen::random_tree(40, 3)) == inf_dist);
    CHECK(girth(gen::petersen()) == 5);
    CHECK(girth(gen::complete(4)) == 3);
    CHECK(girth(gen::hypercube(3)) == 4);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = gen::gnp(14, 0.2, seed);
        CHECK(girth(g) == oracles::brute_girth(g));
    }
}

TEST_CASE("degeneracy order and orientation")
{
    const Graph tree = gen::random_tree(50, 9);
    auto peel = degeneracy_order(tree);
    CHECK(peel.degeneracy == 1);
    for (Vertex v = 0; v < 50; ++v)
        CHECK(peel.out_neighbors[v].size() <= 1);

    CHECK(degeneracy_order(gen::complete(4)).degeneracy == 3);
    CHECK(degeneracy_order(gen::hypercube(4)).degeneracy == 4);

    // the orientation covers every edge exactly once and respects the bound
    const Graph g = gen::gnp(80, 0.1, 5);
    peel = degeneracy_order(g);
    long covered = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        CHECK(static_cast<int>(peel.out_neighbors[v].size()) <= peel.degeneracy);
        covered += static_cast<long>(peel.out_neighbors[v].size());
        for (Vertex u : peel.out_neighbors[v])
            CHECK(g.has_edge(u, v));
    }
    CHECK(covered == g.edge_count());
}

TEST_CASE("k-subdivision")
{
    const Graph k3 = gen::complete(3);

    const Graph same = k_subdivide(k3, 0);
    CHECK(same.vertex_count() == 3);
    CHECK(same.edges() == k3.edges());

    const Graph c6 = k_subdivide(k3, 1);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(girth(c6) == 6);
    CHECK(c6.roles().at(0) == "branch");
    CHECK(c6.roles().count(3) == 0);

    // branch distances scale by k+1
    for (int k = 1; k <= 3; ++k) {
        const Graph base = gen::petersen();
        const Graph sub = k_subdivide(base, k);
        const auto base_dist = all_pairs_distances(base);
        for (Vertex u = 0; u < base.vertex_count(); ++u) {
            const auto row = bfs_distances(sub, u);
            for (Vertex v = 0; v < base.vertex_count(); ++v)
                CHECK(row.dist[v] == (k + 1) * base_dist[u][v]);
        }
    }
}

TEST_CASE("binary tree gadget")
{
    SUBCASE("single edge, degenerate trees")
    {
        const Graph k2(2, {{0, 1}});
        const Graph gadget = binary_tree_gadget(k2, 3);
        const auto roots = gadget_roots(gadget);
        CHECK(gadget.vertex_count() == 4); // two root-leaves plus two path vertices
        CHECK(bfs_distances(gadget, roots[0]).dist[roots[1]] == 3);
        CHECK(gadget.max_degree() <= 2);
    }

    SUBCASE("adjacent roots at distance exactly ell")
    {
        const Graph c4 = gen::cycle(4);
        const Graph gadget = binary_tree_gadget(c4, 9);
        const auto roots = gadget_roots(gadget);
        for (auto [u, v] : c4.edges())
            CHECK(bfs_distances(gadget, roots[u]).dist[roots[v]] == 9);
    }

    SUBCASE("cubic output")
    {
        const Graph gadget = binary_tree_gadget(gen::complete(4), 9);
        CHECK(gadget.max_degree() == 3);
    }

    SUBCASE("distance sandwich on random graphs")
    {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = gen::gnp(10, 0.4, seed);
            if (g.min_degree() == 0)
                continue;
            const int ell = 2 * ceil_log2(10) + 1 + static_cast<int>(seed);
            const Graph gadget = binary_tree_gadget(g, ell);
            const auto roots = gadget_roots(gadget);
            const auto base_dist = all_pairs_distances(g);
            const int low = ell - 2 * ceil_log2(10);
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                const auto row = bfs_distances(gadget, roots[u]);
                for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                    if (base_dist[u][v] == inf_dist) {
                        CHECK(row.dist[roots[v]] == inf_dist);
                        continue;
                    }
                    CHECK(row.dist[roots[v]] >= low * base_dist[u][v]);
                    CHECK(row.dist[roots[v]] <= ell * base_dist[u][v]);
                }
            }
        }
    }

    SUBCASE("rejects infeasible ell")
    {
        CHECK_THROWS_WITH_AS(binary_tree_gadget(gen::complete(4), 4), doctest::Contains("need at least"), Error);
        CHECK_THROWS_AS(binary_tree_gadget(Graph(2, {}), 3), Error); // isolated vertices
    }
}

TEST_CASE("generators")
{
    const Graph q3 = gen::hypercube(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);

    const Graph king = gen::king_grid(3, 3);
    CHECK(king.vertex_count() == 9);
    CHECK(king.edge_count() == 20);

    CHECK(gen::grid(30, 30).edge_count() == 2 * 29 * 30);
    CHECK(gen::grid3(2, 2, 2).edge_count() == 12);

    const Graph tree = gen::random_tree(100, 17);
    CHECK(tree.edge_count() == 99);
    CHECK(girth(tree) == inf_dist);
    CHECK(components(tree).second == 1);

    const Graph bip = gen::random_bipartite(8, 11, 3, 17);
    CHECK(bip.edge_count() == 24);
    for (auto [u, v] : bip.edges()) {
        CHECK(u < 8);
        CHECK(v >= 8);
    }

    // determinism: same spec + seed is bit-identical
    CHECK(gen::gnp(50, 0.1, 7).edges() == gen::gnp(50, 0.1, 7).edges());
    CHECK(gen::gnp(50, 0.1, 7).edges() != gen::gnp(50, 0.1, 8).edges());

    const Graph base = gen::complete(20);
    const Graph sub = gen::random_subgraph(base, 0.5, 3);
    CHECK(sub.vertex_count() == 20);
    for (auto e : sub.edges())
        CHECK(base.has_edge(e.first, e.second));

    CHECK(gen::from_spec("hypercube:4").vertex_count() == 16);
    CHECK(gen::from_spec("petersen").edge_count() == 15);
    CHECK_THROWS_AS(gen::from_spec("nonsense:3"), Error);
    CHECK_THROWS_AS(gen::from_spec("subgraph:0.5:1"), Error); // needs a base graph
}

TEST_CASE("hypercube subgraph edge bound")
{
    // exact count on subcubes: m = n log2(n) / 2
    for (int d = 1; d <= 8; ++d) {
        for (int k = 0; k <= d && k <= 5; ++k) {
            const Graph cube = gen::random_subcube(d, k, 1000 * d + k);
            const double n = cube.vertex_count();
            CHECK(cube.vertex_count() == (1 << k));
            CHECK(cube.edge_count() == k * (1 << k) / 2);
            if (n >= 2)
                CHECK(static_cast<double>(cube.edge_count()) == doctest::Approx(n * std::log2(n) / 2));
        }
    }

    // random induced subgraphs never beat the subcube density
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = gen::random_induced_subhypercube(8, 0.35, seed);
        const double n = g.vertex_count();
        if (n >= 2)
            CHECK(g.edge_count() <= n * std::log2(n) / 2);
    }
}

TEST_CASE("edge list round trip with roles")
{
    const auto dir = std::filesystem::temp_directory_path() / "graphlabel_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "g.el").string();

    const Graph g = k_subdivide(gen::cycle(5), 2);
    write_graph(g, path);
    const Graph back = read_graph(path);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(back.roles() == g.roles());

    // header is "n m"
    std::ifstream in(path);
    int n = 0, m = 0;
    in >> n >> m;
    CHECK(n == g.vertex_count());
    CHECK(m == g.edge_count());

    CHECK_THROWS_AS(read_graph((dir / "missing.el").string()), Error);
    std::filesystem::remove_all(dir);
}
