#include <graphlabel/generators.hpp>

#include <graphlabel/error.hpp>
#include <graphlabel/rng.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace graphlabel {
namespace gen {

    Graph hypercube(int d)
    {
        if (d < 0 || d > 25)
            throw Error("hypercube dimension out of range");
        const int n = 1 << d;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int x = 0; x < n; ++x)
            for (int i = 0; i < d; ++i)
                if (! (x & (1 << i)))
                    edges.emplace_back(x, x | (1 << i));
        return Graph(n, std::move(edges));
    }

    namespace {
        Graph product_grid(int w, int h, bool diagonals)
        {
            if (w <= 0 || h <= 0)
                throw Error("grid dimensions must be positive");
            auto id = [w](int x, int y) { return y * w + x; };
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    if (x + 1 < w)
                        edges.emplace_back(id(x, y), id(x + 1, y));
                    if (y + 1 < h)
                        edges.emplace_back(id(x, y), id(x, y + 1));
                    if (diagonals && y + 1 < h) {
                        if (x + 1 < w)
                            edges.emplace_back(id(x, y), id(x + 1, y + 1));
                        if (x > 0)
                            edges.emplace_back(id(x, y), id(x - 1, y + 1));
                    }
                }
            }
            return Graph(w * h, std::move(edges));
        }
    }

    Graph grid(int w, int h) { return product_grid(w, h, false); }

    Graph king_grid(int w, int h) { return product_grid(w, h, true); }

    Graph grid3(int w, int h, int d)
    {
        if (w <= 0 || h <= 0 || d <= 0)
            throw Error("grid dimensions must be positive");
        auto id = [w, h](int x, int y, int z) { return (z * h + y) * w + x; };
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int z = 0; z < d; ++z)
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    if (x + 1 < w)
                        edges.emplace_back(id(x, y, z), id(x + 1, y, z));
                    if (y + 1 < h)
                        edges.emplace_back(id(x, y, z), id(x, y + 1, z));
                    if (z + 1 < d)
                        edges.emplace_back(id(x, y, z), id(x, y, z + 1));
                }
        return Graph(w * h * d, std::move(edges));
    }

    Graph path(int n)
    {
        if (n <= 0)
            throw Error("path needs at least one vertex");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, std::move(edges));
    }

    Graph complete(int n)
    {
        if (n <= 0)
            throw Error("complete graph needs at least one vertex");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    Graph cycle(int n)
    {
        if (n < 3)
            throw Error("cycle needs at least three vertices");
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(n);
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(edges));
    }

    Graph petersen()
    {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);         // outer cycle
            edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
            edges.emplace_back(i, 5 + i);               // spokes
        }
        return Graph(10, std::move(edges));
    }

    Graph random_tree(int n, std::uint64_t seed)
    {
        if (n <= 0)
            throw Error("tree needs at least one vertex");
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 1; i < n; ++i)
            edges.emplace_back(static_cast<int>(rng.below(i)), i);
        return Graph(n, std::move(edges));
    }

    Graph random_bipartite(int a, int b, int deg, std::uint64_t seed)
    {
        if (a <= 0 || b <= 0)
            throw Error("bipartite sides must be positive");
        if (deg < 0 || deg > b)
            throw Error("bipartite degree out of range");
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::vector<int> rights(b);
        for (int j = 0; j < b; ++j)
            rights[j] = j;
        for (int i = 0; i < a; ++i) {
            // partial Fisher-Yates: first deg entries become the sample
            for (int t = 0; t < deg; ++t)
                std::swap(rights[t], rights[t + rng.below(b - t)]);
            for (int t = 0; t < deg; ++t)
                edges.emplace_back(i, a + rights[t]);
        }
        return Graph(a + b, std::move(edges));
    }

    Graph gnp(int n, double p, std::uint64_t seed)
    {
        if (n <= 0)
            throw Error("gnp needs at least one vertex");
        if (p < 0.0 || p > 1.0)
            throw Error("gnp probability out of range");
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p))
                    edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    Graph random_subgraph(const Graph & g, double p, std::uint64_t seed)
    {
        if (p < 0.0 || p > 1.0)
            throw Error("subgraph probability out of range");
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto e : g.edges())
            if (rng.bernoulli(p))
                edges.push_back(e);
        return Graph(g.vertex_count(), std::move(edges));
    }

    Graph induced_subhypercube(int d, const std::vector<std::uint32_t> & masks)
    {
        if (d < 0 || d > 25)
            throw Error("hypercube dimension out of range");
        std::set<std::uint32_t> seen;
        for (auto m : masks) {
            if (m >= (std::uint32_t{1} << d))
                throw Error("mask outside hypercube");
            if (! seen.insert(m).second)
                throw Error("duplicate mask");
        }
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < masks.size(); ++i)
            for (std::size_t j = i + 1; j < masks.size(); ++j)
                if (std::popcount(masks[i] ^ masks[j]) == 1)
                    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return Graph(static_cast<int>(masks.size()), std::move(edges));
    }

    Graph random_subcube(int d, int k, std::uint64_t seed)
    {
        if (k < 0 || k > d)
            throw Error("subcube dimension out of range");
        Rng rng(seed);
        std::vector<int> coords(d);
        for (int i = 0; i < d; ++i)
            coords[i] = i;
        rng.shuffle(coords);
        std::uint32_t fixed = 0;
        for (int i = k; i < d; ++i)
            if (rng.bernoulli(0.5))
                fixed |= std::uint32_t{1} << coords[i];
        std::vector<std::uint32_t> masks;
        for (std::uint32_t free = 0; free < (std::uint32_t{1} << k); ++free) {
            std::uint32_t m = fixed;
            for (int i = 0; i < k; ++i)
                if (free & (std::uint32_t{1} << i))
                    m |= std::uint32_t{1} << coords[i];
            masks.push_back(m);
        }
        std::sort(masks.begin(), masks.end());
        return induced_subhypercube(d, masks);
    }

    Graph random_induced_subhypercube(int d, double p, std::uint64_t seed)
    {
        if (p < 0.0 || p > 1.0)
            throw Error("probability out of range");
        Rng rng(seed);
        std::vector<std::uint32_t> masks;
        for (std::uint32_t m = 0; m < (std::uint32_t{1} << d); ++m)
            if (rng.bernoulli(p))
                masks.push_back(m);
        return induced_subhypercube(d, masks);
    }

    Graph from_spec(const std::string & spec, const Graph * base)
    {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ':'))
            parts.push_back(item);
        if (parts.empty())
            throw Error("empty generator spec");
        const std::string & kind = parts[0];
        auto arity = [&](std::size_t want) {
            if (parts.size() != want + 1)
                throw Error("generator " + kind + " expects " + std::to_string(want) + " arguments");
        };
        auto num = [&](std::size_t i) { return std::stoi(parts.at(i)); };
        auto real = [&](std::size_t i) { return std::stod(parts.at(i)); };
        auto seed_arg = [&](std::size_t i) { return static_cast<std::uint64_t>(std::stoull(parts.at(i))); };
        auto need_base = [&]() -> const Graph & {
            if (! base)
                throw Error("generator " + kind + " needs an input graph");
            return *base;
        };

        if (kind == "hypercube") { arity(1); return hypercube(num(1)); }
        if (kind == "grid") { arity(2); return grid(num(1), num(2)); }
        if (kind == "king") { arity(2); return king_grid(num(1), num(2)); }
        if (kind == "grid3") { arity(3); return grid3(num(1), num(2), num(3)); }
        if (kind == "path") { arity(1); return path(num(1)); }
        if (kind == "complete") { arity(1); return complete(num(1)); }
        if (kind == "cycle") { arity(1); return cycle(num(1)); }
        if (kind == "petersen") { arity(0); return petersen(); }
        if (kind == "tree") { arity(2); return random_tree(num(1), seed_arg(2)); }
        if (kind == "bipartite") { arity(4); return random_bipartite(num(1), num(2), num(3), seed_arg(4)); }
        if (kind == "gnp") { arity(3); return gnp(num(1), real(2), seed_arg(3)); }
        if (kind == "subcube") { arity(3); return random_subcube(num(1), num(2), seed_arg(3)); }
        if (kind == "qnp") { arity(3); return random_induced_subhypercube(num(1), real(2), seed_arg(3)); }
        if (kind == "subgraph") { arity(2); return random_subgraph(need_base(), real(1), seed_arg(2)); }
        if (kind == "subdivide") { arity(1); return k_subdivide(need_base(), num(1)); }
        if (kind == "gadget") { arity(1); return binary_tree_gadget(need_base(), num(1)); }
        throw Error("unknown generator: " + kind);
    }

} // namespace gen
} // namespace graphlabel
