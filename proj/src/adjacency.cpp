#include <graphlabel/adjacency.hpp>

#include <graphlabel/error.hpp>

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace graphlabel {

LabelScheme build_adjacency_labels(const Graph & g)
{
    const auto peel = degeneracy_order(g);
    LabelScheme scheme;
    scheme.decoder_id = "or_first_vs_rest";
    scheme.disjunctive = true;
    scheme.labels.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        LabelPart part;
        part.codes.push_back(static_cast<Code>(v));
        auto out = peel.out_neighbors[v];
        std::sort(out.begin(), out.end());
        for (Vertex u : out)
            part.codes.push_back(static_cast<Code>(u));
        scheme.labels[v].parts.push_back(std::move(part));
    }
    return scheme;
}

ArboricityBounds arboricity_bounds(const Graph & g)
{
    if (g.vertex_count() < 2)
        throw Error("arboricity bounds need at least two vertices");
    const auto peel = degeneracy_order(g);
    ArboricityBounds bounds;
    bounds.upper = peel.degeneracy;

    // Suffix subgraphs of the peeling: after removing order[0..i-1], the
    // remaining subgraph has all out-edges of the remaining vertices.
    long remaining_edges = g.edge_count();
    int remaining_vertices = g.vertex_count();
    for (Vertex v : peel.order) {
        if (remaining_vertices >= 2 && remaining_edges > 0) {
            const long density = (remaining_edges + remaining_vertices - 2) / (remaining_vertices - 1);
            bounds.lower = std::max(bounds.lower, static_cast<int>(density));
        }
        remaining_edges -= static_cast<long>(peel.out_neighbors[v].size());
        --remaining_vertices;
    }
    return bounds;
}

int ConnectionModel::node_depth(int node) const
{
    int d = 0;
    while (parent.at(node) != -1) {
        node = parent[node];
        ++d;
    }
    return d;
}

int ConnectionModel::lca(int a, int b) const
{
    int da = node_depth(a), db = node_depth(b);
    while (da > db) {
        a = parent[a];
        --da;
    }
    while (db > da) {
        b = parent[b];
        --db;
    }
    while (a != b) {
        a = parent[a];
        b = parent[b];
    }
    return a;
}

bool ConnectionModel::adjacent(Vertex u, Vertex v) const
{
    const int a = color.at(leaf_of.at(u));
    const int b = color.at(leaf_of.at(v));
    const int c = color.at(lca(leaf_of[u], leaf_of[v]));
    return phi.at((static_cast<std::size_t>(a) * colors + b) * colors + c) != 0;
}

void ConnectionModel::validate() const
{
    if (depth < 0 || colors < 1)
        throw Error("connection model needs depth >= 0 and colors >= 1");
    const int nodes = node_count();
    if (nodes == 0)
        throw Error("connection model has no nodes");
    int roots = 0;
    for (int v = 0; v < nodes; ++v) {
        if (parent[v] == -1)
            ++roots;
        else if (parent[v] < 0 || parent[v] >= nodes)
            throw Error("connection model parent out of range");
        if (color[v] < 0 || color[v] >= colors)
            throw Error("connection model color out of range");
    }
    if (roots != 1)
        throw Error("connection model must have exactly one root");
    // acyclicity + depth: every node must reach the root within `nodes` steps
    std::vector<char> is_parent(nodes, 0);
    for (int v = 0; v < nodes; ++v) {
        int steps = 0;
        for (int u = v; parent[u] != -1; u = parent[u])
            if (++steps > nodes)
                throw Error("connection model parent pointers form a cycle");
        if (parent[v] != -1)
            is_parent[parent[v]] = 1;
    }
    std::vector<char> is_leaf_node(nodes, 0);
    for (std::size_t u = 0; u < leaf_of.size(); ++u) {
        const int node = leaf_of[u];
        if (node < 0 || node >= nodes)
            throw Error("leaf_of out of range");
        if (is_parent[node])
            throw Error("leaf_of maps a vertex to an internal node");
        if (is_leaf_node[node])
            throw Error("leaf_of is not injective");
        is_leaf_node[node] = 1;
        if (node_depth(node) != depth)
            throw Error("all leaves must sit at the stated depth");
    }
    for (int v = 0; v < nodes; ++v)
        if (! is_parent[v] && ! is_leaf_node[v])
            throw Error("tree leaf not mapped to any vertex");
    if (phi.size() != static_cast<std::size_t>(colors) * colors * colors)
        throw Error("truth table size must be colors^3");
}

Graph ConnectionModel::induced_graph() const
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int n = vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace {
    void parse_model_fields(const nlohmann::json & doc, ConnectionModel & model);
}

ConnectionModel ConnectionModel::from_json_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot read " + path);
    nlohmann::json doc;
    ConnectionModel model;
    try {
        in >> doc;
        parse_model_fields(doc, model);
    }
    catch (const nlohmann::json::exception & e) {
        throw Error("malformed model JSON: " + std::string(e.what()));
    }
    model.validate();
    return model;
}

namespace {

void parse_model_fields(const nlohmann::json & doc, ConnectionModel & model)
{
    model.depth = doc.at("depth").get<int>();
    model.colors = doc.at("colors").get<int>();
    int max_id = -1;
    for (const auto & node : doc.at("nodes"))
        max_id = std::max(max_id, node.at("id").get<int>());
    model.parent.assign(max_id + 1, -2);
    model.color.assign(max_id + 1, 0);
    for (const auto & node : doc.at("nodes")) {
        const int id = node.at("id").get<int>();
        if (model.parent.at(id) != -2)
            throw Error("duplicate node id in model");
        model.parent[id] = node.at("parent").get<int>();
        model.color[id] = node.at("color").get<int>();
    }
    for (int p : model.parent)
        if (p == -2)
            throw Error("missing node id in model");
    const auto & leaves = doc.at("leaf_of");
    int n = 0;
    for (const auto & item : leaves.items())
        n = std::max(n, std::stoi(item.key()) + 1);
    model.leaf_of.assign(n, -1);
    for (const auto & item : leaves.items())
        model.leaf_of.at(std::stoi(item.key())) = item.value().get<int>();
    for (int node : model.leaf_of)
        if (node == -1)
            throw Error("leaf_of must cover vertices 0..n-1");
    model.phi.assign(static_cast<std::size_t>(model.colors) * model.colors * model.colors, 0);
    for (const auto & row : doc.at("phi")) {
        const int a = row.at(0).get<int>(), b = row.at(1).get<int>(), c = row.at(2).get<int>();
        if (a < 0 || b < 0 || c < 0 || a >= model.colors || b >= model.colors || c >= model.colors)
            throw Error("phi triple out of color range");
        model.phi.at((static_cast<std::size_t>(a) * model.colors + b) * model.colors + c) =
            row.at(3).get<int>() ? 1 : 0;
    }
}

} // namespace

void ConnectionModel::to_json_file(const std::string & path) const
{
    nlohmann::ordered_json doc;
    doc["depth"] = depth;
    doc["colors"] = colors;
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (int v = 0; v < node_count(); ++v)
        nodes.push_back({{"id", v}, {"parent", parent[v]}, {"color", color[v]}});
    doc["nodes"] = std::move(nodes);
    nlohmann::ordered_json leaves = nlohmann::ordered_json::object();
    for (std::size_t u = 0; u < leaf_of.size(); ++u)
        leaves[std::to_string(u)] = leaf_of[u];
    doc["leaf_of"] = std::move(leaves);
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int a = 0; a < colors; ++a)
        for (int b = 0; b < colors; ++b)
            for (int c = 0; c < colors; ++c) {
                const std::size_t idx = (static_cast<std::size_t>(a) * colors + b) * colors + c;
                if (phi[idx])
                    table.push_back({a, b, c, 1});
            }
    doc["phi"] = std::move(table);
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path);
    out << doc.dump(2) << '\n';
}

void validate_model_against(const ConnectionModel & model, const Graph & g)
{
    model.validate();
    if (model.vertex_count() != g.vertex_count())
        throw Error("model and graph disagree on vertex count");
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (model.adjacent(u, v) != g.has_edge(u, v))
                throw Error("model does not reproduce adjacency at pair (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
}

LabelScheme build_shrubdepth_labels(const ConnectionModel & model)
{
    model.validate();
    const int color_width = ceil_log2(static_cast<std::uint64_t>(model.colors));

    Bits phi_bits(model.phi.size(), '0');
    for (std::size_t i = 0; i < model.phi.size(); ++i)
        if (model.phi[i])
            phi_bits[i] = '1';

    LabelScheme scheme;
    scheme.decoder_id = "shrubdepth_lca";
    scheme.disjunctive = false;
    scheme.params["depth"] = model.depth;
    scheme.params["colors"] = model.colors;

    for (Vertex v = 0; v < model.vertex_count(); ++v) {
        EqLabel label;
        label.parts.push_back(LabelPart{phi_bits, {}});
        int node = model.leaf_of[v];
        for (int i = 0; i <= model.depth; ++i) {
            LabelPart part;
            append_bits(part.prefix, static_cast<std::uint64_t>(model.color[node]), color_width);
            part.codes.push_back(static_cast<Code>(node));
            label.parts.push_back(std::move(part));
            if (model.parent[node] != -1)
                node = model.parent[node];
        }
        scheme.labels.push_back(std::move(label));
    }
    return scheme;
}

} // namespace graphlabel
