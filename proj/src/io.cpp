#include <graphlabel/io.hpp>

#include <graphlabel/error.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace graphlabel {

void write_graph(const Graph & g, const std::string & path)
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path);
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    if (! out)
        throw Error("write failed: " + path);

    const std::string side = path + ".roles.json";
    if (g.roles().empty()) {
        std::filesystem::remove(side);
        return;
    }
    nlohmann::ordered_json roles = nlohmann::ordered_json::object();
    for (const auto & [v, role] : g.roles())
        roles[std::to_string(v)] = role;
    std::ofstream roles_out(side);
    roles_out << nlohmann::ordered_json{{"roles", roles}}.dump(2) << '\n';
    if (! roles_out)
        throw Error("write failed: " + side);
}

Graph read_graph(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot read " + path);
    int n = -1;
    long m = -1;
    if (! (in >> n >> m))
        throw Error("malformed edge list header in " + path);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m > 0 ? static_cast<std::size_t>(m) : 0);
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (! (in >> u >> v))
            throw Error("malformed edge list in " + path);
        edges.emplace_back(u, v);
    }

    std::map<Vertex, std::string> roles;
    const std::string side = path + ".roles.json";
    if (std::filesystem::exists(side)) {
        std::ifstream roles_in(side);
        nlohmann::json doc;
        try {
            roles_in >> doc;
            for (const auto & [key, value] : doc.at("roles").items())
                roles[std::stoi(key)] = value.get<std::string>();
        }
        catch (const nlohmann::json::exception & e) {
            throw Error("malformed roles side-car " + side + ": " + e.what());
        }
    }
    return Graph(n, std::move(edges), std::move(roles));
}

} // namespace graphlabel
