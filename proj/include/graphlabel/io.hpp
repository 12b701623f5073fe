#pragma once

#include <string>

#include <graphlabel/graph.hpp>

namespace graphlabel {

// Edge-list text format: first line "n m", then m lines "u v" with 0-indexed
// decimal ids and u < v, sorted. Roles, when present, live in a JSON side-car
// at <path>.roles.json with shape {"roles": {"17": "root:3"}}.

void write_graph(const Graph & g, const std::string & path);

Graph read_graph(const std::string & path);

} // namespace graphlabel
