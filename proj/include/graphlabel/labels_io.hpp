#pragma once

#include <string>
#include <variant>

#include <graphlabel/eqlabel.hpp>
#include <graphlabel/sketch.hpp>

namespace graphlabel {

// Scheme dump:
//   {"version":1, "decoder":"...", "params":{...}, "disjunctive":true,
//    "labels":[[["bits", code, ...], ...], ...]}
// where each label is a list of parts and each part is the prefix bit string
// followed by its codes.
//
// Sketch dump:
//   {"version":1, "decoder":"...", "params":{...}, "one_sided":true,
//    "n":N, "bits_per_vertex":B, "data":"<base64>"}
// with every vertex's bit string zero-padded to B bits and concatenated.
// Boosted (majority) sketches are in-memory combinators and do not serialize.

void serialize_labels(const LabelScheme & scheme, const std::string & path);
void serialize_labels(const Sketcher & sketch, const std::string & path);

std::variant<LabelScheme, StoredSketch> deserialize_labels(const std::string & path);

} // namespace graphlabel
