#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <graphlabel/bits.hpp>
#include <graphlabel/graph.hpp>

namespace graphlabel {

using Code = std::uint64_t;

// One element (p | q) of an equality-based label: a plain bit-string prefix
// and a vector of equality codes. Codes are abstract tokens; decoders may
// only test them for equality, never inspect their values.
struct LabelPart {
    Bits prefix;
    std::vector<Code> codes;

    bool operator==(const LabelPart &) const = default;
};

struct EqLabel {
    std::vector<LabelPart> parts;

    int prefix_bits() const; // s
    int part_count() const;  // t
    int code_count() const;  // k

    bool operator==(const EqLabel &) const = default;
};

// A deterministic equality-based labelling: per-vertex labels plus a named
// decoder. A decoder sees only the two prefixes/part shapes and the equality
// pattern among codes (enforced by PairView). Registered decoders:
//
//   or_first_vs_rest   disjunctive; single part; output 1 iff code 0 of one
//                      side equals any later code of the other side.
//   or_rank_sum        disjunctive; params r; parts are rank classes 0..r;
//                      output 1 iff parts i of x and j of y share a code for
//                      some i+j <= r.
//   or_any             disjunctive; output 1 iff any two codes agree.
//   windowed_rank_sum  disjunctive; params r; parts come in blocks of r+1,
//                      every part prefixed with its block's window id; the
//                      rank-sum rule applies to same-window blocks only.
//   shrubdepth_lca     not disjunctive; params depth, colors; part 0 carries
//                      the adjacency truth table over color triples, parts
//                      1..depth+1 the leaf-to-root node path with node colors
//                      as prefixes; output is the table entry selected by the
//                      two leaf colors and the color at the lowest equal
//                      ancestor.
struct LabelScheme {
    std::vector<EqLabel> labels;
    std::string decoder_id;
    std::map<std::string, std::int64_t> params;
    bool disjunctive = false;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int max_prefix_bits() const;
    int max_parts() const;
    int max_codes() const;
};

// Equality-only view of a label pair: decoders receive this, so they cannot
// depend on code values (renaming codes injectively cannot change outputs).
class PairView {
public:
    PairView(const EqLabel & a, const EqLabel & b) : a_(a), b_(b) {}

    int parts_a() const { return a_.part_count(); }
    int parts_b() const { return b_.part_count(); }
    const Bits & prefix_a(int p) const { return a_.parts.at(p).prefix; }
    const Bits & prefix_b(int p) const { return b_.parts.at(p).prefix; }
    int codes_a(int p) const { return static_cast<int>(a_.parts.at(p).codes.size()); }
    int codes_b(int p) const { return static_cast<int>(b_.parts.at(p).codes.size()); }

    bool eq(int pa, int ia, int pb, int ib) const
    {
        return a_.parts.at(pa).codes.at(ia) == b_.parts.at(pb).codes.at(ib);
    }

    // True when some code of part pa equals some code of part pb.
    bool parts_intersect(int pa, int pb) const;

private:
    const EqLabel & a_;
    const EqLabel & b_;
};

// Dispatches to the named decoder. Throws on unknown decoder_id.
int decode_pair(const std::string & decoder_id, const std::map<std::string, std::int64_t> & params,
        const PairView & view);

inline int decode(const LabelScheme & scheme, Vertex x, Vertex y)
{
    return decode_pair(scheme.decoder_id, scheme.params, PairView(scheme.labels.at(x), scheme.labels.at(y)));
}

bool decoder_is_disjunctive(const std::string & decoder_id);

// Serialized length of a label in bits: varint part count, then per part a
// varint prefix length, the prefix, a varint code count, and the codes. Codes
// take code_width bits each, or a varint when code_width == 0 (deterministic
// schemes, where codes are unbounded tokens).
int label_bits(const EqLabel & label, int code_width);
Bits label_to_bits(const EqLabel & label, int code_width);
EqLabel label_from_bits(const Bits & bits, int code_width);

// Worst-case serialized label size over all vertices.
int scheme_size_bits(const LabelScheme & scheme);

// Partial pair function with values {0, 1, star}: the ground truth a scheme
// or sketch is evaluated against. Holds a reference to the graph.
class PairPredicate {
public:
    static constexpr int star = -1;

    static PairPredicate adjacency(const Graph & g);
    static PairPredicate dist_leq(const Graph & g, int r);
    // 1 when dist <= r1, 0 when dist > r2, star strictly between.
    static PairPredicate dist_band(const Graph & g, int r1, int r2);
    // Adjacency of h on the listed pairs only; star elsewhere.
    static PairPredicate adjacency_restricted(const Graph & h, std::vector<std::pair<Vertex, Vertex>> pairs);

    int operator()(Vertex x, Vertex y) const;
    int n() const { return n_; }

private:
    PairPredicate(const Graph & g, int kind, int r1, int r2);

    enum Kind { kAdjacency, kDistBand, kRestricted };

    const Graph * g_;
    int n_;
    int kind_;
    int r1_ = 0, r2_ = 0;
    std::vector<std::vector<std::uint16_t>> clamped_dist_;
    std::vector<std::pair<Vertex, Vertex>> restricted_;
};

} // namespace graphlabel
