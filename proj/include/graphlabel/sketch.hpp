#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <graphlabel/bits.hpp>
#include <graphlabel/eqlabel.hpp>

namespace graphlabel {

// One sample of a randomized labelling: per-vertex bit strings plus the
// decoder that reads two of them. `resample` draws an independent copy with a
// fresh seed, which is what Monte Carlo evaluation iterates.
//
// For hash-compiled sketches, `hashed` mirrors the bit strings as parsed
// labels (codes reduced into [w]); decode_sketch uses the mirror, and
// tests pin bits <-> mirror equivalence. Sketches produced by
// boost_majority keep their copies in `inner` instead.
struct Sketcher {
    std::vector<Bits> bits;
    std::vector<EqLabel> hashed;
    std::vector<Sketcher> inner;

    std::string decoder_id;
    std::map<std::string, std::int64_t> params;
    bool one_sided = false;
    int size_bits = 0;
    std::uint64_t seed = 0;
    std::function<Sketcher(std::uint64_t)> resample;

    int vertex_count() const { return static_cast<int>(bits.size()); }
};

// Hash-compiles an equality-based scheme: every code q is replaced by a keyed
// hash of q reduced into [w], stored in ceil(log2 w) bits; prefixes and part
// structure are kept. Default w = 3k^2 where k is the scheme's max code
// count. Equal codes stay equal, so disjunctive schemes compile to one-sided
// sketches; a pair compares at most k^2 code pairs, so the error on any fixed
// pair is at most k^2/w.
Sketcher compile_sketch(const LabelScheme & scheme, std::uint64_t seed, int w = 0);

int decode_sketch(const Sketcher & sketch, Vertex x, Vertex y);

// Majority vote over `copies` independent resamples. Keeps one-sidedness:
// pairs decoded 1 with certainty stay certain.
Sketcher boost_majority(const Sketcher & base, int copies, std::uint64_t seed);

// A sketch loaded from disk: bit strings only, no resampling.
struct StoredSketch {
    std::vector<Bits> bits;
    std::string decoder_id;
    std::map<std::string, std::int64_t> params;
    bool one_sided = false;
    int size_bits = 0;

    int vertex_count() const { return static_cast<int>(bits.size()); }
    int decode(Vertex x, Vertex y) const;
};

// Decode straight from two serialized bit strings.
int decode_sketch_bits(const std::string & decoder_id, const std::map<std::string, std::int64_t> & params,
        const Bits & x_bits, const Bits & y_bits);

} // namespace graphlabel
