#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <graphlabel/graph.hpp>

namespace graphlabel {

// Decoder table on s-bit strings: entry(a, b) for a, b in [0, 2^s).
using BitDecoder = std::function<int(std::uint32_t, std::uint32_t)>;

// Seeded random decoder table for s-bit inputs.
BitDecoder random_decoder_table(int s, std::uint64_t seed);

struct CountingReport {
    int n = 0, s = 0, m = 0;
    double delta = 0;
    int allowed_disagreements = 0;      // floor(delta * m)
    std::int64_t strings = 0;           // 2^(s n)
    std::int64_t subgraphs = 0;         // 2^m
    std::int64_t max_good = 0;          // over all strings rho
    std::int64_t hamming_bound = 0;     // sum_{i <= allowed} C(m, i)
    double half_bound = 0;              // 2^(m/2)
    bool within_hamming = false;        // max_good <= hamming_bound
    bool contradiction = false;         // strings * max_good < subgraphs
};

// Exhaustive core of the counting lower bound: enumerates every label string
// rho in {0,1}^(s n) and every spanning subgraph H of g, counting the H for
// which rho is "good" (the decoder agrees with H on at least (1-delta)|E|
// edges of g). The count per rho is a Hamming ball around the subgraph the
// decoder defines, so max_good <= sum_{i <= delta m} C(m, i); when
// 2^(sn) * max_good < 2^m, no assignment of s-bit strings can be good for
// every subgraph, ruling out deterministic schemes of this shape. Requires
// s*n <= 20 and m <= 10.
CountingReport counting_verifier(const Graph & g, int s, double delta, const BitDecoder & decoder);

// n^(1/alpha) / 9: label size forced by distance-(1,alpha) schemes on
// high-girth dense instances. Requires alpha >= 2, n >= 2.
double adt_size_lower_bound(double n, double alpha);

struct GirthGapReport {
    int trials = 0;
    long edges_checked = 0;
    long violations = 0;
};

// For a graph of girth > alpha+1 and random spanning subgraphs H: every edge
// uv of g must satisfy dist_H(u,v) = 1 or dist_H(u,v) > alpha. Violations are
// impossible; the audit demonstrates it.
GirthGapReport girth_gap_audit(const Graph & g, int alpha, int trials, std::uint64_t seed);

struct GadgetReport {
    int ell = 0;
    int base_n = 0;
    int gadget_n = 0;
    int max_degree = 0;
    long pairs_checked = 0;
    long sandwich_violations = 0;
    long edge_violations = 0; // adjacent pairs whose roots are not at distance ell
    bool degree_ok = false;
    bool size_ok = false;     // gadget_n <= 8 N^2 ceil(log2 N)
    bool ok = false;
};

// Builds the gadget and exhaustively audits the distance sandwich
// (ell - 2 ceil(log2 N)) * dist(u,v) <= dist(r_u, r_v) <= ell * dist(u,v),
// the exact-ell property on edges, the degree bound, and the size bound.
GadgetReport gadget_audit(const Graph & g, int ell);

} // namespace graphlabel
