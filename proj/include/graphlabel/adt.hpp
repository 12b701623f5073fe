#pragma once

#include <cstdint>
#include <vector>

#include <graphlabel/eqlabel.hpp>
#include <graphlabel/graph.hpp>
#include <graphlabel/sketch.hpp>

namespace graphlabel {

// Family of vertex subsets of weak diameter <= delta such that every ball
// B(u, delta/sigma) fits inside some cluster and no vertex lies in more than
// tau clusters. sigma/tau here are the builder's intent; verify_cover
// measures what actually holds.
struct Cover {
    std::vector<std::vector<Vertex>> clusters;
    int delta = 0;
    int sigma = 0;
    std::vector<std::vector<int>> membership; // vertex -> cluster ids, sorted
};

// Two families of depth bands of height delta/2, the second shifted down by
// delta/4; clusters are the connected components of each band. Guarantees
// sigma = 8 and tau <= 2 with strong diameter < delta. Requires delta >= 8
// and an acyclic input.
Cover tree_sparse_cover(const Graph & tree, Vertex root, int delta);

// Generic graphs: scan vertices in id order; whenever B(u, delta/4) is not
// inside an existing cluster, add the cluster B(u, delta/2). Guarantees
// sigma = 4 and weak diameter <= delta; tau is whatever it comes out to be.
// Requires delta >= 4.
Cover greedy_ball_cover(const Graph & g, int delta);

struct CoverReport {
    bool ok = false;
    int max_weak_diameter = 0;
    int tau = 0;
    int min_covered_radius = 0;   // largest rho with every B(u, rho) inside some cluster
    int required_radius = 0;      // floor(delta / sigma)
    long violations = 0;
    std::vector<Vertex> uncovered; // vertices whose required ball fits nowhere
};

// Exhaustive audit of the three cover conditions against BFS distances.
CoverReport verify_cover(const Graph & g, const Cover & cover);

// Distance-invariant disjunctive labels from a cover: the label of x is the
// list of cluster ids containing x, and the decoder tests intersection.
// dist <= delta/sigma forces output 1, dist > delta forces output 0.
LabelScheme sc_adt_labels(const Cover & cover);

// Random partition with truncated exponential shifts: every u draws
// s_u ~ Exp(beta/delta) conditioned on [0, delta/2), and v joins the u
// minimizing dist(u,v) - s_u (ties to the smaller id). Since v itself is a
// candidate at value -s_v <= 0, the winner has dist(u,v) < delta/2, so every
// cluster has strong radius < delta/2 with certainty.
struct Partition {
    std::vector<int> cluster_of;   // vertex -> cluster id (dense, 0-based)
    std::vector<Vertex> center_of; // cluster id -> winning center
    double delta = 0;
    int max_center_dist = 0;       // measured radius certificate
};

Partition padded_partition(const Graph & g, double delta, double beta, std::uint64_t seed);

// As above but against a caller-provided distance matrix (repeated sampling).
Partition padded_partition_with_dist(const std::vector<std::vector<int>> & dist, double delta, double beta,
        std::uint64_t seed);

struct PaddingTable {
    std::vector<double> gamma;
    std::vector<double> prob;      // worst-vertex empirical padding probability
    std::vector<double> wilson_lo;
    std::vector<double> wilson_hi;
};

// Estimates, per gamma, the probability that B(u, gamma*delta) lands inside a
// single cluster, reported for the worst vertex u.
PaddingTable measure_padding(const Graph & g, double delta, double beta, const std::vector<double> & gammas,
        int trials, std::uint64_t seed, int jobs = 1);

// Padded-decomposition parameters: a (beta, delta)-padded scheme keeps
// B(u, gamma*Delta) whole with probability >= 2^(-beta*gamma) for any
// gamma <= delta. gamma() is the operating point used by the 2-bit sketch,
// capped so that 2^(-beta*gamma) >= 2/3; alpha() is the resulting approximation
// ratio max(1/delta, beta/log2(3/2)).
struct PaddedParams {
    double beta = 0;
    double delta = 0;

    double gamma() const;
    double alpha() const;
};

// 2-bit approximate distance threshold sketch: draw a padded partition at
// diameter r/gamma, give each cluster a uniform id from {1,2,3}, and decode
// by comparing ids. One id collision probability of exactly 1/3 gives the
// far-pair guarantee; the padding probability gives the near-pair one.
Sketcher pds_adt_sketch(const Graph & g, int r, double beta, double delta, std::uint64_t seed);

// Documentation-grade parameter presets from the literature; the measured
// padding path is authoritative for any concrete graph.
PaddedParams preset_params_minor_free(int t); // K_t-minor-free: (320t, 1/160)
PaddedParams preset_params_genus(int g);      // via the smallest complete graph of larger genus

} // namespace graphlabel
