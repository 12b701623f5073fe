#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <graphlabel/eqlabel.hpp>
#include <graphlabel/sketch.hpp>

namespace graphlabel {

// Wilson 95% score interval for successes/trials.
std::pair<double, double> wilson_interval(long successes, long trials, double z = 1.959964);

struct PairStat {
    Vertex x = 0, y = 0;
    int want = 0;
    long wrong = 0;
    double rate = 0.0;
    double wilson_lo = 0.0, wilson_hi = 0.0;
};

struct EvalReport {
    bool randomized = false;
    long pairs_checked = 0;
    long errors = 0;                  // deterministic path: exact disagreement count
    int trials = 0;

    double max_pair_error = 0.0;      // worst per-pair empirical error rate
    double max_pair_error_hi = 0.0;   // Wilson upper bound at the worst pair
    double false_negative_rate = 0.0; // over predicate-1 pairs
    double false_positive_rate = 0.0; // over predicate-0 pairs
    long one_pairs = 0, zero_pairs = 0;

    // randomized path: one entry per evaluated pair, with Wilson 95% bounds;
    // deterministic path: the disagreeing pairs (rate 1), capped at 1000
    std::vector<PairStat> pair_stats;

    int size_bits = 0;
    int s = 0, t = 0, k = 0;          // scheme shape, deterministic path only

    bool exact() const { return ! randomized && errors == 0; }
};

// Exhaustive pass over unordered pairs where the predicate is defined.
EvalReport evaluate_scheme(const LabelScheme & scheme, const PairPredicate & predicate);

// One independently resampled sketch per trial; trial t uses a seed derived
// from (seed, t), so results do not depend on worker count or scheduling.
EvalReport evaluate_sketch(const Sketcher & sketch, const PairPredicate & predicate, int trials,
        std::uint64_t seed, int jobs = 1);

// Runs fn(begin, end) over [0, count) split into contiguous blocks on up to
// `jobs` threads.
void parallel_blocks(int count, int jobs, const std::function<void(int, int)> & fn);

} // namespace graphlabel
