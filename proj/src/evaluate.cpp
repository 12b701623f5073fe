#include <graphlabel/evaluate.hpp>

#include <graphlabel/error.hpp>
#include <graphlabel/rng.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace graphlabel {

std::pair<double, double> wilson_interval(long successes, long trials, double z)
{
    if (trials <= 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

EvalReport evaluate_scheme(const LabelScheme & scheme, const PairPredicate & predicate)
{
    if (scheme.vertex_count() != predicate.n())
        throw Error("scheme and predicate disagree on vertex count");
    EvalReport report;
    report.s = scheme.max_prefix_bits();
    report.t = scheme.max_parts();
    report.k = scheme.max_codes();
    report.size_bits = scheme_size_bits(scheme);
    const int n = predicate.n();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            const int want = predicate(x, y);
            if (want == PairPredicate::star)
                continue;
            ++report.pairs_checked;
            (want == 1 ? report.one_pairs : report.zero_pairs)++;
            if (decode(scheme, x, y) != want) {
                ++report.errors;
                if (report.pair_stats.size() < 1000)
                    report.pair_stats.push_back({x, y, want, 1, 1.0, 1.0, 1.0});
            }
        }
    }
    return report;
}

void parallel_blocks(int count, int jobs, const std::function<void(int, int)> & fn)
{
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> workers;
    const int per = (count + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        const int begin = j * per;
        const int end = std::min(count, begin + per);
        if (begin >= end)
            break;
        workers.emplace_back(fn, begin, end);
    }
    for (auto & worker : workers)
        worker.join();
}

EvalReport evaluate_sketch(const Sketcher & sketch, const PairPredicate & predicate, int trials,
        std::uint64_t seed, int jobs)
{
    if (trials < 1)
        throw Error("need at least one trial");
    if (! sketch.resample)
        throw Error("sketch does not support resampling");
    if (sketch.vertex_count() != predicate.n())
        throw Error("sketch and predicate disagree on vertex count");

    const int n = predicate.n();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<char> want;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const int value = predicate(x, y);
            if (value == PairPredicate::star)
                continue;
            pairs.emplace_back(x, y);
            want.push_back(static_cast<char>(value));
        }

    std::vector<std::vector<long>> wrong_per_job;
    std::vector<int> max_size_per_job;
    const int job_count = std::max(1, std::min(jobs, trials));
    wrong_per_job.assign(job_count, std::vector<long>(pairs.size(), 0));
    max_size_per_job.assign(job_count, 0);

    const int per = (trials + job_count - 1) / job_count;
    parallel_blocks(job_count, job_count, [&](int jb, int je) {
        for (int j = jb; j < je; ++j) {
            auto & wrong = wrong_per_job[j];
            for (int t = j * per; t < std::min(trials, (j + 1) * per); ++t) {
                Sketcher sample = sketch.resample(keyed_hash(seed, t));
                max_size_per_job[j] = std::max(max_size_per_job[j], sample.size_bits);
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (decode_sketch(sample, pairs[i].first, pairs[i].second) != want[i])
                        ++wrong[i];
            }
        }
    });

    std::vector<long> wrong(pairs.size(), 0);
    EvalReport report;
    for (int j = 0; j < job_count; ++j) {
        report.size_bits = std::max(report.size_bits, max_size_per_job[j]);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            wrong[i] += wrong_per_job[j][i];
    }

    report.randomized = true;
    report.trials = trials;
    report.pairs_checked = static_cast<long>(pairs.size());
    report.pair_stats.reserve(pairs.size());
    long worst = 0;
    long fn_errors = 0, fp_errors = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (want[i] == 1) {
            ++report.one_pairs;
            fn_errors += wrong[i];
        }
        else {
            ++report.zero_pairs;
            fp_errors += wrong[i];
        }
        worst = std::max(worst, wrong[i]);
        report.errors += wrong[i];
        const auto [lo, hi] = wilson_interval(wrong[i], trials);
        report.pair_stats.push_back({pairs[i].first, pairs[i].second, want[i], wrong[i],
            static_cast<double>(wrong[i]) / trials, lo, hi});
    }
    report.max_pair_error = static_cast<double>(worst) / trials;
    report.max_pair_error_hi = wilson_interval(worst, trials).second;
    report.false_negative_rate =
        report.one_pairs == 0 ? 0.0 : static_cast<double>(fn_errors) / (report.one_pairs * static_cast<double>(trials));
    report.false_positive_rate =
        report.zero_pairs == 0 ? 0.0 : static_cast<double>(fp_errors) / (report.zero_pairs * static_cast<double>(trials));
    return report;
}

} // namespace graphlabel
