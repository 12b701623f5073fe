#include <graphlabel/adt.hpp>

#include <graphlabel/error.hpp>
#include <graphlabel/evaluate.hpp>
#include <graphlabel/rng.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace graphlabel {

namespace {
    const double log2_3_2 = std::log2(1.5);
}

Partition padded_partition_with_dist(const std::vector<std::vector<int>> & dist, double delta, double beta,
        std::uint64_t seed)
{
    if (delta < 2)
        throw Error("partition needs delta >= 2");
    if (beta <= 0)
        throw Error("beta must be positive");
    const int n = static_cast<int>(dist.size());
    const double rate = beta / delta;
    const double cap = delta / 2;

    Rng rng(seed);
    std::vector<double> shift(n);
    for (Vertex u = 0; u < n; ++u)
        shift[u] = rng.truncated_exponential(rate, cap);

    // winner[v] = argmin_u dist(u,v) - s_u, ties to the smaller id (u runs
    // ascending with a strict compare); since u = v scores -s_v <= 0, the
    // winner is within s_u < delta/2 of v.
    std::vector<Vertex> winner(n, -1);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    for (Vertex u = 0; u < n; ++u) {
        const auto & row = dist[u];
        const double s = shift[u];
        for (Vertex v = 0; v < n; ++v) {
            if (row[v] == inf_dist)
                continue;
            const double value = row[v] - s;
            if (value < best[v]) {
                best[v] = value;
                winner[v] = u;
            }
        }
    }

    Partition part;
    part.delta = delta;
    part.cluster_of.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        Vertex u = winner[v];
        if (part.cluster_of[u] == -1) {
            part.cluster_of[u] = static_cast<int>(part.center_of.size());
            part.center_of.push_back(u);
        }
        part.cluster_of[v] = part.cluster_of[u];
        part.max_center_dist = std::max(part.max_center_dist, dist[u][v]);
    }
    return part;
}

Partition padded_partition(const Graph & g, double delta, double beta, std::uint64_t seed)
{
    return padded_partition_with_dist(all_pairs_distances(g), delta, beta, seed);
}

PaddingTable measure_padding(const Graph & g, double delta, double beta, const std::vector<double> & gammas,
        int trials, std::uint64_t seed, int jobs)
{
    if (trials < 1)
        throw Error("need at least one trial");
    const int n = g.vertex_count();
    const auto dist = all_pairs_distances(g);

    // Ball radii of interest, and per vertex the others sorted by distance so
    // the largest monochromatic radius is a prefix scan.
    std::vector<int> radii;
    for (double gamma : gammas) {
        if (gamma < 0)
            throw Error("gamma must be nonnegative");
        radii.push_back(static_cast<int>(std::floor(gamma * delta)));
    }
    const int max_radius = radii.empty() ? 0 : *std::max_element(radii.begin(), radii.end());

    std::vector<std::vector<Vertex>> near(n); // within max_radius, sorted by distance
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v)
            if (v != u && dist[u][v] <= max_radius)
                near[u].push_back(v);
        std::sort(near[u].begin(), near[u].end(),
                [&](Vertex a, Vertex b) { return dist[u][a] < dist[u][b]; });
    }

    // padded_count[u][gi]: trials where B(u, radii[gi]) stayed in one cluster
    const int job_count = std::max(1, std::min(jobs, trials));
    std::vector<std::vector<std::vector<long>>> counts(
            job_count, std::vector<std::vector<long>>(n, std::vector<long>(radii.size(), 0)));
    const int per = (trials + job_count - 1) / job_count;
    parallel_blocks(job_count, job_count, [&](int jb, int je) {
        for (int j = jb; j < je; ++j) {
            for (int t = j * per; t < std::min(trials, (j + 1) * per); ++t) {
                const auto part = padded_partition_with_dist(dist, delta, beta, keyed_hash(seed, t));
                for (Vertex u = 0; u < n; ++u) {
                    int mono_radius = inf_dist; // largest fully monochromatic radius
                    for (Vertex v : near[u])
                        if (part.cluster_of[v] != part.cluster_of[u]) {
                            mono_radius = dist[u][v] - 1;
                            break;
                        }
                    for (std::size_t gi = 0; gi < radii.size(); ++gi)
                        if (radii[gi] <= mono_radius)
                            ++counts[j][u][gi];
                }
            }
        }
    });

    PaddingTable table;
    table.gamma = gammas;
    for (std::size_t gi = 0; gi < radii.size(); ++gi) {
        long worst = trials;
        for (Vertex u = 0; u < n; ++u) {
            long total = 0;
            for (int j = 0; j < job_count; ++j)
                total += counts[j][u][gi];
            worst = std::min(worst, total);
        }
        table.prob.push_back(static_cast<double>(worst) / trials);
        auto [lo, hi] = wilson_interval(worst, trials);
        table.wilson_lo.push_back(lo);
        table.wilson_hi.push_back(hi);
    }
    return table;
}

double PaddedParams::gamma() const { return std::min(delta, log2_3_2 / beta); }

double PaddedParams::alpha() const { return std::max(1.0 / delta, beta / log2_3_2); }

namespace {
    Sketcher draw_pds_sketch(std::shared_ptr<const std::vector<std::vector<int>>> dist, int r, double beta,
            double delta, std::uint64_t seed)
    {
        const PaddedParams params{beta, delta};
        const double gamma = params.gamma();
        const double diameter = r / gamma;
        const auto part = padded_partition_with_dist(*dist, diameter, beta, keyed_hash(seed, 0x9d5));

        Rng rng(keyed_hash(seed, 0x1d5));
        std::vector<std::uint64_t> id(part.center_of.size());
        for (auto & value : id)
            value = 1 + rng.below(3);

        Sketcher sk;
        sk.decoder_id = "id_equality";
        sk.params["r"] = r;
        sk.one_sided = false;
        sk.size_bits = 2;
        sk.seed = seed;
        const int n = static_cast<int>(dist->size());
        for (Vertex v = 0; v < n; ++v) {
            Bits bits;
            append_bits(bits, id[part.cluster_of[v]], 2);
            sk.bits.push_back(std::move(bits));
        }
        sk.resample = [dist = std::move(dist), r, beta, delta](std::uint64_t s) {
            return draw_pds_sketch(dist, r, beta, delta, s);
        };
        return sk;
    }
}

Sketcher pds_adt_sketch(const Graph & g, int r, double beta, double delta, std::uint64_t seed)
{
    if (beta <= 0 || delta <= 0)
        throw Error("beta and delta must be positive");
    if (r < 1)
        throw Error("radius must be at least 1");
    auto dist = std::make_shared<const std::vector<std::vector<int>>>(all_pairs_distances(g));
    return draw_pds_sketch(std::move(dist), r, beta, delta, seed);
}

PaddedParams preset_params_minor_free(int t)
{
    if (t < 4)
        throw Error("minor order must be at least 4");
    return PaddedParams{320.0 * t, 1.0 / 160.0};
}

PaddedParams preset_params_genus(int g)
{
    if (g < 0)
        throw Error("genus must be nonnegative");
    // Graphs of Euler genus g exclude any complete graph needing larger
    // genus; the smallest such K_t gives a minor-free preset. g = 0 lands on
    // the K_5 preset.
    int t = 5;
    while ((t - 3) * (t - 4) <= 12 * g)
        ++t;
    return preset_params_minor_free(t);
}

} // namespace graphlabel
