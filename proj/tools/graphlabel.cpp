#include <graphlabel/adjacency.hpp>
#include <graphlabel/adt.hpp>
#include <graphlabel/bounds.hpp>
#include <graphlabel/error.hpp>
#include <graphlabel/evaluate.hpp>
#include <graphlabel/generators.hpp>
#include <graphlabel/io.hpp>
#include <graphlabel/labels_io.hpp>
#include <graphlabel/rng.hpp>
#include <graphlabel/smalldist.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

using namespace graphlabel;
using nlohmann::ordered_json;

namespace {

struct GlobalOptions {
    std::optional<std::uint64_t> seed_flag;
    int jobs = 1;
    std::string json_out;

    std::uint64_t seed() const
    {
        if (seed_flag)
            return *seed_flag;
        if (const char * env = std::getenv("GRAPHLABEL_SEED"))
            return std::stoull(env);
        return 0;
    }
};

void emit_json(const GlobalOptions & global, const ordered_json & doc)
{
    if (global.json_out.empty())
        return;
    std::ofstream out(global.json_out);
    if (! out)
        throw Error("cannot write " + global.json_out);
    out << doc.dump(2) << '\n';
}

OrderStrategy order_from_name(const std::string & name)
{
    if (name == "degeneracy")
        return OrderStrategy::Degeneracy;
    if (name == "bfs")
        return OrderStrategy::BfsDepth;
    if (name == "exact")
        return OrderStrategy::ExactTiny;
    throw Error("unknown order strategy: " + name);
}

PairPredicate predicate_from_name(const Graph & g, const std::string & name, int r, int r2)
{
    if (name == "adjacency")
        return PairPredicate::adjacency(g);
    if (name == "dist_leq")
        return PairPredicate::dist_leq(g, r);
    if (name == "dist_band")
        return PairPredicate::dist_band(g, r, r2);
    throw Error("unknown predicate: " + name);
}

void print_eval_report(const EvalReport & report)
{
    std::cout << std::left;
    std::cout << std::setw(26) << "pairs checked" << report.pairs_checked << '\n';
    if (! report.randomized) {
        std::cout << std::setw(26) << "errors" << report.errors << '\n'
                  << std::setw(26) << "exact" << (report.exact() ? "yes" : "no") << '\n'
                  << std::setw(26) << "shape (s,t,k)"
                  << "(" << report.s << "," << report.t << "," << report.k << ")" << '\n';
    }
    else {
        std::cout << std::setw(26) << "trials" << report.trials << '\n'
                  << std::setw(26) << "max pair error" << report.max_pair_error << '\n'
                  << std::setw(26) << "  wilson hi" << report.max_pair_error_hi << '\n'
                  << std::setw(26) << "false negative rate" << report.false_negative_rate << '\n'
                  << std::setw(26) << "false positive rate" << report.false_positive_rate << '\n';
    }
    std::cout << std::setw(26) << "label bits (worst)" << report.size_bits << '\n';

    auto worst = report.pair_stats;
    std::sort(worst.begin(), worst.end(), [](const PairStat & a, const PairStat & b) { return a.wrong > b.wrong; });
    int shown = 0;
    for (const auto & stat : worst) {
        if (stat.wrong == 0 || shown == 5)
            break;
        if (shown++ == 0)
            std::cout << "worst pairs (x, y, want, error rate, wilson hi):\n";
        std::cout << "  (" << stat.x << ", " << stat.y << ", " << stat.want << ", " << stat.rate << ", "
                  << stat.wilson_hi << ")\n";
    }
}

ordered_json eval_report_json(const EvalReport & report)
{
    ordered_json doc;
    doc["pairs_checked"] = report.pairs_checked;
    doc["one_pairs"] = report.one_pairs;
    doc["zero_pairs"] = report.zero_pairs;
    doc["size_bits"] = report.size_bits;
    if (! report.randomized) {
        doc["errors"] = report.errors;
        doc["exact"] = report.exact();
        doc["s"] = report.s;
        doc["t"] = report.t;
        doc["k"] = report.k;
    }
    else {
        doc["trials"] = report.trials;
        doc["max_pair_error"] = report.max_pair_error;
        doc["max_pair_error_wilson_hi"] = report.max_pair_error_hi;
        doc["false_negative_rate"] = report.false_negative_rate;
        doc["false_positive_rate"] = report.false_positive_rate;
    }
    return doc;
}

int run_gen(const GlobalOptions & global, const std::string & spec, const std::string & in,
        const std::string & out)
{
    std::optional<Graph> base;
    if (! in.empty())
        base = read_graph(in);
    const Graph g = gen::from_spec(spec, base ? &*base : nullptr);
    write_graph(g, out);
    std::cout << "wrote " << out << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    emit_json(global, {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"out", out}});
    return 0;
}

int run_label(const GlobalOptions & global, const std::string & in, const std::string & kind, int r,
        const std::string & order_name, Vertex root, const std::string & model_path, const std::string & out)
{
    LabelScheme scheme;
    if (kind == "adjacency") {
        scheme = build_adjacency_labels(read_graph(in));
    }
    else if (kind == "distance") {
        const Graph g = read_graph(in);
        scheme = build_distance_labels(g, r, choose_order(g, order_from_name(order_name), r, root));
    }
    else if (kind == "layered") {
        scheme = build_layered_labels(read_graph(in), r);
    }
    else if (kind == "shrubdepth") {
        if (model_path.empty())
            throw Error("shrubdepth labels need --model");
        const ConnectionModel model = ConnectionModel::from_json_file(model_path);
        if (! in.empty())
            validate_model_against(model, read_graph(in));
        scheme = build_shrubdepth_labels(model);
    }
    else {
        throw Error("unknown label kind: " + kind);
    }
    serialize_labels(scheme, out);
    std::cout << "wrote " << out << '\n'
              << "vertices " << scheme.vertex_count() << ", shape (s,t,k) = (" << scheme.max_prefix_bits()
              << "," << scheme.max_parts() << "," << scheme.max_codes() << "), worst label "
              << scheme_size_bits(scheme) << " bits\n";
    emit_json(global,
            {{"out", out}, {"n", scheme.vertex_count()}, {"s", scheme.max_prefix_bits()},
                {"t", scheme.max_parts()}, {"k", scheme.max_codes()}, {"bits", scheme_size_bits(scheme)}});
    return 0;
}

int run_sketch(const GlobalOptions & global, const std::string & labels_path, int w, const std::string & out)
{
    const auto loaded = deserialize_labels(labels_path);
    if (! std::holds_alternative<LabelScheme>(loaded))
        throw Error("sketch compilation needs a label scheme, not a sketch dump");
    const auto & scheme = std::get<LabelScheme>(loaded);
    const Sketcher sk = compile_sketch(scheme, global.seed(), w);
    serialize_labels(sk, out);
    std::cout << "seed " << global.seed() << '\n'
              << "wrote " << out << ": w = " << sk.params.at("w") << ", " << sk.size_bits
              << " bits per vertex (worst), one_sided = " << (sk.one_sided ? "yes" : "no") << '\n';
    emit_json(global,
            {{"out", out}, {"seed", global.seed()}, {"w", sk.params.at("w")}, {"bits", sk.size_bits},
                {"one_sided", sk.one_sided}});
    return 0;
}

int run_eval(const GlobalOptions & global, const std::string & in, const std::string & labels_path,
        const std::string & sketch_path, const std::string & predicate_name, int r, int r2, int trials, int w)
{
    const Graph g = read_graph(in);
    const auto predicate = predicate_from_name(g, predicate_name, r, r2);

    EvalReport report;
    if (! labels_path.empty()) {
        const auto loaded = deserialize_labels(labels_path);
        if (! std::holds_alternative<LabelScheme>(loaded))
            throw Error("--labels expects a label scheme dump; use --sketch for sketches");
        const auto & scheme = std::get<LabelScheme>(loaded);
        if (trials > 0) {
            std::cout << "seed " << global.seed() << '\n';
            report = evaluate_sketch(compile_sketch(scheme, global.seed(), w), predicate, trials,
                    global.seed(), global.jobs);
        }
        else {
            report = evaluate_scheme(scheme, predicate);
        }
    }
    else if (! sketch_path.empty()) {
        const auto loaded = deserialize_labels(sketch_path);
        if (! std::holds_alternative<StoredSketch>(loaded))
            throw Error("--sketch expects a sketch dump; use --labels for schemes");
        const auto & stored = std::get<StoredSketch>(loaded);
        if (stored.vertex_count() != g.vertex_count())
            throw Error("sketch and graph disagree on vertex count");
        report.pairs_checked = 0;
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
                const int want = predicate(x, y);
                if (want == PairPredicate::star)
                    continue;
                ++report.pairs_checked;
                (want == 1 ? report.one_pairs : report.zero_pairs)++;
                if (stored.decode(x, y) != want)
                    ++report.errors;
            }
        report.size_bits = stored.size_bits;
    }
    else {
        throw Error("eval needs --labels or --sketch");
    }
    print_eval_report(report);
    emit_json(global, eval_report_json(report));
    return 0;
}

ordered_json cover_report_json(const CoverReport & report)
{
    ordered_json doc;
    doc["ok"] = report.ok;
    doc["max_weak_diameter"] = report.max_weak_diameter;
    doc["tau"] = report.tau;
    doc["min_covered_radius"] = report.min_covered_radius;
    doc["required_radius"] = report.required_radius;
    doc["violations"] = report.violations;
    return doc;
}

int run_cover(const GlobalOptions & global, const std::string & in, const std::string & kind, int delta,
        Vertex root, const std::string & out)
{
    const Graph g = read_graph(in);
    const Cover cover = kind == "tree" ? tree_sparse_cover(g, root, delta) : greedy_ball_cover(g, delta);
    const auto report = verify_cover(g, cover);
    std::cout << std::left << std::setw(26) << "clusters" << cover.clusters.size() << '\n'
              << std::setw(26) << "max weak diameter" << report.max_weak_diameter << " (<= " << delta << ")\n"
              << std::setw(26) << "multiplicity tau" << report.tau << '\n'
              << std::setw(26) << "covered ball radius" << report.min_covered_radius
              << " (needs " << report.required_radius << ")\n"
              << std::setw(26) << "verdict" << (report.ok ? "pass" : "FAIL") << '\n';

    if (! out.empty()) {
        ordered_json doc;
        doc["version"] = 1;
        doc["delta"] = cover.delta;
        doc["sigma"] = cover.sigma;
        doc["clusters"] = cover.clusters;
        doc["report"] = cover_report_json(report);
        std::ofstream file(out);
        if (! file)
            throw Error("cannot write " + out);
        file << doc.dump(2) << '\n';
        std::cout << "wrote " << out << '\n';
    }
    emit_json(global, cover_report_json(report));
    return 0;
}

int run_partition(const GlobalOptions & global, const std::string & in, double delta, double beta,
        const std::string & gammas_csv, int trials, const std::string & out)
{
    const Graph g = read_graph(in);

    if (! gammas_csv.empty()) {
        std::vector<double> gammas;
        std::stringstream ss(gammas_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            gammas.push_back(std::stod(item));
        std::cout << "seed " << global.seed() << '\n';
        const auto table = measure_padding(g, delta, beta, gammas, trials, global.seed(), global.jobs);
        std::cout << std::left << std::setw(10) << "gamma" << std::setw(12) << "ball radius"
                  << std::setw(14) << "Pr[padded]" << std::setw(12) << "wilson lo" << std::setw(12)
                  << "wilson hi" << '\n';
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            std::cout << std::setw(10) << table.gamma[i] << std::setw(12)
                      << static_cast<int>(gammas[i] * delta) << std::setw(14) << table.prob[i]
                      << std::setw(12) << table.wilson_lo[i] << std::setw(12) << table.wilson_hi[i] << '\n';
            rows.push_back({{"gamma", table.gamma[i]}, {"prob", table.prob[i]},
                {"wilson_lo", table.wilson_lo[i]}, {"wilson_hi", table.wilson_hi[i]}});
        }
        emit_json(global, {{"seed", global.seed()}, {"trials", trials}, {"padding", rows}});
        return 0;
    }

    const Partition part = padded_partition(g, delta, beta, global.seed());
    std::cout << "seed " << global.seed() << '\n'
              << "clusters " << part.center_of.size() << ", max center distance " << part.max_center_dist
              << " (< " << delta / 2 << ")\n";
    if (! out.empty()) {
        ordered_json doc;
        doc["version"] = 1;
        doc["delta"] = delta;
        doc["beta"] = beta;
        doc["seed"] = global.seed();
        doc["max_center_dist"] = part.max_center_dist;
        doc["cluster_of"] = part.cluster_of;
        doc["centers"] = part.center_of;
        std::ofstream file(out);
        if (! file)
            throw Error("cannot write " + out);
        file << doc.dump(2) << '\n';
        std::cout << "wrote " << out << '\n';
    }
    emit_json(global,
            {{"seed", global.seed()}, {"clusters", part.center_of.size()},
                {"max_center_dist", part.max_center_dist}});
    return 0;
}

int run_adt_sc(const GlobalOptions & global, const Graph & g, const std::string & cover_kind, int delta,
        Vertex root, const std::string & out)
{
    const Cover cover = cover_kind == "tree" ? tree_sparse_cover(g, root, delta) : greedy_ball_cover(g, delta);
    const auto cover_report = verify_cover(g, cover);
    const LabelScheme scheme = sc_adt_labels(cover);

    const auto dist = all_pairs_distances(g);
    long near_pairs = 0, near_wrong = 0, far_pairs = 0, far_wrong = 0;
    const int near_radius = cover.delta / cover.sigma;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
            const int d = dist[x][y];
            const int got = decode(scheme, x, y);
            if (d != inf_dist && d <= near_radius) {
                ++near_pairs;
                near_wrong += got == 0;
            }
            else if (d == inf_dist || d > cover.delta) {
                ++far_pairs;
                far_wrong += got == 1;
            }
        }

    std::cout << std::left << std::setw(26) << "cover verdict" << (cover_report.ok ? "pass" : "FAIL") << '\n'
              << std::setw(26) << "tau / label codes" << cover_report.tau << '\n'
              << std::setw(26) << "near pairs (d <= delta/sigma)" << near_pairs << ", wrong " << near_wrong
              << '\n'
              << std::setw(26) << "far pairs (d > delta)" << far_pairs << ", wrong " << far_wrong << '\n';
    if (! out.empty()) {
        serialize_labels(scheme, out);
        std::cout << "wrote " << out << '\n';
    }
    emit_json(global,
            {{"cover_ok", cover_report.ok}, {"tau", cover_report.tau}, {"near_pairs", near_pairs},
                {"near_wrong", near_wrong}, {"far_pairs", far_pairs}, {"far_wrong", far_wrong}});
    return 0;
}

int run_adt_pds(const GlobalOptions & global, const Graph & g, int r, double beta, double delta, int trials,
        const std::string & out)
{
    const PaddedParams params{beta, delta};
    const double alpha = params.alpha();
    const double diameter = r / params.gamma();
    std::cout << "seed " << global.seed() << '\n'
              << "gamma " << params.gamma() << ", alpha " << alpha << ", partition diameter " << diameter
              << '\n';

    const Sketcher sk = pds_adt_sketch(g, r, beta, delta, global.seed());
    const auto dist = all_pairs_distances(g);

    std::vector<std::pair<Vertex, Vertex>> near, far;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
            if (dist[x][y] == inf_dist)
                far.emplace_back(x, y);
            else if (dist[x][y] <= r)
                near.emplace_back(x, y);
            else if (dist[x][y] > diameter)
                far.emplace_back(x, y);
        }

    const int job_count = std::max(1, std::min(global.jobs, trials));
    std::vector<long> near_ok(job_count, 0), far_ok(job_count, 0);
    const int per = (trials + job_count - 1) / job_count;
    parallel_blocks(job_count, job_count, [&](int jb, int je) {
        for (int j = jb; j < je; ++j)
            for (int t = j * per; t < std::min(trials, (j + 1) * per); ++t) {
                const Sketcher sample = sk.resample(keyed_hash(global.seed(), t));
                for (auto [x, y] : near)
                    near_ok[j] += decode_sketch(sample, x, y) == 1;
                for (auto [x, y] : far)
                    far_ok[j] += decode_sketch(sample, x, y) == 0;
            }
    });
    long near_total = 0, far_total = 0;
    for (int j = 0; j < job_count; ++j) {
        near_total += near_ok[j];
        far_total += far_ok[j];
    }
    const double near_rate =
        near.empty() ? 1.0 : static_cast<double>(near_total) / (static_cast<double>(trials) * near.size());
    const double far_rate =
        far.empty() ? 1.0 : static_cast<double>(far_total) / (static_cast<double>(trials) * far.size());

    std::cout << std::left << std::setw(34) << "trials" << trials << '\n'
              << std::setw(34) << ("Pr[decode 1 | d <= " + std::to_string(r) + "]") << near_rate << '\n'
              << std::setw(34) << "Pr[decode 0 | d > alpha r]" << far_rate << '\n'
              << std::setw(34) << "label bits" << sk.size_bits << '\n';
    if (! out.empty()) {
        serialize_labels(sk, out);
        std::cout << "wrote " << out << '\n';
    }
    emit_json(global,
            {{"seed", global.seed()}, {"trials", trials}, {"near_pairs", near.size()},
                {"far_pairs", far.size()}, {"near_rate", near_rate}, {"far_rate", far_rate},
                {"alpha", alpha}, {"gamma", params.gamma()}, {"bits", sk.size_bits}});
    return 0;
}

int run_audit(const GlobalOptions & global, const std::string & in, const std::string & kind, int ell,
        int alpha, int trials, int k)
{
    const Graph g = read_graph(in);
    if (kind == "gadget") {
        const auto report = gadget_audit(g, ell);
        std::cout << std::left << std::setw(26) << "gadget vertices" << report.gadget_n << '\n'
                  << std::setw(26) << "max degree" << report.max_degree << " (<= 3)\n"
                  << std::setw(26) << "pairs checked" << report.pairs_checked << '\n'
                  << std::setw(26) << "sandwich violations" << report.sandwich_violations << '\n'
                  << std::setw(26) << "exact-ell violations" << report.edge_violations << '\n'
                  << std::setw(26) << "verdict" << (report.ok ? "pass" : "FAIL") << '\n';
        emit_json(global,
                {{"gadget_n", report.gadget_n}, {"max_degree", report.max_degree},
                    {"sandwich_violations", report.sandwich_violations},
                    {"edge_violations", report.edge_violations}, {"ok", report.ok}});
        return 0;
    }
    if (kind == "girth") {
        std::cout << "seed " << global.seed() << '\n';
        const auto report = girth_gap_audit(g, alpha, trials, global.seed());
        std::cout << std::left << std::setw(26) << "edges checked" << report.edges_checked << '\n'
                  << std::setw(26) << "violations" << report.violations << '\n'
                  << std::setw(26) << "verdict" << (report.violations == 0 ? "pass" : "FAIL") << '\n';
        emit_json(global, {{"edges_checked", report.edges_checked}, {"violations", report.violations}});
        return 0;
    }
    if (kind == "subdivide") {
        const Graph sub = k_subdivide(g, k);
        const auto base_dist = all_pairs_distances(g);
        long violations = 0, pairs = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            const auto row = bfs_distances(sub, u);
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                ++pairs;
                const long want = base_dist[u][v] == inf_dist
                    ? inf_dist
                    : static_cast<long>(k + 1) * base_dist[u][v];
                if (row.dist[v] != want)
                    ++violations;
            }
        }
        std::cout << std::left << std::setw(26) << "branch pairs" << pairs << '\n'
                  << std::setw(26) << "scaling violations" << violations << '\n'
                  << std::setw(26) << "verdict" << (violations == 0 ? "pass" : "FAIL") << '\n';
        emit_json(global, {{"pairs", pairs}, {"violations", violations}});
        return 0;
    }
    throw Error("unknown audit kind: " + kind);
}

int run_bounds(const GlobalOptions & global, const std::string & kind, const std::string & in, int s,
        double delta, int tables, double n, double alpha, const std::string & cls, int t, int r)
{
    if (kind == "counting") {
        const Graph g = read_graph(in);
        std::cout << "seed " << global.seed() << '\n';
        std::int64_t worst = 0;
        CountingReport last;
        for (int i = 0; i < tables; ++i) {
            last = counting_verifier(g, s, delta, random_decoder_table(s, keyed_hash(global.seed(), i)));
            worst = std::max(worst, last.max_good);
        }
        std::cout << std::left << std::setw(26) << "tables" << tables << '\n'
                  << std::setw(26) << "strings 2^(sn)" << last.strings << '\n'
                  << std::setw(26) << "subgraphs 2^m" << last.subgraphs << '\n'
                  << std::setw(26) << "max good (all tables)" << worst << '\n'
                  << std::setw(26) << "hamming bound" << last.hamming_bound << '\n'
                  << std::setw(26) << "2^(m/2)" << last.half_bound << '\n'
                  << std::setw(26) << "contradiction" << (last.contradiction ? "yes" : "no") << '\n';
        emit_json(global,
                {{"tables", tables}, {"max_good", worst}, {"hamming_bound", last.hamming_bound},
                    {"half_bound", last.half_bound}, {"contradiction", last.contradiction}});
        return 0;
    }
    if (kind == "adt-size") {
        const double value = adt_size_lower_bound(n, alpha);
        std::cout << "lower bound n^(1/alpha)/9 = " << std::setprecision(12) << value << '\n';
        emit_json(global, {{"n", n}, {"alpha", alpha}, {"bound", value}});
        return 0;
    }
    if (kind == "wcol") {
        const std::int64_t value =
            cls == "planar" ? wcol_upper_bound_planar(r) : wcol_upper_bound_minor_free(t, r);
        std::cout << "wcol_" << r << " upper bound = " << value << '\n';
        emit_json(global, {{"class", cls}, {"t", t}, {"r", r}, {"bound", value}});
        return 0;
    }
    throw Error("unknown bounds kind: " + kind);
}

int run_bench(const GlobalOptions & global, const std::string & suite_path)
{
    std::ifstream suite(suite_path);
    if (! suite)
        throw Error("cannot read " + suite_path);

    std::cout << std::left << std::setw(10) << "name" << std::setw(20) << "spec" << std::setw(4) << "r"
              << std::setw(10) << "n" << std::setw(14) << "adj build ms" << std::setw(14) << "adj ns/pair"
              << std::setw(14) << "dist build ms" << std::setw(14) << "dist ns/pair" << '\n';

    ordered_json rows = ordered_json::array();
    std::string line;
    while (std::getline(suite, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        std::string name, spec;
        int r = 0;
        if (! (fields >> name >> spec >> r))
            throw Error("malformed bench suite line: " + line);

        const Graph g = gen::from_spec(spec);
        using clock = std::chrono::steady_clock;

        const auto t0 = clock::now();
        const LabelScheme adj = build_adjacency_labels(g);
        const auto t1 = clock::now();
        const auto order = choose_order(g, OrderStrategy::Degeneracy);
        const LabelScheme dist = build_distance_labels(g, r, order);
        const auto t2 = clock::now();

        // decode timing over a fixed pseudo-random pair sample
        Rng rng(global.seed());
        const int samples = 200000;
        std::vector<std::pair<Vertex, Vertex>> pairs(samples);
        for (auto & p : pairs) {
            p.first = static_cast<Vertex>(rng.below(g.vertex_count()));
            p.second = static_cast<Vertex>(rng.below(g.vertex_count()));
            if (p.first == p.second)
                p.second = (p.second + 1) % g.vertex_count();
        }
        long acc = 0;
        const auto t3 = clock::now();
        for (auto [x, y] : pairs)
            acc += decode(adj, x, y);
        const auto t4 = clock::now();
        for (auto [x, y] : pairs)
            acc += decode(dist, x, y);
        const auto t5 = clock::now();
        volatile long sink = acc;
        (void)sink;

        const auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count() / 1000.0;
        };
        const double adj_build = ms(t0, t1), dist_build = ms(t1, t2);
        const double adj_pair = ms(t3, t4) * 1e6 / samples, dist_pair = ms(t4, t5) * 1e6 / samples;

        std::cout << std::setw(10) << name << std::setw(20) << spec << std::setw(4) << r << std::setw(10)
                  << g.vertex_count() << std::setw(14) << adj_build << std::setw(14) << adj_pair
                  << std::setw(14) << dist_build << std::setw(14) << dist_pair << '\n';
        rows.push_back({{"name", name}, {"spec", spec}, {"r", r}, {"n", g.vertex_count()},
            {"adj_build_ms", adj_build}, {"adj_ns_per_pair", adj_pair}, {"dist_build_ms", dist_build},
            {"dist_ns_per_pair", dist_pair}});
    }
    emit_json(global, {{"bench", rows}});
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"graph labelling and sketching toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    GlobalOptions global;
    app.add_option("--seed", global.seed_flag, "seed for randomized commands (env GRAPHLABEL_SEED)");
    app.add_option("--jobs", global.jobs, "worker threads for trial fan-out")->check(CLI::PositiveNumber);
    app.add_option("--json", global.json_out, "also write the report as JSON to this path");
    std::string write_config;
    app.add_option("--write-config", write_config, "write the parsed configuration to this path")
        ->configurable(false);

    int exit_code = 0;

    // gen
    auto * cmd_gen = app.add_subcommand("gen", "generate or transform a graph");
    struct {
        std::string spec, in, out;
    } gen_opt;
    cmd_gen->add_option("--spec", gen_opt.spec, "generator spec, e.g. hypercube:4")->required();
    cmd_gen->add_option("--in", gen_opt.in, "base graph for transforming specs");
    cmd_gen->add_option("--out", gen_opt.out, "edge-list output path")->required();
    cmd_gen->callback([&]() { exit_code = run_gen(global, gen_opt.spec, gen_opt.in, gen_opt.out); });

    // label
    auto * cmd_label = app.add_subcommand("label", "build a labelling scheme");
    struct {
        std::string in, kind, order = "degeneracy", model, out;
        int r = 1;
        int root = 0;
    } label_opt;
    cmd_label->add_option("--in", label_opt.in, "input edge list");
    cmd_label->add_option("--kind", label_opt.kind, "adjacency | distance | layered | shrubdepth")->required();
    cmd_label->add_option("--r", label_opt.r, "distance threshold");
    cmd_label->add_option("--order", label_opt.order, "degeneracy | bfs | exact");
    cmd_label->add_option("--root", label_opt.root, "root for bfs order");
    cmd_label->add_option("--model", label_opt.model, "connection model JSON (shrubdepth)");
    cmd_label->add_option("--out", label_opt.out, "label dump path")->required();
    cmd_label->callback([&]() {
        exit_code = run_label(global, label_opt.in, label_opt.kind, label_opt.r, label_opt.order,
                label_opt.root, label_opt.model, label_opt.out);
    });

    // sketch
    auto * cmd_sketch = app.add_subcommand("sketch", "hash-compile a labelling scheme");
    struct {
        std::string labels, out;
        int w = 0;
    } sketch_opt;
    cmd_sketch->add_option("--labels", sketch_opt.labels, "label dump to compile")->required();
    cmd_sketch->add_option("--w", sketch_opt.w, "hash range (default 3k^2)");
    cmd_sketch->add_option("--out", sketch_opt.out, "sketch dump path")->required();
    cmd_sketch->callback([&]() { exit_code = run_sketch(global, sketch_opt.labels, sketch_opt.w, sketch_opt.out); });

    // eval
    auto * cmd_eval = app.add_subcommand("eval", "evaluate labels or sketches against a predicate");
    struct {
        std::string in, labels, sketch, predicate = "adjacency";
        int r = 1, r2 = 1, trials = 0, w = 0;
    } eval_opt;
    cmd_eval->add_option("--in", eval_opt.in, "input edge list")->required();
    cmd_eval->add_option("--labels", eval_opt.labels, "label dump");
    cmd_eval->add_option("--sketch", eval_opt.sketch, "sketch dump");
    cmd_eval->add_option("--predicate", eval_opt.predicate, "adjacency | dist_leq | dist_band");
    cmd_eval->add_option("--r", eval_opt.r, "predicate radius");
    cmd_eval->add_option("--r2", eval_opt.r2, "outer radius for dist_band");
    cmd_eval->add_option("--trials", eval_opt.trials, "Monte Carlo trials (compiles the scheme per trial)");
    cmd_eval->add_option("--w", eval_opt.w, "hash range for --trials");
    cmd_eval->callback([&]() {
        exit_code = run_eval(global, eval_opt.in, eval_opt.labels, eval_opt.sketch, eval_opt.predicate,
                eval_opt.r, eval_opt.r2, eval_opt.trials, eval_opt.w);
    });

    // cover
    auto * cmd_cover = app.add_subcommand("cover", "build and verify a sparse cover");
    struct {
        std::string in, kind = "greedy", out;
        int delta = 8;
        int root = 0;
    } cover_opt;
    cmd_cover->add_option("--in", cover_opt.in, "input edge list")->required();
    cmd_cover->add_option("--kind", cover_opt.kind, "tree | greedy");
    cmd_cover->add_option("--delta", cover_opt.delta, "weak diameter bound")->required();
    cmd_cover->add_option("--root", cover_opt.root, "root for the tree construction");
    cmd_cover->add_option("--out", cover_opt.out, "cover JSON path");
    cmd_cover->callback([&]() {
        exit_code = run_cover(global, cover_opt.in, cover_opt.kind, cover_opt.delta, cover_opt.root,
                cover_opt.out);
    });

    // partition
    auto * cmd_part = app.add_subcommand("partition", "sample a low-diameter random partition");
    struct {
        std::string in, out, gammas;
        double delta = 8, beta = 4;
        int trials = 1000;
    } part_opt;
    cmd_part->add_option("--in", part_opt.in, "input edge list")->required();
    cmd_part->add_option("--delta", part_opt.delta, "cluster diameter bound")->required();
    cmd_part->add_option("--beta", part_opt.beta, "exponential rate parameter")->required();
    cmd_part->add_option("--gammas", part_opt.gammas, "measure padding at these gammas (csv) instead");
    cmd_part->add_option("--trials,--pad-trials", part_opt.trials, "trials for --gammas");
    cmd_part->add_option("--out", part_opt.out, "partition JSON path");
    cmd_part->callback([&]() {
        exit_code = run_partition(global, part_opt.in, part_opt.delta, part_opt.beta, part_opt.gammas,
                part_opt.trials, part_opt.out);
    });

    // adt
    auto * cmd_adt = app.add_subcommand("adt", "approximate distance threshold schemes");
    struct {
        std::string in, kind = "sc", cover = "greedy", out;
        int root = 0, r = 3, trials = 1000;
        // --delta is the cover weak diameter for sc, the padding range for pds
        double delta = 8, beta = 4;
    } adt_opt;
    cmd_adt->add_option("--in", adt_opt.in, "input edge list")->required();
    cmd_adt->add_option("--kind", adt_opt.kind, "sc (sparse cover) | pds (padded decomposition)");
    cmd_adt->add_option("--cover", adt_opt.cover, "cover construction for sc: tree | greedy");
    cmd_adt->add_option("--delta", adt_opt.delta, "weak diameter (sc) or padding range bound (pds)");
    cmd_adt->add_option("--root", adt_opt.root, "tree cover root");
    cmd_adt->add_option("--r", adt_opt.r, "distance threshold (pds)");
    cmd_adt->add_option("--beta", adt_opt.beta, "padded decomposition rate (pds)");
    cmd_adt->add_option("--trials,--pad-trials", adt_opt.trials, "Monte Carlo trials (pds)");
    cmd_adt->add_option("--out", adt_opt.out, "label/sketch dump path");
    cmd_adt->callback([&]() {
        const Graph g = read_graph(adt_opt.in);
        if (adt_opt.kind == "sc")
            exit_code = run_adt_sc(global, g, adt_opt.cover, static_cast<int>(adt_opt.delta), adt_opt.root,
                    adt_opt.out);
        else if (adt_opt.kind == "pds")
            exit_code =
                run_adt_pds(global, g, adt_opt.r, adt_opt.beta, adt_opt.delta, adt_opt.trials, adt_opt.out);
        else
            throw Error("unknown adt kind: " + adt_opt.kind);
    });

    // audit
    auto * cmd_audit = app.add_subcommand("audit", "exhaustive construction audits");
    struct {
        std::string in, kind;
        int ell = 0, alpha = 3, trials = 100, k = 1;
    } audit_opt;
    cmd_audit->add_option("--in", audit_opt.in, "input edge list")->required();
    cmd_audit->add_option("--kind", audit_opt.kind, "gadget | girth | subdivide")->required();
    cmd_audit->add_option("--ell", audit_opt.ell, "gadget path length");
    cmd_audit->add_option("--alpha", audit_opt.alpha, "girth gap threshold");
    cmd_audit->add_option("--trials", audit_opt.trials, "random subgraph trials");
    cmd_audit->add_option("--k", audit_opt.k, "subdivision count");
    cmd_audit->callback([&]() {
        exit_code = run_audit(global, audit_opt.in, audit_opt.kind, audit_opt.ell, audit_opt.alpha,
                audit_opt.trials, audit_opt.k);
    });

    // bounds
    auto * cmd_bounds = app.add_subcommand("bounds", "lower-bound verifiers and calculators");
    struct {
        std::string kind, in, cls = "planar";
        int s = 1, tables = 10, t = 5, r = 1;
        double delta = 1.0 / 6, n = 512, alpha = 2;
    } bounds_opt;
    cmd_bounds->add_option("--kind", bounds_opt.kind, "counting | adt-size | wcol")->required();
    cmd_bounds->add_option("--in", bounds_opt.in, "input edge list (counting)");
    cmd_bounds->add_option("--s", bounds_opt.s, "bits per vertex (counting)");
    cmd_bounds->add_option("--delta", bounds_opt.delta, "error fraction (counting)");
    cmd_bounds->add_option("--tables", bounds_opt.tables, "number of seeded decoder tables");
    cmd_bounds->add_option("--n", bounds_opt.n, "vertex count (adt-size)");
    cmd_bounds->add_option("--alpha", bounds_opt.alpha, "approximation ratio (adt-size)");
    cmd_bounds->add_option("--class", bounds_opt.cls, "planar | minor (wcol)");
    cmd_bounds->add_option("--t", bounds_opt.t, "excluded clique order (wcol minor)");
    cmd_bounds->add_option("--r", bounds_opt.r, "radius (wcol)");
    cmd_bounds->callback([&]() {
        exit_code = run_bounds(global, bounds_opt.kind, bounds_opt.in, bounds_opt.s, bounds_opt.delta,
                bounds_opt.tables, bounds_opt.n, bounds_opt.alpha, bounds_opt.cls, bounds_opt.t,
                bounds_opt.r);
    });

    // bench
    auto * cmd_bench = app.add_subcommand("bench", "build/decode timings over the committed suite");
    struct {
        std::string suite = "bench/suite.txt";
    } bench_opt;
    cmd_bench->add_option("--suite", bench_opt.suite, "instance suite file");
    cmd_bench->callback([&]() { exit_code = run_bench(global, bench_opt.suite); });

    try {
        app.parse(argc, argv);
        if (! write_config.empty()) {
            std::ofstream out(write_config);
            out << app.config_to_str(false, true);
        }
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 64;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
